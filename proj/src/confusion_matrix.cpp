#include "mf1/confusion_matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mf1 {

ConfusionMatrix::ConfusionMatrix(std::size_t n, std::vector<std::uint64_t> cells)
    : n_(n), cells_(std::move(cells)) {
    if (n_ == 0) {
        throw std::invalid_argument("confusion matrix needs at least one class");
    }
    if (cells_.size() != n_ * n_) {
        throw std::invalid_argument(
            "expected " + std::to_string(n_ * n_) + " cells for " +
            std::to_string(n_) + " classes, got " + std::to_string(cells_.size()));
    }
    row_sums_.assign(n_, 0);
    col_sums_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const std::uint64_t c = cells_[i * n_ + j];
            row_sums_[i] += c;
            col_sums_[j] += c;
        }
    }
}

ConfusionMatrix ConfusionMatrix::from_pairs(std::span<const PredictionPair> pairs,
                                            std::size_t n) {
    std::vector<std::uint64_t> cells(n * n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [predicted, gold] = pairs[k];
        if (predicted >= n || gold >= n) {
            throw std::out_of_range(
                "pair " + std::to_string(k) + " = (predicted " +
                std::to_string(predicted) + ", gold " + std::to_string(gold) +
                ") outside class range [0, " + std::to_string(n) + ")");
        }
        ++cells[predicted * n + gold];
    }
    return ConfusionMatrix(n, std::move(cells));
}

std::uint64_t ConfusionMatrix::at(std::size_t predicted, std::size_t gold) const {
    if (predicted >= n_ || gold >= n_) {
        throw std::out_of_range("cell index outside class range");
    }
    return cells_[predicted * n_ + gold];
}

std::uint64_t ConfusionMatrix::row_sum(std::size_t i) const {
    if (i >= n_) {
        throw std::out_of_range("row index outside class range");
    }
    return row_sums_[i];
}

std::uint64_t ConfusionMatrix::col_sum(std::size_t i) const {
    if (i >= n_) {
        throw std::out_of_range("column index outside class range");
    }
    return col_sums_[i];
}

std::uint64_t ConfusionMatrix::total() const {
    return std::accumulate(row_sums_.begin(), row_sums_.end(),
                           std::uint64_t{0});
}

double harmonic_mean(double a, double b) {
    if (a == b) {
        return a;  // exact, and covers the 0/0 convention
    }
    return 2.0 * a * b / (a + b);
}

double precision(const ConfusionMatrix& cm, std::size_t i) {
    const std::uint64_t denom = cm.row_sum(i);
    if (denom == 0) {
        return 0.0;
    }
    return static_cast<double>(cm.at(i, i)) / static_cast<double>(denom);
}

double recall(const ConfusionMatrix& cm, std::size_t i) {
    const std::uint64_t denom = cm.col_sum(i);
    if (denom == 0) {
        return 0.0;
    }
    return static_cast<double>(cm.at(i, i)) / static_cast<double>(denom);
}

double f1_class(const ConfusionMatrix& cm, std::size_t i) {
    const double p = precision(cm, i);
    const double r = recall(cm, i);
    if (p + r == 0.0) {
        return 0.0;
    }
    return harmonic_mean(p, r);
}

std::vector<ClassMetrics> per_class_metrics(const ConfusionMatrix& cm) {
    std::vector<ClassMetrics> out;
    out.reserve(cm.size());
    for (std::size_t i = 0; i < cm.size(); ++i) {
        const double p = precision(cm, i);
        const double r = recall(cm, i);
        const double f = (p + r == 0.0) ? 0.0 : harmonic_mean(p, r);
        out.push_back({i, p, r, f});
    }
    return out;
}

}  // namespace mf1
