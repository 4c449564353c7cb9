#include "mf1/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mf1 {

double rmsd(std::span<const std::pair<double, double>> pairs) {
    if (pairs.empty()) {
        throw std::invalid_argument("rmsd of an empty sequence");
    }
    double acc = 0.0;
    for (const auto& [a, b] : pairs) {
        const double d = a - b;
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(pairs.size()));
}

std::vector<double> fractional_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] < values[b];
    });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        // tie group spans sorted positions [i, j]; 1-based mean rank
        const double mean_rank = static_cast<double>(i + j) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = mean_rank;
        }
        i = j + 1;
    }
    return ranks;
}

std::optional<double> pearson(std::span<const double> xs,
                              std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("correlation needs sequences of equal length");
    }
    const std::size_t n = xs.size();
    if (n < 2) {
        throw std::invalid_argument("correlation needs at least two points");
    }
    const double nd = static_cast<double>(n);
    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= nd;
    y_mean /= nd;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - x_mean;
        const double dy = ys[i] - y_mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return std::nullopt;  // undefined, not zero
    }
    return sxy / std::sqrt(sxx * syy);
}

std::optional<double> spearman(std::span<const double> xs,
                               std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("correlation needs sequences of equal length");
    }
    const auto rx = fractional_ranks(xs);
    const auto ry = fractional_ranks(ys);
    return pearson(rx, ry);
}

}  // namespace mf1
