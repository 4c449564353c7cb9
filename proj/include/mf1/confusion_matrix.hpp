#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mf1 {

/// A labelled sample: what the classifier said and what the annotator said.
struct PredictionPair {
    std::size_t predicted;
    std::size_t gold;
};

/// Square table of prediction counts. Cell (i, j) counts samples predicted
/// as class i whose gold label is j (rows = predicted, columns = gold).
/// Immutable after construction; all queries are pure and thread-safe.
class ConfusionMatrix {
public:
    /// Build from row-major cell counts. Throws std::invalid_argument if
    /// n == 0 or cells.size() != n*n.
    ConfusionMatrix(std::size_t n, std::vector<std::uint64_t> cells);

    /// Count (predicted, gold) pairs into an n x n matrix. Throws
    /// std::out_of_range naming the first offending pair if any index >= n.
    static ConfusionMatrix from_pairs(std::span<const PredictionPair> pairs,
                                      std::size_t n);

    std::size_t size() const { return n_; }
    std::uint64_t at(std::size_t predicted, std::size_t gold) const;

    /// Total predictions for class i (denominator of precision).
    std::uint64_t row_sum(std::size_t i) const;
    /// Total gold occurrences of class i (denominator of recall).
    std::uint64_t col_sum(std::size_t i) const;
    std::uint64_t total() const;

    const std::vector<std::uint64_t>& cells() const { return cells_; }

private:
    std::size_t n_;
    std::vector<std::uint64_t> cells_;     // row-major
    std::vector<std::uint64_t> row_sums_;  // exact integer caches
    std::vector<std::uint64_t> col_sums_;
};

/// Per-class precision/recall/F1 triple.
struct ClassMetrics {
    std::size_t class_index;
    double precision;
    double recall;
    double f1;
};

/// 2ab/(a+b), with H(a, a) = a computed exactly and H(0, 0) = 0.
double harmonic_mean(double a, double b);

/// m_ii over the row-i sum; 0 when the row sum is 0.
double precision(const ConfusionMatrix& cm, std::size_t i);
/// m_ii over the column-i sum; 0 when the column sum is 0.
double recall(const ConfusionMatrix& cm, std::size_t i);
/// Harmonic mean of precision and recall; 0 when both are 0.
double f1_class(const ConfusionMatrix& cm, std::size_t i);

/// All three metrics for every class, index-aligned.
std::vector<ClassMetrics> per_class_metrics(const ConfusionMatrix& cm);

}  // namespace mf1
