#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mf1 {

/// Root mean squared componentwise difference. Throws on an empty sequence.
double rmsd(std::span<const std::pair<double, double>> pairs);

/// Fractional ranks (1-based), ties replaced by the mean rank of the group.
std::vector<double> fractional_ranks(std::span<const double> values);

/// Product-moment correlation. Requires equal lengths >= 2 (throws
/// otherwise); returns nullopt when either sequence has zero variance.
std::optional<double> pearson(std::span<const double> xs,
                              std::span<const double> ys);

/// Pearson correlation of the fractional ranks, ties averaged.
std::optional<double> spearman(std::span<const double> xs,
                               std::span<const double> ys);

}  // namespace mf1
