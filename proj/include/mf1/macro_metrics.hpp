#pragma once

#include <cstddef>
#include <cstdint>

#include "mf1/confusion_matrix.hpp"

namespace mf1 {

/// Gap below which the two macro aggregations are treated as identical.
inline constexpr double kDivergenceTolerance = 1e-12;

/// Both macro-F1 aggregations of one matrix, their gap computed two ways,
/// and whether the gap exceeds kDivergenceTolerance.
struct MacroReport {
    double averaged_f1;       // arithmetic mean of per-class F1
    double f1_of_averages;    // harmonic mean of mean precision and mean recall
    double delta_direct;      // f1_of_averages - averaged_f1
    double delta_closed_form; // same quantity via the pairwise formula
    bool diverges;
};

/// Class counts for the boundary precision/recall profile that maximises
/// the gap: recall_only classes sit at (P, R) = (0, 1), precision_only
/// classes at (P, R) = (1, 0).
struct ExtremalConfig {
    std::size_t recall_only;
    std::size_t precision_only;
    std::size_t class_count;
};

/// Arithmetic mean over per-class F1 scores. Classes with P + R = 0
/// contribute 0 but still count toward n.
double averaged_f1(const ConfusionMatrix& cm);

/// Harmonic mean of mean precision and mean recall; 0 when both means are 0.
double f1_of_averages(const ConfusionMatrix& cm);

/// f1_of_averages(cm) - averaged_f1(cm). Nonnegative for every matrix.
double delta_direct(const ConfusionMatrix& cm);

/// The same gap evaluated as a sum over class pairs:
///   (1 / (n * sum(P + R))) * sum_{x,y} (PxRy - PyRx)^2 / ((Px+Rx)(Py+Ry))
/// restricted to classes with P + R > 0. Returns 0 when no class qualifies.
double delta_closed_form(const ConfusionMatrix& cm);

/// True iff some class has precision != recall, decided by exact integer
/// comparison of row and column sums (never by float equality).
bool divergence_condition(const ConfusionMatrix& cm);

/// Least upper bound of the gap over all n-class matrices:
/// 0.5 for even n, 0.5 - 1/(2n^2) for odd n. Throws for n < 2.
double supremum_bound(std::size_t n);

/// Gap of a boundary configuration: 2 * recall_only * precision_only / n^2.
/// Throws if recall_only + precision_only != class_count or class_count < 2.
double extremal_delta(const ExtremalConfig& cfg);

/// Matrix family whose per-class profile approaches the extremal
/// configuration as z grows: 2x2 blocks [[1,0],[z,1]] down the diagonal,
/// with a final 3x3 block [[1,0,0],[z,1,z],[0,0,1]] when n is odd.
/// Throws for n < 2.
ConfusionMatrix extremal_matrix(std::size_t n, std::uint64_t z);

/// All gap quantities of one matrix in a single record.
MacroReport macro_report(const ConfusionMatrix& cm);

}  // namespace mf1
