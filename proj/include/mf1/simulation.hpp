#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mf1/macro_metrics.hpp"
#include "mf1/rng.hpp"

namespace mf1 {

/// How predictions are drawn for a gold label.
struct ClassifierSpec {
    enum class Kind { uniform_random, accuracy_biased };
    Kind kind = Kind::uniform_random;
    double correct_probability = 0.0;  // x, in [1/n, 1]
    double error_skew = 0.0;           // y, in [0, 1]

    static ClassifierSpec uniform() { return {}; }
    static ClassifierSpec biased(double x, double y) {
        return {Kind::accuracy_biased, x, y};
    }
};

struct ExperimentConfig {
    std::size_t class_count = 2;
    std::size_t dataset_size = 1000;
    std::size_t trials = 1000;
    std::vector<double> class_distribution;  // must sum to 1 within 1e-9
    ClassifierSpec classifier;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// One macro report per trial plus the cross-trial summary statistics.
struct TrialStats {
    std::vector<MacroReport> reports;
    double rmsd = 0.0;
    std::optional<double> pearson;
    std::optional<double> spearman;
};

enum class SweepMode {
    label_skew,  // skewed gold labels, errors spread evenly
    error_skew,  // uniform gold labels, errors skewed toward high classes
};

/// Mean delta and both macro means per (x, y) grid cell. Cells are stored
/// row-major with y as the row index: cell (ix, iy) lives at
/// iy * x_values.size() + ix.
struct SweepResult {
    std::vector<double> x_values;
    std::vector<double> y_values;
    std::vector<double> mean_delta;
    std::vector<double> mean_averaged_f1;
    std::vector<double> mean_f1_of_averages;

    std::size_t cell(std::size_t ix, std::size_t iy) const {
        return iy * x_values.size() + ix;
    }
};

/// size labels drawn independently from dist. Throws if dist is empty, has
/// a negative entry, or does not sum to 1 within 1e-9.
std::vector<std::size_t> sample_gold_labels(const std::vector<double>& dist,
                                            std::size_t size, SplitMix64& rng);

/// One prediction per gold label, uniform over [0, n), ignoring gold.
std::vector<std::size_t> uniform_random_classifier(
    const std::vector<std::size_t>& gold, std::size_t n, SplitMix64& rng);

/// Class distribution interpolating between uniform (skew 0) and
/// proportional-to-index (skew 1): p_i = (1-y)/n + y*i/(n(n+1)/2) with
/// 1-based i. Throws if skew is outside [0, 1] or n == 0.
std::vector<double> skewed_label_distribution(std::size_t n, double skew);

/// Analytic prediction distribution of the biased classifier for one gold
/// label: the gold class gets x; each other class j gets the interpolation
/// between even (1-x)/(n-1) at y=0 and proportional j*(1-x)/(n(n+1)/2 - i)
/// at y=1, with 1-based i and j. The entries sum to 1. Throws on
/// out-of-range x, y, or gold.
std::vector<double> accuracy_biased_weights(std::size_t n,
                                            double correct_probability,
                                            double error_skew,
                                            std::size_t gold);

/// One draw from accuracy_biased_weights.
std::size_t accuracy_biased_classifier(std::size_t gold, std::size_t n,
                                       double correct_probability,
                                       double error_skew, SplitMix64& rng);

/// Run cfg.trials independent trials (sample gold labels, classify, build
/// the confusion matrix, report) and summarise. Trial k uses the sub-seed
/// derive(cfg.seed, k), so the result is identical for any thread count.
TrialStats run_trials(const ExperimentConfig& cfg);

/// Mean delta and macro means over trials_per_cell trials for every (x, y)
/// cell. x values must lie in [1/n, 1], y values in [0, 1].
SweepResult sweep_grid(std::size_t n, std::size_t dataset_size,
                       const std::vector<double>& x_grid,
                       const std::vector<double>& y_grid, SweepMode mode,
                       std::size_t trials_per_cell, std::uint64_t seed,
                       unsigned threads = 0);

/// Evenly spaced grid with both endpoints exact.
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// CSV with header trial_id,averaged_f1,f1_of_averages,delta; doubles
/// carry 17 significant digits.
void write_trial_csv(std::ostream& out, const std::vector<MacroReport>& reports);

/// CSV with header x,y,mean_delta,mean_averaged_f1,mean_f1_of_averages.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace mf1
