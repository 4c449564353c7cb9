#include "mf1/simulation.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "mf1/format.hpp"
#include "mf1/stats.hpp"

namespace mf1 {

namespace {

constexpr double kDistributionSlack = 1e-9;
constexpr double kParamSlack = 1e-12;

void validate_distribution(const std::vector<double>& dist) {
    if (dist.empty()) {
        throw std::invalid_argument("class distribution is empty");
    }
    double sum = 0.0;
    for (double p : dist) {
        if (p < 0.0) {
            throw std::invalid_argument("class distribution has a negative entry");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kDistributionSlack) {
        throw std::invalid_argument("class distribution sums to " +
                                    format_double(sum) + ", expected 1");
    }
}

/// Inverse-CDF draw by linear scan; u >= the accumulated mass falls back to
/// the last class with positive probability.
std::size_t sample_categorical(const std::vector<double>& probs,
                               SplitMix64& rng) {
    const double u = rng.next_unit();
    double cum = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) {
            last_positive = i;
        }
        cum += probs[i];
        if (u < cum) {
            return i;
        }
    }
    return last_positive;
}

/// Run fn(0..count-1) on up to `threads` workers. Results must be written
/// to index-addressed slots; scheduling order carries no information.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
    unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (workers == 0) {
        workers = 1;
    }
    if (workers == 1 || count < 2) {
        for (std::size_t k = 0; k < count; ++k) {
            fn(k);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= count) {
                return;
            }
            try {
                fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back(work);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

std::vector<std::size_t> classify_dataset(const std::vector<std::size_t>& gold,
                                          const ClassifierSpec& spec,
                                          std::size_t n, SplitMix64& rng) {
    if (spec.kind == ClassifierSpec::Kind::uniform_random) {
        return uniform_random_classifier(gold, n, rng);
    }
    // One weight table per gold class; x and y are fixed for the dataset.
    std::vector<std::vector<double>> weights(n);
    std::vector<std::size_t> pred;
    pred.reserve(gold.size());
    for (std::size_t g : gold) {
        if (weights[g].empty()) {
            weights[g] = accuracy_biased_weights(n, spec.correct_probability,
                                                 spec.error_skew, g);
        }
        pred.push_back(sample_categorical(weights[g], rng));
    }
    return pred;
}

MacroReport run_one_trial(const std::vector<double>& dist,
                          const ClassifierSpec& spec, std::size_t n,
                          std::size_t dataset_size, std::uint64_t sub_seed) {
    SplitMix64 rng(sub_seed);
    const auto gold = sample_gold_labels(dist, dataset_size, rng);
    const auto pred = classify_dataset(gold, spec, n, rng);
    std::vector<PredictionPair> pairs;
    pairs.reserve(gold.size());
    for (std::size_t i = 0; i < gold.size(); ++i) {
        pairs.push_back({pred[i], gold[i]});
    }
    return macro_report(ConfusionMatrix::from_pairs(pairs, n));
}

}  // namespace

std::vector<std::size_t> sample_gold_labels(const std::vector<double>& dist,
                                            std::size_t size, SplitMix64& rng) {
    validate_distribution(dist);
    std::vector<std::size_t> labels;
    labels.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        labels.push_back(sample_categorical(dist, rng));
    }
    return labels;
}

std::vector<std::size_t> uniform_random_classifier(
    const std::vector<std::size_t>& gold, std::size_t n, SplitMix64& rng) {
    if (n == 0) {
        throw std::invalid_argument("classifier needs at least one class");
    }
    std::vector<std::size_t> pred;
    pred.reserve(gold.size());
    for (std::size_t i = 0; i < gold.size(); ++i) {
        const auto k = static_cast<std::size_t>(rng.next_unit() *
                                                static_cast<double>(n));
        pred.push_back(k < n ? k : n - 1);
    }
    return pred;
}

std::vector<double> skewed_label_distribution(std::size_t n, double skew) {
    if (n == 0) {
        throw std::invalid_argument("distribution needs at least one class");
    }
    if (skew < 0.0 || skew > 1.0) {
        throw std::invalid_argument("label skew must lie in [0, 1], got " +
                                    format_double(skew));
    }
    const double nd = static_cast<double>(n);
    const double index_total = nd * (nd + 1.0) / 2.0;
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double class_index = static_cast<double>(i + 1);  // 1-based
        dist[i] = (1.0 - skew) / nd + skew * class_index / index_total;
    }
    return dist;
}

std::vector<double> accuracy_biased_weights(std::size_t n,
                                            double correct_probability,
                                            double error_skew,
                                            std::size_t gold) {
    if (n == 0 || gold >= n) {
        throw std::invalid_argument("gold class outside [0, n)");
    }
    const double nd = static_cast<double>(n);
    if (correct_probability < 1.0 / nd - kParamSlack ||
        correct_probability > 1.0 + kParamSlack) {
        throw std::invalid_argument("correct probability must lie in [1/n, 1], got " +
                                    format_double(correct_probability));
    }
    if (error_skew < 0.0 || error_skew > 1.0) {
        throw std::invalid_argument("error skew must lie in [0, 1], got " +
                                    format_double(error_skew));
    }
    const double x = correct_probability;
    const double y = error_skew;
    std::vector<double> weights(n, 0.0);
    weights[gold] = x;
    if (n == 1) {
        return weights;
    }
    const double index_total = nd * (nd + 1.0) / 2.0;
    const double gold_index = static_cast<double>(gold + 1);  // 1-based
    const double even_share = (1.0 - x) / (nd - 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == gold) {
            continue;
        }
        const double class_index = static_cast<double>(j + 1);
        const double skewed_share =
            class_index * (1.0 - x) / (index_total - gold_index);
        weights[j] = (1.0 - y) * even_share + y * skewed_share;
    }
    return weights;
}

std::size_t accuracy_biased_classifier(std::size_t gold, std::size_t n,
                                       double correct_probability,
                                       double error_skew, SplitMix64& rng) {
    const auto weights =
        accuracy_biased_weights(n, correct_probability, error_skew, gold);
    return sample_categorical(weights, rng);
}

TrialStats run_trials(const ExperimentConfig& cfg) {
    if (cfg.class_distribution.size() != cfg.class_count) {
        throw std::invalid_argument("class distribution has " +
                                    std::to_string(cfg.class_distribution.size()) +
                                    " entries for " +
                                    std::to_string(cfg.class_count) + " classes");
    }
    validate_distribution(cfg.class_distribution);
    TrialStats stats;
    stats.reports.resize(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::size_t k) {
        stats.reports[k] =
            run_one_trial(cfg.class_distribution, cfg.classifier,
                          cfg.class_count, cfg.dataset_size,
                          SplitMix64::derive(cfg.seed, k));
    });
    if (!stats.reports.empty()) {
        std::vector<std::pair<double, double>> deviations;
        std::vector<double> averaged, of_averages;
        deviations.reserve(cfg.trials);
        averaged.reserve(cfg.trials);
        of_averages.reserve(cfg.trials);
        for (const auto& rep : stats.reports) {
            deviations.emplace_back(rep.f1_of_averages, rep.averaged_f1);
            averaged.push_back(rep.averaged_f1);
            of_averages.push_back(rep.f1_of_averages);
        }
        stats.rmsd = rmsd(deviations);
        if (cfg.trials >= 2) {
            stats.pearson = pearson(averaged, of_averages);
            stats.spearman = spearman(averaged, of_averages);
        }
    }
    return stats;
}

SweepResult sweep_grid(std::size_t n, std::size_t dataset_size,
                       const std::vector<double>& x_grid,
                       const std::vector<double>& y_grid, SweepMode mode,
                       std::size_t trials_per_cell, std::uint64_t seed,
                       unsigned threads) {
    if (n < 2) {
        throw std::invalid_argument("sweep needs at least two classes");
    }
    if (x_grid.empty() || y_grid.empty() || trials_per_cell == 0) {
        throw std::invalid_argument("sweep grid is empty");
    }
    const double x_floor = 1.0 / static_cast<double>(n);
    for (double x : x_grid) {
        if (x < x_floor - kParamSlack || x > 1.0 + kParamSlack) {
            throw std::invalid_argument("grid accuracy " + format_double(x) +
                                        " outside [1/n, 1]");
        }
    }
    for (double y : y_grid) {
        if (y < 0.0 || y > 1.0) {
            throw std::invalid_argument("grid skew " + format_double(y) +
                                        " outside [0, 1]");
        }
    }

    const std::size_t nx = x_grid.size();
    const std::size_t ny = y_grid.size();
    const std::size_t cells = nx * ny;
    const std::size_t units = cells * trials_per_cell;

    std::vector<double> delta(units), avg(units), of_avg(units);
    parallel_for(units, threads, [&](std::size_t u) {
        const std::size_t cell = u / trials_per_cell;
        const std::size_t ix = cell % nx;
        const std::size_t iy = cell / nx;
        const double x = x_grid[ix];
        const double y = y_grid[iy];
        const auto dist = (mode == SweepMode::label_skew)
                              ? skewed_label_distribution(n, y)
                              : skewed_label_distribution(n, 0.0);
        const auto spec = (mode == SweepMode::label_skew)
                              ? ClassifierSpec::biased(x, 0.0)
                              : ClassifierSpec::biased(x, y);
        const MacroReport rep = run_one_trial(dist, spec, n, dataset_size,
                                              SplitMix64::derive(seed, u));
        delta[u] = rep.delta_direct;
        avg[u] = rep.averaged_f1;
        of_avg[u] = rep.f1_of_averages;
    });

    SweepResult result;
    result.x_values = x_grid;
    result.y_values = y_grid;
    result.mean_delta.assign(cells, 0.0);
    result.mean_averaged_f1.assign(cells, 0.0);
    result.mean_f1_of_averages.assign(cells, 0.0);
    const double tpc = static_cast<double>(trials_per_cell);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        for (std::size_t t = 0; t < trials_per_cell; ++t) {
            const std::size_t u = cell * trials_per_cell + t;
            result.mean_delta[cell] += delta[u];
            result.mean_averaged_f1[cell] += avg[u];
            result.mean_f1_of_averages[cell] += of_avg[u];
        }
        result.mean_delta[cell] /= tpc;
        result.mean_averaged_f1[cell] /= tpc;
        result.mean_f1_of_averages[cell] /= tpc;
    }
    return result;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("linspace needs at least one point");
    }
    std::vector<double> grid(count);
    if (count == 1) {
        grid[0] = lo;
        return grid;
    }
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = lo + step * static_cast<double>(i);
    }
    grid.back() = hi;  // keep the endpoint exact
    return grid;
}

void write_trial_csv(std::ostream& out, const std::vector<MacroReport>& reports) {
    out << "trial_id,averaged_f1,f1_of_averages,delta\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        out << i << ',' << format_double_17(reports[i].averaged_f1) << ','
            << format_double_17(reports[i].f1_of_averages) << ','
            << format_double_17(reports[i].delta_direct) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "x,y,mean_delta,mean_averaged_f1,mean_f1_of_averages\n";
    for (std::size_t iy = 0; iy < result.y_values.size(); ++iy) {
        for (std::size_t ix = 0; ix < result.x_values.size(); ++ix) {
            const std::size_t c = result.cell(ix, iy);
            out << format_double_17(result.x_values[ix]) << ','
                << format_double_17(result.y_values[iy]) << ','
                << format_double_17(result.mean_delta[c]) << ','
                << format_double_17(result.mean_averaged_f1[c]) << ','
                << format_double_17(result.mean_f1_of_averages[c]) << '\n';
        }
    }
}

}  // namespace mf1
