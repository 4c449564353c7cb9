// mf1: evaluate confusion matrices with both macro-F1 formulas, inspect the
// gap between them, and run the randomized-classifier simulations.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mf1/confusion_matrix.hpp"
#include "mf1/format.hpp"
#include "mf1/macro_metrics.hpp"
#include "mf1/simulation.hpp"

namespace {

using nlohmann::json;

struct ReportLines {
    // Four labeled values, benevolent formula first as in the report format.
    static void print(std::ostream& out, const mf1::MacroReport& rep,
                      bool with_flag) {
        out << "macro_f1_benevolent " << mf1::format_double(rep.f1_of_averages)
            << '\n'
            << "macro_f1_non_benevolent "
            << mf1::format_double(rep.averaged_f1) << '\n'
            << "delta " << mf1::format_double(rep.delta_direct) << '\n'
            << "delta_closed_form "
            << mf1::format_double(rep.delta_closed_form) << '\n';
        if (with_flag) {
            out << "diverges " << (rep.diverges ? "true" : "false") << '\n';
        }
    }

    static json to_json(const mf1::MacroReport& rep) {
        return json{{"macro_f1_benevolent", rep.f1_of_averages},
                    {"macro_f1_non_benevolent", rep.averaged_f1},
                    {"delta", rep.delta_direct},
                    {"delta_closed_form", rep.delta_closed_form},
                    {"diverges", rep.diverges}};
    }
};

std::uint64_t parse_cell(const std::string& token, std::size_t position) {
    if (!token.empty() && token[0] == '-') {
        throw CLI::ValidationError("matrix cell " + std::to_string(position) +
                                   " is negative: " + token);
    }
    std::uint64_t value = 0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw CLI::ValidationError("matrix cell " + std::to_string(position) +
                                   " is not a nonnegative integer: " + token);
    }
    return value;
}

std::vector<double> parse_distribution(const std::string& spec) {
    std::vector<double> dist;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            dist.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("bad probability '" + item +
                                       "' in --dist");
        }
    }
    return dist;
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& spec) {
    const auto sep = spec.find('x');
    if (sep == std::string::npos) {
        throw CLI::ValidationError("--grid expects COLSxROWS, e.g. 21x21");
    }
    try {
        const auto nx = std::stoul(spec.substr(0, sep));
        const auto ny = std::stoul(spec.substr(sep + 1));
        if (nx < 2 || ny < 2) {
            throw CLI::ValidationError("--grid needs at least 2 points per axis");
        }
        return {nx, ny};
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("bad --grid '" + spec + "'");
    }
}

// Labels from text files. Separate gold/pred files carry one label per
// line; a combined TSV carries "gold<TAB>predicted" per line.
std::vector<std::string> read_label_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(path + ": cannot open");
    }
    std::vector<std::string> labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": empty label");
        }
        labels.push_back(line);
    }
    return labels;
}

void read_tsv(const std::string& path, std::vector<std::string>& gold,
              std::vector<std::string>& pred) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(path + ": cannot open");
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected two tab-separated columns");
        }
        std::string g = line.substr(0, tab);
        std::string p = line.substr(tab + 1);
        if (g.empty() || p.empty()) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": empty label");
        }
        gold.push_back(std::move(g));
        pred.push_back(std::move(p));
    }
}

struct Vocabulary {
    std::vector<std::string> display;        // first-seen order
    std::map<std::string, std::size_t> index;  // sorted-order assignment

    static Vocabulary build(const std::vector<std::string>& gold,
                            const std::vector<std::string>& pred) {
        Vocabulary v;
        auto see = [&](const std::string& label) {
            if (v.index.emplace(label, 0).second) {
                v.display.push_back(label);
            }
        };
        for (const auto& l : gold) see(l);
        for (const auto& l : pred) see(l);
        // std::map iterates sorted; assign indices in that order
        std::size_t next = 0;
        for (auto& [label, idx] : v.index) {
            idx = next++;
        }
        return v;
    }
};

int cmd_matrix(std::size_t n, const std::vector<std::string>& cell_tokens,
               bool as_json, std::ostream& out) {
    if (cell_tokens.size() != n * n) {
        throw CLI::ValidationError("expected " + std::to_string(n * n) +
                                   " cells for n = " + std::to_string(n) +
                                   ", got " + std::to_string(cell_tokens.size()));
    }
    std::vector<std::uint64_t> cells(cell_tokens.size());
    for (std::size_t i = 0; i < cell_tokens.size(); ++i) {
        cells[i] = parse_cell(cell_tokens[i], i);
    }
    const mf1::ConfusionMatrix cm(n, std::move(cells));
    const auto rep = mf1::macro_report(cm);
    if (as_json) {
        out << ReportLines::to_json(rep).dump() << '\n';
    } else {
        ReportLines::print(out, rep, /*with_flag=*/false);
    }
    return 0;
}

int cmd_eval(const std::string& gold_path, const std::string& pred_path,
             const std::string& tsv_path, bool as_json, std::ostream& out) {
    std::vector<std::string> gold, pred;
    if (!tsv_path.empty()) {
        read_tsv(tsv_path, gold, pred);
    } else {
        gold = read_label_lines(gold_path);
        pred = read_label_lines(pred_path);
        if (gold.size() != pred.size()) {
            throw std::runtime_error(
                "label count mismatch: " + gold_path + " has " +
                std::to_string(gold.size()) + " lines, " + pred_path + " has " +
                std::to_string(pred.size()));
        }
    }
    if (gold.empty()) {
        std::cerr << "warning: no labeled samples; reporting zeros\n";
        const mf1::MacroReport zero{};
        if (as_json) {
            json j = ReportLines::to_json(zero);
            j["classes"] = json::array();
            out << j.dump() << '\n';
        } else {
            out << "label precision recall f1\n";
            ReportLines::print(out, zero, /*with_flag=*/true);
        }
        return 0;
    }

    const auto vocab = Vocabulary::build(gold, pred);
    std::vector<mf1::PredictionPair> pairs;
    pairs.reserve(gold.size());
    for (std::size_t i = 0; i < gold.size(); ++i) {
        pairs.push_back({vocab.index.at(pred[i]), vocab.index.at(gold[i])});
    }
    const auto cm = mf1::ConfusionMatrix::from_pairs(pairs, vocab.index.size());
    const auto metrics = mf1::per_class_metrics(cm);
    const auto rep = mf1::macro_report(cm);

    if (as_json) {
        json j = ReportLines::to_json(rep);
        j["classes"] = json::array();
        for (const auto& label : vocab.display) {
            const auto& m = metrics[vocab.index.at(label)];
            j["classes"].push_back({{"label", label},
                                    {"precision", m.precision},
                                    {"recall", m.recall},
                                    {"f1", m.f1}});
        }
        out << j.dump() << '\n';
    } else {
        out << "label precision recall f1\n";
        for (const auto& label : vocab.display) {
            const auto& m = metrics[vocab.index.at(label)];
            out << label << ' ' << mf1::format_double(m.precision) << ' '
                << mf1::format_double(m.recall) << ' '
                << mf1::format_double(m.f1) << '\n';
        }
        ReportLines::print(out, rep, /*with_flag=*/true);
    }
    return 0;
}

int cmd_extremal(std::size_t n, std::uint64_t z, bool as_json,
                 std::ostream& out) {
    const auto cm = mf1::extremal_matrix(n, z);
    const auto rep = mf1::macro_report(cm);
    if (as_json) {
        json rows = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < n; ++j) {
                row.push_back(cm.at(i, j));
            }
            rows.push_back(std::move(row));
        }
        json j = ReportLines::to_json(rep);
        j["matrix"] = std::move(rows);
        out << j.dump() << '\n';
        return 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out << cm.at(i, j) << (j + 1 < n ? ' ' : '\n');
        }
    }
    ReportLines::print(out, rep, /*with_flag=*/true);
    return 0;
}

struct SimulateFlags {
    std::size_t n = 2;
    std::size_t size = 1000;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::string dist;
    std::string grid = "21x21";
    std::string out_path;
    unsigned threads = 0;
};

// CSV goes to --out when given (summary on stdout), otherwise CSV goes to
// stdout and the summary moves to stderr so the data stays pipeable.
class CsvTarget {
public:
    explicit CsvTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw std::runtime_error(path + ": cannot write");
            }
        }
    }
    std::ostream& csv() { return file_.is_open() ? file_ : std::cout; }
    std::ostream& summary() { return file_.is_open() ? std::cout : std::cerr; }

private:
    std::ofstream file_;
};

void print_optional(std::ostream& out, const char* key,
                    const std::optional<double>& v) {
    out << key << ' ' << (v ? mf1::format_double(*v) : "undefined") << '\n';
}

int cmd_simulate_fig1(const SimulateFlags& flags) {
    mf1::ExperimentConfig cfg;
    cfg.class_count = flags.n;
    cfg.dataset_size = flags.size;
    cfg.trials = flags.trials;
    cfg.seed = flags.seed;
    cfg.threads = flags.threads;
    if (!flags.dist.empty()) {
        cfg.class_distribution = parse_distribution(flags.dist);
    } else if (flags.n == 2) {
        cfg.class_distribution = {0.95, 0.05};
    } else {
        cfg.class_distribution = mf1::skewed_label_distribution(flags.n, 0.0);
    }
    cfg.classifier = mf1::ClassifierSpec::uniform();

    const auto stats = mf1::run_trials(cfg);
    CsvTarget target(flags.out_path);
    mf1::write_trial_csv(target.csv(), stats.reports);

    auto& sum = target.summary();
    sum << "trials " << stats.reports.size() << '\n';
    sum << "rmsd " << mf1::format_double(stats.rmsd) << '\n';
    print_optional(sum, "pearson", stats.pearson);
    print_optional(sum, "spearman", stats.spearman);
    double max_benevolent = 0.0, max_non_benevolent = 0.0, max_delta = 0.0;
    for (const auto& rep : stats.reports) {
        max_benevolent = std::max(max_benevolent, rep.f1_of_averages);
        max_non_benevolent = std::max(max_non_benevolent, rep.averaged_f1);
        max_delta = std::max(max_delta, rep.delta_direct);
    }
    sum << "max_macro_f1_benevolent " << mf1::format_double(max_benevolent)
        << '\n';
    sum << "max_macro_f1_non_benevolent "
        << mf1::format_double(max_non_benevolent) << '\n';
    sum << "max_delta " << mf1::format_double(max_delta) << '\n';
    return 0;
}

int cmd_simulate_sweep(const SimulateFlags& flags, mf1::SweepMode mode) {
    const auto [nx, ny] = parse_grid(flags.grid);
    const auto x_grid =
        mf1::linspace(1.0 / static_cast<double>(flags.n), 1.0, nx);
    const auto y_grid = mf1::linspace(0.0, 1.0, ny);
    const auto result =
        mf1::sweep_grid(flags.n, flags.size, x_grid, y_grid, mode,
                        flags.trials, flags.seed, flags.threads);

    CsvTarget target(flags.out_path);
    mf1::write_sweep_csv(target.csv(), result);

    double max_delta = 0.0, max_delta_off_perfect = 0.0;
    double at_x = x_grid.front(), at_y = y_grid.front();
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double d = result.mean_delta[result.cell(ix, iy)];
            if (d > max_delta) {
                max_delta = d;
                at_x = x_grid[ix];
                at_y = y_grid[iy];
            }
            if (x_grid[ix] != 1.0) {
                max_delta_off_perfect = std::max(max_delta_off_perfect, d);
            }
        }
    }
    auto& sum = target.summary();
    sum << "grid " << nx << 'x' << ny << '\n';
    sum << "trials_per_cell " << flags.trials << '\n';
    sum << "max_mean_delta " << mf1::format_double(max_delta) << " at_x "
        << mf1::format_double(at_x) << " at_y " << mf1::format_double(at_y)
        << '\n';
    sum << "max_mean_delta_off_perfect "
        << mf1::format_double(max_delta_off_perfect) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"macro-F1 evaluation toolkit: both macro-F1 formulas, their "
                 "gap, and randomized-classifier simulations"};
    app.require_subcommand(1);

    // matrix <n> <cells...>
    std::size_t matrix_n = 0;
    std::vector<std::string> matrix_cells;
    bool matrix_json = false;
    auto* matrix = app.add_subcommand(
        "matrix", "report for an n x n confusion matrix given in row-major "
                  "order (rows = predicted class, columns = gold class)");
    matrix->add_option("n", matrix_n, "number of classes")->required();
    matrix->add_option("cells", matrix_cells, "n*n nonnegative counts");
    matrix->add_flag("--json", matrix_json, "machine-readable output");

    // eval --gold F --pred F | --tsv F
    std::string eval_gold, eval_pred, eval_tsv;
    bool eval_json = false;
    auto* eval = app.add_subcommand(
        "eval", "evaluate label files (one label per line, or a two-column "
                "TSV of gold and predicted)");
    eval->add_option("--gold", eval_gold, "gold labels, one per line");
    eval->add_option("--pred", eval_pred, "predicted labels, one per line");
    eval->add_option("--tsv", eval_tsv, "combined gold<TAB>predicted file");
    eval->add_flag("--json", eval_json, "machine-readable output");

    // bound <n>
    std::size_t bound_n = 0;
    bool bound_json = false;
    auto* bound = app.add_subcommand(
        "bound", "least upper bound of the gap for n classes");
    bound->add_option("n", bound_n, "number of classes")->required();
    bound->add_flag("--json", bound_json, "machine-readable output");

    // extremal <n> <z>
    std::size_t extremal_n = 0;
    std::uint64_t extremal_z = 0;
    bool extremal_json = false;
    auto* extremal = app.add_subcommand(
        "extremal", "gap-maximising matrix family member and its report");
    extremal->add_option("n", extremal_n, "number of classes")->required();
    extremal->add_option("z", extremal_z, "skew parameter")->required();
    extremal->add_flag("--json", extremal_json, "machine-readable output");

    // simulate fig1|sweep-labels|sweep-errors
    SimulateFlags fig1_flags;  // struct defaults match fig1
    SimulateFlags sweep_flags;
    sweep_flags.n = 4;
    sweep_flags.size = 2000;
    sweep_flags.trials = 5;
    auto* simulate = app.add_subcommand(
        "simulate", "seeded random-classifier experiments with CSV output");
    simulate->require_subcommand(1);
    auto add_common = [](CLI::App* cmd, SimulateFlags& flags) {
        cmd->add_option("--n", flags.n, "number of classes");
        cmd->add_option("--size", flags.size, "samples per trial");
        cmd->add_option("--trials", flags.trials, "trial count");
        cmd->add_option("--seed", flags.seed, "64-bit RNG seed");
        cmd->add_option("--out", flags.out_path, "CSV output path");
        cmd->add_option("--threads", flags.threads,
                        "worker threads (0 = hardware)");
    };
    auto* fig1 = simulate->add_subcommand(
        "fig1", "uniform-random classifier on an imbalanced label "
                "distribution; per-trial CSV");
    add_common(fig1, fig1_flags);
    fig1->add_option("--dist", fig1_flags.dist,
                     "comma-separated class probabilities (default 0.95,0.05 "
                     "for n=2, uniform otherwise)");
    auto* sweep_labels = simulate->add_subcommand(
        "sweep-labels", "mean gap over an accuracy x label-skew grid; "
                        "per-cell CSV");
    auto* sweep_errors = simulate->add_subcommand(
        "sweep-errors", "mean gap over an accuracy x error-skew grid on "
                        "balanced labels; per-cell CSV");
    for (auto* cmd : {sweep_labels, sweep_errors}) {
        add_common(cmd, sweep_flags);
        cmd->add_option("--grid", sweep_flags.grid, "grid resolution COLSxROWS");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (matrix->parsed()) {
            return cmd_matrix(matrix_n, matrix_cells, matrix_json, std::cout);
        }
        if (eval->parsed()) {
            const bool separate = !eval_gold.empty() || !eval_pred.empty();
            if (separate == !eval_tsv.empty()) {
                std::cerr << "eval needs either --gold with --pred, or --tsv\n";
                return 2;
            }
            if (separate && (eval_gold.empty() || eval_pred.empty())) {
                std::cerr << "eval needs both --gold and --pred\n";
                return 2;
            }
            return cmd_eval(eval_gold, eval_pred, eval_tsv, eval_json,
                            std::cout);
        }
        if (bound->parsed()) {
            const double b = mf1::supremum_bound(bound_n);
            if (bound_json) {
                std::cout << json{{"n", bound_n}, {"bound", b}}.dump() << '\n';
            } else {
                std::cout << mf1::format_double(b) << '\n';
            }
            return 0;
        }
        if (extremal->parsed()) {
            return cmd_extremal(extremal_n, extremal_z, extremal_json,
                                std::cout);
        }
        if (simulate->parsed()) {
            if (fig1->parsed()) {
                return cmd_simulate_fig1(fig1_flags);
            }
            if (sweep_labels->parsed()) {
                return cmd_simulate_sweep(sweep_flags, mf1::SweepMode::label_skew);
            }
            if (sweep_errors->parsed()) {
                return cmd_simulate_sweep(sweep_flags, mf1::SweepMode::error_skew);
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
