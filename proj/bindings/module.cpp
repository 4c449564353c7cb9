#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "mf1/confusion_matrix.hpp"
#include "mf1/format.hpp"
#include "mf1/macro_metrics.hpp"
#include "mf1/simulation.hpp"
#include "mf1/stats.hpp"

namespace py = pybind11;

namespace {

mf1::ConfusionMatrix matrix_from_rows(
    const std::vector<std::vector<std::uint64_t>>& rows) {
    const std::size_t n = rows.size();
    std::vector<std::uint64_t> cells;
    cells.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw std::invalid_argument("confusion matrix rows must be square");
        }
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return mf1::ConfusionMatrix(n, std::move(cells));
}

mf1::ClassifierSpec make_classifier(const std::string& kind, double x, double y) {
    if (kind == "uniform") {
        return mf1::ClassifierSpec::uniform();
    }
    if (kind == "biased") {
        return mf1::ClassifierSpec::biased(x, y);
    }
    throw std::invalid_argument("classifier must be 'uniform' or 'biased'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Macro-F1 evaluation toolkit: both macro-F1 formulas, the gap "
              "between them, and seeded random-classifier simulations.";

    py::class_<mf1::ConfusionMatrix>(m, "ConfusionMatrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"),
             "Rows are predicted classes, columns are gold classes.")
        .def_static(
            "from_pairs",
            [](const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
               std::size_t n) {
                std::vector<mf1::PredictionPair> pp;
                pp.reserve(pairs.size());
                for (const auto& [pred, gold] : pairs) {
                    pp.push_back({pred, gold});
                }
                return mf1::ConfusionMatrix::from_pairs(pp, n);
            },
            py::arg("pairs"), py::arg("n"),
            "Count (predicted, gold) index pairs into an n x n matrix.")
        .def("__len__", &mf1::ConfusionMatrix::size)
        .def("at", &mf1::ConfusionMatrix::at, py::arg("predicted"),
             py::arg("gold"))
        .def("row_sum", &mf1::ConfusionMatrix::row_sum, py::arg("i"))
        .def("col_sum", &mf1::ConfusionMatrix::col_sum, py::arg("i"))
        .def("total", &mf1::ConfusionMatrix::total)
        .def("rows",
             [](const mf1::ConfusionMatrix& cm) {
                 std::vector<std::vector<std::uint64_t>> rows(cm.size());
                 for (std::size_t i = 0; i < cm.size(); ++i) {
                     for (std::size_t j = 0; j < cm.size(); ++j) {
                         rows[i].push_back(cm.at(i, j));
                     }
                 }
                 return rows;
             })
        .def("__repr__", [](const mf1::ConfusionMatrix& cm) {
            std::ostringstream os;
            os << "ConfusionMatrix(n=" << cm.size() << ", total=" << cm.total()
               << ")";
            return os.str();
        });

    py::class_<mf1::ClassMetrics>(m, "ClassMetrics")
        .def_readonly("class_index", &mf1::ClassMetrics::class_index)
        .def_readonly("precision", &mf1::ClassMetrics::precision)
        .def_readonly("recall", &mf1::ClassMetrics::recall)
        .def_readonly("f1", &mf1::ClassMetrics::f1)
        .def("__repr__", [](const mf1::ClassMetrics& cm) {
            std::ostringstream os;
            os << "ClassMetrics(class_index=" << cm.class_index
               << ", precision=" << mf1::format_double(cm.precision)
               << ", recall=" << mf1::format_double(cm.recall)
               << ", f1=" << mf1::format_double(cm.f1) << ")";
            return os.str();
        });

    py::class_<mf1::MacroReport>(m, "MacroReport")
        .def_readonly("averaged_f1", &mf1::MacroReport::averaged_f1)
        .def_readonly("f1_of_averages", &mf1::MacroReport::f1_of_averages)
        .def_readonly("delta_direct", &mf1::MacroReport::delta_direct)
        .def_readonly("delta_closed_form", &mf1::MacroReport::delta_closed_form)
        .def_readonly("diverges", &mf1::MacroReport::diverges)
        .def("__repr__", [](const mf1::MacroReport& r) {
            std::ostringstream os;
            os << "MacroReport(averaged_f1=" << mf1::format_double(r.averaged_f1)
               << ", f1_of_averages=" << mf1::format_double(r.f1_of_averages)
               << ", delta=" << mf1::format_double(r.delta_direct)
               << ", diverges=" << (r.diverges ? "True" : "False") << ")";
            return os.str();
        });

    py::class_<mf1::TrialStats>(m, "TrialStats")
        .def_readonly("reports", &mf1::TrialStats::reports)
        .def_readonly("rmsd", &mf1::TrialStats::rmsd)
        .def_readonly("pearson", &mf1::TrialStats::pearson)
        .def_readonly("spearman", &mf1::TrialStats::spearman);

    py::class_<mf1::SweepResult>(m, "SweepResult")
        .def_readonly("x_values", &mf1::SweepResult::x_values)
        .def_readonly("y_values", &mf1::SweepResult::y_values)
        .def_readonly("mean_delta", &mf1::SweepResult::mean_delta)
        .def_readonly("mean_averaged_f1", &mf1::SweepResult::mean_averaged_f1)
        .def_readonly("mean_f1_of_averages",
                      &mf1::SweepResult::mean_f1_of_averages)
        .def("cell", &mf1::SweepResult::cell, py::arg("ix"), py::arg("iy"));

    m.def("precision", &mf1::precision, py::arg("cm"), py::arg("i"));
    m.def("recall", &mf1::recall, py::arg("cm"), py::arg("i"));
    m.def("f1_class", &mf1::f1_class, py::arg("cm"), py::arg("i"));
    m.def("per_class_metrics", &mf1::per_class_metrics, py::arg("cm"));

    m.def("averaged_f1", &mf1::averaged_f1, py::arg("cm"),
          "Arithmetic mean of per-class F1 scores.");
    m.def("f1_of_averages", &mf1::f1_of_averages, py::arg("cm"),
          "Harmonic mean of mean precision and mean recall.");
    m.def("delta_direct", &mf1::delta_direct, py::arg("cm"));
    m.def("delta_closed_form", &mf1::delta_closed_form, py::arg("cm"));
    m.def("divergence_condition", &mf1::divergence_condition, py::arg("cm"));
    m.def("supremum_bound", &mf1::supremum_bound, py::arg("n"));
    m.def(
        "extremal_delta",
        [](std::size_t recall_only, std::size_t precision_only, std::size_t n) {
            return mf1::extremal_delta({recall_only, precision_only, n});
        },
        py::arg("recall_only"), py::arg("precision_only"), py::arg("n"));
    m.def("extremal_matrix", &mf1::extremal_matrix, py::arg("n"), py::arg("z"));
    m.def("macro_report", &mf1::macro_report, py::arg("cm"));

    m.def("skewed_label_distribution", &mf1::skewed_label_distribution,
          py::arg("n"), py::arg("skew"));
    m.def("accuracy_biased_weights", &mf1::accuracy_biased_weights,
          py::arg("n"), py::arg("correct_probability"), py::arg("error_skew"),
          py::arg("gold"));
    m.def(
        "run_trials",
        [](std::size_t n, std::size_t dataset_size, std::size_t trials,
           const std::vector<double>& class_distribution,
           const std::string& classifier, double x, double y,
           std::uint64_t seed, unsigned threads) {
            mf1::ExperimentConfig cfg;
            cfg.class_count = n;
            cfg.dataset_size = dataset_size;
            cfg.trials = trials;
            cfg.class_distribution = class_distribution;
            cfg.classifier = make_classifier(classifier, x, y);
            cfg.seed = seed;
            cfg.threads = threads;
            return mf1::run_trials(cfg);
        },
        py::arg("n"), py::arg("dataset_size"), py::arg("trials"),
        py::arg("class_distribution"), py::arg("classifier") = "uniform",
        py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("seed") = 0,
        py::arg("threads") = 0);
    m.def(
        "sweep_grid",
        [](std::size_t n, std::size_t dataset_size,
           const std::vector<double>& x_grid, const std::vector<double>& y_grid,
           const std::string& mode, std::size_t trials_per_cell,
           std::uint64_t seed, unsigned threads) {
            mf1::SweepMode m_;
            if (mode == "label_skew") {
                m_ = mf1::SweepMode::label_skew;
            } else if (mode == "error_skew") {
                m_ = mf1::SweepMode::error_skew;
            } else {
                throw std::invalid_argument(
                    "mode must be 'label_skew' or 'error_skew'");
            }
            return mf1::sweep_grid(n, dataset_size, x_grid, y_grid, m_,
                                   trials_per_cell, seed, threads);
        },
        py::arg("n"), py::arg("dataset_size"), py::arg("x_grid"),
        py::arg("y_grid"), py::arg("mode"), py::arg("trials_per_cell"),
        py::arg("seed") = 0, py::arg("threads") = 0);
    m.def("linspace", &mf1::linspace, py::arg("lo"), py::arg("hi"),
          py::arg("count"));

    m.def("rmsd",
          [](const std::vector<std::pair<double, double>>& pairs) {
              return mf1::rmsd(pairs);
          },
          py::arg("pairs"));
    m.def(
        "pearson",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
            return mf1::pearson(xs, ys);
        },
        py::arg("xs"), py::arg("ys"));
    m.def(
        "spearman",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
            return mf1::spearman(xs, ys);
        },
        py::arg("xs"), py::arg("ys"));
}
