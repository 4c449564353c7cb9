#include "mf1/macro_metrics.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mf1 {

double averaged_f1(const ConfusionMatrix& cm) {
    const std::size_t n = cm.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += f1_class(cm, i);
    }
    return sum / static_cast<double>(n);
}

double f1_of_averages(const ConfusionMatrix& cm) {
    const std::size_t n = cm.size();
    double p_sum = 0.0;
    double r_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        p_sum += precision(cm, i);
        r_sum += recall(cm, i);
    }
    const double p_mean = p_sum / static_cast<double>(n);
    const double r_mean = r_sum / static_cast<double>(n);
    if (p_mean + r_mean == 0.0) {
        return 0.0;
    }
    return harmonic_mean(p_mean, r_mean);
}

double delta_direct(const ConfusionMatrix& cm) {
    return f1_of_averages(cm) - averaged_f1(cm);
}

double delta_closed_form(const ConfusionMatrix& cm) {
    const std::size_t n = cm.size();
    std::vector<double> p(n), r(n);
    double sigma = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = precision(cm, i);
        r[i] = recall(cm, i);
        sigma += p[i] + r[i];
    }
    if (sigma == 0.0) {
        return 0.0;  // hollow matrix: the direct gap is 0 - 0
    }
    // Ordered-pair sum folded to twice the x < y sum; the x = y term is zero.
    double acc = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        if (p[x] + r[x] == 0.0) {
            continue;
        }
        for (std::size_t y = x + 1; y < n; ++y) {
            if (p[y] + r[y] == 0.0) {
                continue;
            }
            const double d = p[x] * r[y] - p[y] * r[x];
            acc += d * d / ((p[x] + r[x]) * (p[y] + r[y]));
        }
    }
    return 2.0 * acc / (static_cast<double>(n) * sigma);
}

bool divergence_condition(const ConfusionMatrix& cm) {
    // P_i != R_i reduces to unequal row and column sums once the diagonal
    // cell is nonzero; a zero diagonal cell forces P_i = R_i = 0.
    for (std::size_t i = 0; i < cm.size(); ++i) {
        if (cm.at(i, i) > 0 && cm.row_sum(i) != cm.col_sum(i)) {
            return true;
        }
    }
    return false;
}

double supremum_bound(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument(
            "the gap needs at least two classes, got n = " + std::to_string(n));
    }
    if (n % 2 == 0) {
        return 0.5;
    }
    const double nd = static_cast<double>(n);
    return 0.5 - 1.0 / (2.0 * nd * nd);
}

double extremal_delta(const ExtremalConfig& cfg) {
    if (cfg.recall_only + cfg.precision_only != cfg.class_count) {
        throw std::invalid_argument("extremal class counts must add up to n");
    }
    if (cfg.class_count < 2) {
        throw std::invalid_argument("extremal configuration needs n >= 2");
    }
    const double nd = static_cast<double>(cfg.class_count);
    return 2.0 * static_cast<double>(cfg.recall_only) *
           static_cast<double>(cfg.precision_only) / (nd * nd);
}

ConfusionMatrix extremal_matrix(std::size_t n, std::uint64_t z) {
    if (n < 2) {
        throw std::invalid_argument(
            "extremal matrix needs n >= 2, got n = " + std::to_string(n));
    }
    std::vector<std::uint64_t> cells(n * n, 0);
    auto set = [&](std::size_t row, std::size_t col, std::uint64_t v) {
        cells[row * n + col] = v;
    };
    const std::size_t paired = (n % 2 == 0) ? n : n - 3;
    for (std::size_t base = 0; base < paired; base += 2) {
        set(base, base, 1);
        set(base + 1, base, z);
        set(base + 1, base + 1, 1);
    }
    if (n % 2 != 0) {
        const std::size_t base = n - 3;
        set(base, base, 1);
        set(base + 1, base, z);
        set(base + 1, base + 1, 1);
        set(base + 1, base + 2, z);
        set(base + 2, base + 2, 1);
    }
    return ConfusionMatrix(n, std::move(cells));
}

MacroReport macro_report(const ConfusionMatrix& cm) {
    MacroReport report{};
    report.averaged_f1 = averaged_f1(cm);
    report.f1_of_averages = f1_of_averages(cm);
    report.delta_direct = report.f1_of_averages - report.averaged_f1;
    report.delta_closed_form = delta_closed_form(cm);
    report.diverges = report.delta_direct > kDivergenceTolerance;
    return report;
}

}  // namespace mf1
