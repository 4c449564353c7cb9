"""Macro-F1 evaluation toolkit.

Two formulas for "macro F1" circulate: the arithmetic mean of per-class F1
scores, and the harmonic mean of mean precision and mean recall. This
package computes both, the gap between them (directly and in closed form),
the gap's upper bound, and runs seeded random-classifier simulations.
"""

from mf1eval._core import (
    ClassMetrics,
    ConfusionMatrix,
    MacroReport,
    SweepResult,
    TrialStats,
    accuracy_biased_weights,
    averaged_f1,
    delta_closed_form,
    delta_direct,
    divergence_condition,
    extremal_delta,
    extremal_matrix,
    f1_class,
    f1_of_averages,
    linspace,
    macro_report,
    pearson,
    per_class_metrics,
    precision,
    recall,
    rmsd,
    run_trials,
    skewed_label_distribution,
    spearman,
    supremum_bound,
    sweep_grid,
)

__all__ = [
    "ClassMetrics",
    "ConfusionMatrix",
    "MacroReport",
    "SweepResult",
    "TrialStats",
    "accuracy_biased_weights",
    "averaged_f1",
    "delta_closed_form",
    "delta_direct",
    "divergence_condition",
    "extremal_delta",
    "extremal_matrix",
    "f1_class",
    "f1_of_averages",
    "linspace",
    "macro_report",
    "pearson",
    "per_class_metrics",
    "precision",
    "recall",
    "rmsd",
    "run_trials",
    "skewed_label_distribution",
    "spearman",
    "supremum_bound",
    "sweep_grid",
]
