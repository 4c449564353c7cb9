"""Smoke tests for the python bindings."""

import math

import pytest

import mf1eval as mf1


def test_matrix_report_golden():
    cm = mf1.ConfusionMatrix([[100, 10000], [0, 100]])
    rep = mf1.macro_report(cm)
    assert rep.f1_of_averages == pytest.approx(0.504950495049505, abs=1e-15)
    assert rep.averaged_f1 == pytest.approx(0.0196078431372549, abs=1e-15)
    assert rep.delta_direct == pytest.approx(0.48534265191225007, abs=1e-15)
    assert rep.delta_closed_form == pytest.approx(rep.delta_direct, abs=1e-9)
    assert rep.diverges


def test_per_class_metrics():
    cm = mf1.ConfusionMatrix([[5, 10], [5, 10]])
    metrics = mf1.per_class_metrics(cm)
    assert metrics[0].precision == pytest.approx(1 / 3)
    assert metrics[0].recall == 0.5
    assert metrics[1].f1 == pytest.approx(4 / 7)
    assert mf1.f1_of_averages(cm) == 0.5


def test_from_pairs_and_errors():
    cm = mf1.ConfusionMatrix.from_pairs([(0, 0), (0, 1), (1, 1)], 2)
    assert cm.at(0, 1) == 1
    assert cm.total() == 3
    with pytest.raises(IndexError):
        mf1.ConfusionMatrix.from_pairs([(5, 0)], 2)


def test_bounds_and_extremal():
    assert mf1.supremum_bound(2) == 0.5
    assert mf1.supremum_bound(3) == pytest.approx(0.5 - 1 / 18)
    assert mf1.extremal_delta(1, 1, 2) == 0.5
    cm = mf1.extremal_matrix(2, 10**6)
    assert mf1.delta_direct(cm) == pytest.approx(0.5, abs=1e-5)


def test_distributions():
    assert mf1.skewed_label_distribution(4, 1.0) == pytest.approx(
        [0.1, 0.2, 0.3, 0.4]
    )
    weights = mf1.accuracy_biased_weights(4, 0.4, 1.0, 1)
    assert weights == pytest.approx([0.075, 0.4, 0.225, 0.3])
    assert math.isclose(sum(weights), 1.0, abs_tol=1e-12)


def test_run_trials_deterministic():
    kwargs = dict(
        n=2,
        dataset_size=200,
        trials=20,
        class_distribution=[0.9, 0.1],
        classifier="uniform",
        seed=11,
    )
    a = mf1.run_trials(**kwargs)
    b = mf1.run_trials(**kwargs)
    assert [r.delta_direct for r in a.reports] == [r.delta_direct for r in b.reports]
    assert a.rmsd == b.rmsd
    assert all(r.delta_direct >= 0 for r in a.reports)


def test_sweep_grid_perfect_column():
    xs = mf1.linspace(0.25, 1.0, 4)
    ys = mf1.linspace(0.0, 1.0, 3)
    result = mf1.sweep_grid(4, 100, xs, ys, "error_skew", 2, seed=5)
    for iy in range(3):
        assert result.mean_delta[result.cell(3, iy)] == 0.0


def test_stats():
    assert mf1.rmsd([(1.0, 1.0), (2.0, 2.0)]) == 0.0
    assert mf1.pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)
    assert mf1.spearman([1, 2, 3, 4], [1, 3, 2, 4]) == pytest.approx(0.8)
    assert mf1.pearson([1, 2, 3], [4, 4, 4]) is None
