import numpy as np
import pytest

from gsvdlab import AccuracyReport, aggregate, chordal, sin_angle


def test_chordal_basics():
    assert chordal(3.7, 3.7) == 0.0
    assert abs(chordal(1.0, 0.0) - 1.0 / np.sqrt(2.0)) < 1e-15


def test_chordal_reciprocal_invariance():
    rng = np.random.default_rng(0)
    for _ in range(100):
        a, b = 10.0 ** rng.uniform(-6, 6, size=2)
        assert abs(chordal(a, b) - chordal(1 / a, 1 / b)) < 1e-15


def test_chordal_symmetry_and_range():
    rng = np.random.default_rng(1)
    for _ in range(100):
        a, b = rng.uniform(0, 100, size=2)
        c = chordal(a, b)
        assert 0.0 <= c < 1.0
        assert c == chordal(b, a)


def test_sin_angle_basics():
    v = np.array([2.0, -1.0, 0.5])
    assert sin_angle(v, v) < 1e-15
    assert sin_angle(v, -v) < 1e-15
    assert abs(sin_angle(np.array([1.0, 0.0]), np.array([0.0, 1.0])) - 1.0) < 1e-15
    assert abs(sin_angle(np.array([1.0, 1.0]), np.array([1.0, 0.0])) - 1 / np.sqrt(2)) < 1e-15


def test_sin_angle_rejects_zero_vector():
    with pytest.raises(ValueError):
        sin_angle(np.zeros(3), np.ones(3))


def test_aggregate_tie_convention():
    e = np.array([1e-10, 1e-12, 1e-8])
    pct, acc = aggregate(e, e.copy())
    assert pct == 0.0 and acc == 0.0


def test_aggregate_uniform_factor_ten():
    tilde = np.array([1e-9, 1e-7, 1e-11])
    pct, acc = aggregate(tilde / 10.0, tilde)
    assert pct == 100.0
    assert abs(acc - 1.0) < 1e-12


def test_aggregate_clamps_exact_zeros():
    pct, acc = aggregate(np.array([0.0]), np.array([1e-16]))
    assert np.isfinite(acc)


def test_accuracy_report_aggregates_with_missing_form():
    n = 4
    nan = np.full(n, np.nan)
    vals = np.full(n, 1e-12)
    rep = AccuracyReport(sigma_exact=np.ones(n),
                         chordal_hat=vals, chordal_tilde=nan,
                         sin_x_hat=vals, sin_x_tilde=nan,
                         sin_u_hat=vals, sin_u_tilde=nan,
                         sin_v_hat=vals, sin_v_tilde=nan)
    agg = rep.aggregates()
    assert agg["pct_sigma"] is None and agg["acc_x"] is None
    assert len(rep) == n
