"""Hardy averaging operators against direct integral oracles.

The operators truncate to the grid window, so exactness claims come in two
layers: against the truncated integral in closed form (machine precision)
and against the ideal untruncated value on windows wide enough that the
dropped mass is below tolerance.
"""

import numpy as np
import pytest
from scipy.integrate import quad

from gvs.errors import ConvergenceError, ParameterError
from gvs.exponents import make_constant, make_gaussian_family, make_time_family
from gvs.hardy import (
    HardyReport,
    hardy_inequality_check,
    hardy_lower,
    hardy_upper,
    reference_family,
    tail_truncation_bound,
)
from gvs.quadrature import logtime_grid


def test_lower_matches_truncated_integral_exactly():
    grid = logtime_grid(t_min=1e-4, t_max=1e3, n_panels=200)
    a = grid.t_min
    for t in (0.01, 0.5, 1.0, 10.0):
        assert hardy_lower(lambda y: np.ones_like(y), 1.0, t, grid) == pytest.approx(
            (t - a) / t, rel=1e-12
        )
        assert hardy_lower(lambda y: y, 1.0, t, grid) == pytest.approx(
            (t**2 - a**2) / (2.0 * t), rel=1e-12
        )


def test_lower_ideal_values_on_wide_window():
    grid = logtime_grid(t_min=1e-10, t_max=1e3, n_panels=300, breakpoints=(1.0,))
    ts = np.array([0.01, 0.1, 1.0, 10.0])
    assert hardy_lower(lambda y: np.ones_like(y), 1.0, ts, grid) == pytest.approx(
        np.ones(4), rel=1e-7
    )
    assert hardy_lower(lambda y: y, 1.0, ts, grid) == pytest.approx(ts / 2, rel=1e-9)
    chi01 = lambda y: (y < 1.0).astype(float)
    assert hardy_lower(chi01, 2.0, 2.0, grid) == pytest.approx(0.25, rel=1e-9)


def test_upper_ideal_values():
    grid = logtime_grid(t_min=1e-4, t_max=1e3, n_panels=200)
    got = hardy_upper(lambda y: np.exp(-y), 1.0, 1.0, grid, exp_decay=True)
    assert got == pytest.approx(np.exp(-1.0), rel=1e-9)
    wide = logtime_grid(t_min=1e-4, t_max=1e6, n_panels=300)
    assert hardy_upper(lambda y: y**-3.0, 1.0, 2.0, wide) == pytest.approx(0.25, rel=1e-9)


def test_upper_exponential_tail_extrapolation_is_exact():
    # fitting e^{-y} recovers the rate exactly, so a narrow window suffices
    grid = logtime_grid(t_min=1e-2, t_max=5.0, n_panels=100)
    got = hardy_upper(lambda y: np.exp(-y), 1.0, 1.0, grid, exp_decay=True)
    assert got == pytest.approx(np.exp(-1.0), rel=1e-10)


def test_upper_divergent_tail_raises():
    grid = logtime_grid(t_min=0.1, t_max=10.0, n_panels=50)
    with pytest.raises(ConvergenceError):
        hardy_upper(lambda y: 1.0 / y, 1.0, 1.0, grid)
    with pytest.raises(ConvergenceError):
        hardy_upper(lambda y: np.ones_like(y), 1.0, 1.0, grid)


def test_zero_function_paths():
    grid = logtime_grid(n_panels=50)
    zero = lambda y: np.zeros_like(y)
    assert hardy_upper(zero, 1.0, 1.0, grid) == 0.0
    assert hardy_lower(zero, 1.0, 1.0, grid) == 0.0
    rep = hardy_inequality_check(zero, 1.0, make_constant(2.0), "lower", grid)
    assert rep.ratio == 0.0 and rep.lhs_norm == 0.0 and rep.rhs_norm == 0.0


def test_check_against_piecewise_closed_form():
    grid = logtime_grid(t_min=1e-4, t_max=1e3, n_panels=300, breakpoints=(1.0,))
    a, b = grid.t_min, grid.t_max
    g = lambda y: (y < 1.0).astype(float)
    rep = hardy_inequality_check(g, 1.0, make_constant(2.0), "lower", grid)

    # truncated transform: (t - a)/t on [a, 1], (1 - a)/t beyond
    def h_sq_dmu(t):
        h = (t - a) / t if t <= 1.0 else (1.0 - a) / t
        return h * h / t

    m1, _ = quad(h_sq_dmu, a, 1.0, limit=200)
    m2, _ = quad(h_sq_dmu, 1.0, b, limit=200)
    assert rep.lhs_norm == pytest.approx(np.sqrt(m1 + m2), rel=1e-7)
    assert rep.rhs_norm == pytest.approx(np.sqrt(np.log(1.0 / a)), rel=1e-9)
    assert np.isfinite(rep.ratio) and rep.ratio > 0


@pytest.mark.parametrize("q", [make_constant(2.0), make_time_family(1.5, 3.0)])
def test_reference_family_all_ratios_finite(q):
    base = logtime_grid(n_panels=120)
    for case in reference_family():
        grid = base.with_breakpoints(case.breakpoints) if case.breakpoints else base
        for r in (0.25, 0.5, 1.0, 2.0):
            for side in ("lower", "upper"):
                rep = hardy_inequality_check(
                    case.fn, r, q, side, grid, exp_decay=case.exp_decay
                )
                assert np.isfinite(rep.ratio) and rep.ratio > 0, (case.name, r, side)


def test_ratio_stable_under_grid_doubling():
    q = make_time_family(1.5, 3.0)
    family = {c.name: c for c in reference_family()}
    for name in ("indicator_1_2", "y2_exp", "inv_y45_above_1"):
        case = family[name]
        grid = logtime_grid(n_panels=150, breakpoints=case.breakpoints)
        for r in (0.5, 1.0):
            for side in ("lower", "upper"):
                coarse = hardy_inequality_check(
                    case.fn, r, q, side, grid, exp_decay=case.exp_decay
                ).ratio
                fine = hardy_inequality_check(
                    case.fn, r, q, side, grid.refined(), exp_decay=case.exp_decay
                ).ratio
                assert abs(fine - coarse) / coarse < 0.02, (name, r, side)


def test_scaling_covariance_constant_exponent():
    # for constant q, replacing g(y) by g(cy) leaves the lower ratio invariant
    q = make_constant(2.0)
    r = 0.7
    g = lambda y: ((y > 1.0) & (y < 2.0)).astype(float)
    gc = lambda y: g(2.0 * y)
    grid_g = logtime_grid(1e-6, 1e6, n_panels=250, breakpoints=(1.0, 2.0))
    grid_gc = logtime_grid(1e-6, 1e6, n_panels=250, breakpoints=(0.5, 1.0))
    ratio_g = hardy_inequality_check(g, r, q, "lower", grid_g).ratio
    ratio_gc = hardy_inequality_check(gc, r, q, "lower", grid_gc).ratio
    assert ratio_gc == pytest.approx(ratio_g, rel=1e-8)


def test_tail_bound_reporting():
    family = {c.name: c for c in reference_family()}
    case = family["inv_y45_above_1"]
    grid = logtime_grid(n_panels=100, breakpoints=case.breakpoints)
    rep = hardy_inequality_check(case.fn, 0.5, make_constant(2.0), "upper", grid)
    assert rep.tail_bound is not None and 0.0 < rep.tail_bound < 1e-9
    exp_case = family["y2_exp"]
    rep_exp = hardy_inequality_check(
        exp_case.fn, 0.5, make_constant(2.0), "upper", grid, exp_decay=True
    )
    assert rep_exp.tail_bound == 0.0
    low = hardy_inequality_check(case.fn, 0.5, make_constant(2.0), "lower", grid)
    assert low.tail_bound is None
    assert tail_truncation_bound(case.fn, grid) == rep.tail_bound


def test_parameter_guards():
    grid = logtime_grid(n_panels=50)
    g = lambda y: np.exp(-y)
    with pytest.raises(ParameterError):
        hardy_inequality_check(g, 1.0, make_constant(2.0), "sideways", grid)
    with pytest.raises(ParameterError):
        hardy_inequality_check(g, 1.0, make_gaussian_family(2.0, 1.0), "lower", grid)
    with pytest.raises(ParameterError):
        hardy_inequality_check(g, 1.0, make_time_family(1.0, 2.0), "lower", grid)
    with pytest.raises(ParameterError):
        hardy_inequality_check(g, 1.0, make_time_family(2.0, 1.0), "upper", grid)
    with pytest.raises(ParameterError):
        hardy_lower(g, -1.0, 1.0, grid)
    with pytest.raises(ParameterError):
        hardy_upper(g, 0.0, 1.0, grid)
    with pytest.raises(ParameterError):
        hardy_lower(g, 1.0, -2.0, grid)


def test_inconsistent_quadrature_guard():
    # synthetic inconsistency: g vanishes on the norm nodes but not on the
    # finer panel-mass nodes, forcing rhs = 0 with lhs > 0
    grid = logtime_grid(n_panels=40)
    n_norm_nodes = len(grid.points)

    def tricky(y):
        y = np.asarray(y)
        if y.size == n_norm_nodes:
            return np.zeros_like(y)
        return np.ones_like(y)

    with pytest.raises(ConvergenceError):
        hardy_inequality_check(tricky, 1.0, make_constant(2.0), "lower", grid)
