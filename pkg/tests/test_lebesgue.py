"""Luxemburg norm machinery against closed forms and classical inequalities.

Oracles: for constant p the norm is (integral |f|^p dmu)^{1/p}, computable
directly from the quadrature weights; Gaussian moments of Hermite functions
give exact values for a few norms; indicator functions on dt/t panels have
modular ln 2 and hence pinnable norms.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gvs.errors import ParameterError
from gvs.exponents import (
    make_constant,
    make_gaussian_family,
    make_time_family,
)
from gvs.hermite import HermiteExpansion
from gvs.lebesgue import (
    ConjugateReport,
    MeasureSpace,
    conjugate_lower_bound,
    dual_witness,
    gaussian_space,
    holder_check,
    logtime_norm_identity_check,
    logtime_space,
    luxemburg_norm,
    luxemburg_norm_rows,
    minkowski_check,
    modular,
    weighted_space,
)
from gvs.quadrature import logtime_grid, make_context


@pytest.fixture(scope="module")
def space_1d():
    return gaussian_space(make_context(dim=1, nodes_per_axis=64))


@pytest.fixture(scope="module")
def tgrid():
    return logtime_grid(t_min=1e-3, t_max=1e2, n_panels=200)


def test_constant_exponent_reduction(space_1d):
    f = np.abs(space_1d.points[:, 0]) + 0.3
    for c in (1.0, 1.5, 2.0, 3.0, 7.0):
        oracle = float(np.sum(space_1d.weights * f**c)) ** (1.0 / c)
        res = luxemburg_norm(f, make_constant(c), space_1d)
        assert res.value == pytest.approx(oracle, rel=1e-8)
        assert res.modular_at_value == pytest.approx(1.0, rel=1e-7)


def test_gaussian_moment_norms(space_1d):
    h1 = HermiteExpansion.single((1,))
    h2 = HermiteExpansion.single((2,))
    two = make_constant(2.0)
    four = make_constant(4.0)
    assert luxemburg_norm(h1, two, space_1d).value == pytest.approx(1.0, rel=1e-10)
    assert luxemburg_norm(h1, four, space_1d).value == pytest.approx(3.0**0.25, rel=1e-10)
    assert luxemburg_norm(h2, four, space_1d).value == pytest.approx(15.0**0.25, rel=1e-10)
    h1sq = h1(space_1d.points) ** 2
    assert luxemburg_norm(h1sq, two, space_1d).value == pytest.approx(np.sqrt(3.0), rel=1e-10)


def test_zero_function_and_guards(space_1d, tgrid):
    res = luxemburg_norm(np.zeros(space_1d.size), make_constant(2.0), space_1d)
    assert res.value == 0.0 and res.modular_at_value == 0.0
    with pytest.raises(ParameterError):
        luxemburg_norm(np.ones(3), make_constant(2.0), space_1d)
    with pytest.raises(ParameterError):
        luxemburg_norm(
            np.ones(space_1d.size), make_time_family(1.5, 3.0), space_1d
        )
    with pytest.raises(ParameterError):
        modular(lambda t: t, make_gaussian_family(2.0, 1.0), logtime_space(tgrid))
    with pytest.raises(ParameterError):
        MeasureSpace(kind="nope", points=np.ones(2), weights=np.ones(2))


@settings(max_examples=40, deadline=None)
@given(scale=st.floats(min_value=1e-3, max_value=1e3))
def test_homogeneity(scale):
    space = gaussian_space(make_context(dim=1, nodes_per_axis=32))
    p = make_gaussian_family(2.0, 1.0)
    f = np.exp(-np.abs(space.points[:, 0])) + 0.1
    base = luxemburg_norm(f, p, space).value
    scaled = luxemburg_norm(scale * f, p, space).value
    assert scaled == pytest.approx(scale * base, rel=1e-8)


def test_homogeneity_extreme_scales(space_1d):
    p = make_gaussian_family(2.0, 1.0)
    f = np.abs(space_1d.points[:, 0]) + 0.5
    base = luxemburg_norm(f, p, space_1d).value
    for scale in (1e-150, 1e150):
        got = luxemburg_norm(scale * f, p, space_1d).value
        assert got == pytest.approx(scale * base, rel=1e-8)


def test_monotonicity_and_unit_ball(space_1d):
    p = make_gaussian_family(2.0, 1.0)
    f = np.abs(np.sin(space_1d.points[:, 0])) + 0.2
    g = f + 0.3
    nf = luxemburg_norm(f, p, space_1d).value
    ng = luxemburg_norm(g, p, space_1d).value
    assert nf < ng
    # the norm is the unit-modular level: above it the modular drops below 1
    assert modular(f / (0.9 * nf), p, space_1d) > 1.0
    assert modular(f / (1.1 * nf), p, space_1d) < 1.0


@pytest.mark.parametrize("t0", [0.1, 1.0, 10.0])
def test_indicator_norm_on_logtime(t0):
    grid = logtime_grid(t_min=1e-3, t_max=1e2, n_panels=160, breakpoints=(t0 / 2, t0))
    mu = logtime_space(grid)
    chi = ((mu.points >= t0 / 2) & (mu.points <= t0)).astype(float)
    assert modular(chi, make_constant(1.0), mu) == pytest.approx(np.log(2.0), rel=1e-12)
    for c in (1.5, 3.0):
        got = luxemburg_norm(chi, make_constant(c), mu).value
        assert got == pytest.approx(np.log(2.0) ** (1.0 / c), rel=1e-9)
    # variable exponent: bracket by the interval's smallest exponent
    q = make_time_family(1.5, 3.0)
    got = luxemburg_norm(chi, q, mu).value
    q_min = float(np.min(q(mu.points[chi > 0])))
    assert np.log(2.0) ** (1.0 / q_min) - 1e-9 <= got <= 1.0


def test_indicator_pinned_value():
    grid = logtime_grid(t_min=1e-3, t_max=1e2, n_panels=160, breakpoints=(0.5, 1.0))
    mu = logtime_space(grid)
    chi = ((mu.points >= 0.5) & (mu.points <= 1.0)).astype(float)
    got = luxemburg_norm(chi, make_constant(1.5), mu).value
    assert got == pytest.approx(0.7832197687778, rel=1e-9)


@pytest.mark.parametrize(
    "q", [make_constant(2.0), make_time_family(1.5, 3.0), make_time_family(3.0, 1.2)]
)
def test_logtime_weight_identity(q, tgrid):
    f = lambda t: t**0.3 * np.exp(-t)
    lhs, rhs = logtime_norm_identity_check(f, q, tgrid)
    assert lhs == pytest.approx(rhs, rel=1e-9)
    assert lhs > 0


def test_holder_constant_exponents(space_1d):
    f = 1.0 + space_1d.points[:, 0] ** 2
    g = np.exp(-np.abs(space_1d.points[:, 0]))
    rep = holder_check(f, g, make_constant(3.0), make_constant(1.5), space_1d)
    assert rep.ok
    # classical Holder holds with constant 1, so the padded ratio stays <= 1/2
    assert 0.1 < rep.ratio <= 0.5 + 1e-9


def test_holder_variable_exponents(space_1d):
    f = 1.0 + np.abs(space_1d.points[:, 0])
    g = 1.0 / (1.0 + space_1d.points[:, 0] ** 2)
    rep = holder_check(f, g, make_gaussian_family(2.5, 1.0), make_constant(3.0), space_1d)
    assert rep.ok and 0.0 < rep.ratio <= 1.0


def test_holder_rejects_sublebesgue(space_1d):
    with pytest.raises(ParameterError):
        holder_check(
            np.ones(space_1d.size),
            np.ones(space_1d.size),
            make_constant(1.5),
            make_constant(2.0),
            space_1d,
        )


@pytest.mark.parametrize("p", [make_constant(2.0), make_gaussian_family(2.0, 1.0)])
def test_minkowski_separable_ratio(p, space_1d):
    ys = np.linspace(0.1, 3.0, 40)
    wy = np.full(40, (3.0 - 0.1) / 40)
    inner = weighted_space(ys, wy)

    def F(xs, ys_):
        return (1.0 + xs[:, 0] ** 2)[:, None] * np.exp(-ys_)[None, :]

    rep = minkowski_check(F, p, space_1d, inner)
    assert rep.ok
    # separable kernels make both sides proportional: the 4 is the whole gap
    assert rep.ratio == pytest.approx(0.25, rel=1e-7)


def test_minkowski_matrix_input_and_shape_guard(space_1d):
    inner = weighted_space(np.array([0.5, 1.5]), np.array([0.4, 0.6]))
    M = np.ones((space_1d.size, 2))
    rep = minkowski_check(M, make_constant(2.0), space_1d, inner)
    assert rep.ok
    with pytest.raises(ParameterError):
        minkowski_check(np.ones((3, 2)), make_constant(2.0), space_1d, inner)


def test_conjugate_witness_attains_norm(space_1d):
    p = make_gaussian_family(2.0, 1.0)
    f = 1.0 + np.abs(space_1d.points[:, 0])
    g_star = dual_witness(f, p, space_1d)
    assert luxemburg_norm(g_star, p.conjugate(), space_1d).value == pytest.approx(1.0, rel=1e-8)
    rep = conjugate_lower_bound(f, p, space_1d, [g_star, np.ones(space_1d.size)])
    assert isinstance(rep, ConjugateReport)
    assert rep.upper_ok
    assert rep.lower_ratio == pytest.approx(1.0, rel=1e-7)
    assert rep.lower_ratio >= 0.5


def test_conjugate_requires_pminus_above_one(space_1d):
    with pytest.raises(ParameterError):
        conjugate_lower_bound(
            np.ones(space_1d.size), make_constant(1.0), space_1d, [np.ones(space_1d.size)]
        )


def test_row_batched_matches_scalar(space_1d):
    rng = np.random.default_rng(0)
    V = rng.normal(size=(20, space_1d.size)) ** 2 + 0.01
    V[7] = 0.0
    p = make_gaussian_family(2.0, 1.0)
    p_at = np.asarray(p(space_1d.points), dtype=float)
    batched = luxemburg_norm_rows(V, space_1d.weights, p_at)
    for i in range(20):
        expect = luxemburg_norm(V[i], p, space_1d).value
        assert batched[i] == pytest.approx(expect, rel=1e-8, abs=1e-300)
    assert batched[7] == 0.0
