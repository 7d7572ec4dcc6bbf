"""Subordination density calculus: exact tables, closed-form moments, scaling."""

from fractions import Fraction
from math import sqrt, pi, exp

import mpmath as mp
import numpy as np
import pytest
from scipy.integrate import quad

from gvs.errors import ParameterError
from gvs.subordinator import (
    StableDerivative,
    density,
    derivative_terms,
    moment,
    moment_constant,
    moment_quadrature,
    tv_derivative_bound,
)


class TestDensity:
    def test_pinned_value(self):
        assert density(2.0, 1.0) == pytest.approx(exp(-1.0) / sqrt(pi), rel=1e-14)

    @pytest.mark.parametrize("t", [0.1, 1.0, 10.0])
    def test_probability_mass(self, t):
        assert moment_quadrature(0, t) == pytest.approx(1.0, abs=1e-9)

    def test_scipy_oracle(self):
        # independent integrator on the raw s axis
        val, _ = quad(lambda s: density(1.0, s), 0, np.inf, limit=400)
        assert val == pytest.approx(1.0, abs=1e-9)

    def test_domain_errors(self):
        with pytest.raises(ParameterError):
            density(0.0, 1.0)
        with pytest.raises(ParameterError):
            density(1.0, -1.0)


class TestDerivativeTerms:
    def test_first_derivative_table(self):
        assert derivative_terms(1) == {(-1, 0): Fraction(1), (1, 1): Fraction(-1, 2)}

    def test_second_derivative_table(self):
        # d^2 g/dt^2 = (-3/(2s) + t^2/(4 s^2)) g by direct differentiation
        assert derivative_terms(2) == {(0, 1): Fraction(-3, 2), (2, 2): Fraction(1, 4)}

    @pytest.mark.parametrize("k", range(9))
    def test_degree_invariant(self, k):
        table = derivative_terms(k)
        assert table, "table never empty"
        assert all(2 * j - i == k for (i, j) in table)
        assert all(isinstance(a, Fraction) for a in table.values())

    def test_matches_high_precision_fd(self):
        # finite differences at 40-digit precision; float64 differencing decays
        # into roundoff for k >= 3 at any fixed small step
        mp.mp.dps = 40

        def g_mp(t, s):
            t = mp.mpf(t)
            return t / (2 * mp.sqrt(mp.pi)) * mp.exp(-(t**2) / (4 * s)) * mp.mpf(s) ** mp.mpf("-1.5")

        rng = np.random.default_rng(42)
        pts = rng.uniform(0.2, 5.0, size=(50, 2))
        for k in range(1, 5):
            deriv = StableDerivative(k)
            for t, s in pts[:12]:
                fd = float(mp.diff(lambda tt: g_mp(tt, s), mp.mpf(t), k))
                sym = deriv(t, s)
                assert abs(sym - fd) <= 1e-5 * max(abs(fd), 1e-30)

    def test_negative_order_rejected(self):
        with pytest.raises(ParameterError):
            derivative_terms(-1)


class TestMoments:
    def test_constants(self):
        assert moment_constant(1) == pytest.approx(2.0, rel=1e-14)
        assert moment_constant(2) == pytest.approx(12.0, rel=1e-14)

    def test_pinned_value(self):
        assert moment(1, 2.0) == pytest.approx(0.5, rel=1e-14)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    @pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
    def test_closed_form_vs_quadrature(self, k, t):
        assert moment_quadrature(k, t) == pytest.approx(moment(k, t), rel=1e-10)

    def test_scipy_cross_check(self):
        val, _ = quad(lambda s: s ** (-2.0) * density(1.0, s), 0, np.inf, limit=400)
        assert val == pytest.approx(12.0, rel=1e-8)


class TestTotalVariation:
    def test_order_zero_is_mass(self):
        assert tv_derivative_bound(0, 1.7) == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_exact_t_homogeneity(self, k):
        ts = [0.25, 1.0, 4.0]
        scaled = [tv_derivative_bound(k, t) * t**k for t in ts]
        assert max(scaled) - min(scaled) <= 1e-8 * max(scaled)

    def test_first_order_value(self):
        # int |1/t - t/2s| g(t,s) ds at t=1 against a direct split integral:
        # prefactor changes sign at s = t^2/2 only
        t = 1.0
        left, _ = quad(lambda s: abs(1.0 / t - t / (2 * s)) * density(t, s), 0, 0.5, limit=200)
        right, _ = quad(lambda s: abs(1.0 / t - t / (2 * s)) * density(t, s), 0.5, np.inf, limit=200)
        assert tv_derivative_bound(1, t) == pytest.approx(left + right, rel=1e-8)
