"""Variable exponents p(.) with bounds, limits, and regularity-class estimates.

An :class:`ExponentFunction` is a bounded measurable exponent together with
the metadata the norm machinery needs: essential bounds ``p_minus <= p(x) <=
p_plus`` (with p_minus >= 1), limits at 0 / infinity when they exist, and a
set of regularity-class tags. Three built-in families cover the use cases:

* ``make_constant(c)`` - constant exponents, member of every class;
* ``make_gaussian_family(p_inf, c)`` - p(x) = p_inf + c / (1 + |x|^2) on R^d,
  which approaches its limit at rate |x|^{-2} (tag ``P_gamma_inf``) and is
  log-Holder continuous;
* ``make_time_family(q0, q_inf)`` - q(t) = q_inf + (q0 - q_inf) / (1 + t) on
  the half-line, with limits q0 at 0+ and q_inf at infinity (tag ``P_0_inf``).

``estimate_class_constants`` measures the corresponding moduli empirically on
a sample set; the class constants it reports are suprema over the samples,
lower bounds for the true constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ParameterError

TAG_LH0 = "LH0"                # log-Holder continuity at small scales
TAG_LHINF = "LHinf"            # log-Holder decay to the limit at infinity
TAG_GAUSS_INF = "P_gamma_inf"  # |p(x) - p_inf| <= C / |x|^2
TAG_HALFLINE = "P_0_inf"       # limits at 0+ and infinity with log rates


@dataclass(frozen=True, eq=False)
class ExponentFunction:
    """Bounded exponent with metadata; callable on point arrays.

    ``fn`` must be vectorized: for space exponents it receives points of
    shape (m, d) or (m,), for time exponents positive reals of shape (m,).
    """

    fn: Callable[[np.ndarray], np.ndarray]
    p_minus: float
    p_plus: float
    domain: str = "space"  # "space", "time", or "both"
    limit_zero: float | None = None
    limit_infty: float | None = None
    class_tags: frozenset = frozenset()
    descriptor: dict | None = None

    def __post_init__(self):
        if not (1.0 <= self.p_minus <= self.p_plus):
            raise ParameterError(
                f"need 1 <= p_minus <= p_plus < inf, got [{self.p_minus}, {self.p_plus}]"
            )
        if not np.isfinite(self.p_plus):
            raise ParameterError("p_plus must be finite")
        if self.domain not in ("space", "time", "both"):
            raise ParameterError(f"unknown domain {self.domain!r}")

    def __call__(self, points) -> np.ndarray:
        vals = np.asarray(self.fn(np.asarray(points, dtype=float)), dtype=float)
        return vals

    @property
    def is_constant(self) -> bool:
        return self.p_minus == self.p_plus

    def conjugate(self) -> "ExponentFunction":
        """Pointwise conjugate p' = p / (p - 1); requires p_minus > 1."""
        if self.p_minus <= 1.0:
            raise ParameterError("conjugate exponent needs p_minus > 1")
        return ExponentFunction(
            fn=lambda pts, f=self.fn: (lambda v: v / (v - 1.0))(np.asarray(f(pts), dtype=float)),
            p_minus=self.p_plus / (self.p_plus - 1.0),
            p_plus=self.p_minus / (self.p_minus - 1.0),
            domain=self.domain,
            limit_zero=None if self.limit_zero is None else self.limit_zero / (self.limit_zero - 1.0),
            limit_infty=None if self.limit_infty is None else self.limit_infty / (self.limit_infty - 1.0),
            class_tags=self.class_tags,
        )

    def scaled(self, s: float) -> "ExponentFunction":
        """The exponent s * p(.); requires s * p_minus >= 1."""
        s = float(s)
        if s * self.p_minus < 1.0:
            raise ParameterError(f"scaled exponent {s} * p has minimum {s * self.p_minus} < 1")
        return ExponentFunction(
            fn=lambda pts, f=self.fn: s * np.asarray(f(pts), dtype=float),
            p_minus=s * self.p_minus,
            p_plus=s * self.p_plus,
            domain=self.domain,
            limit_zero=None if self.limit_zero is None else s * self.limit_zero,
            limit_infty=None if self.limit_infty is None else s * self.limit_infty,
            class_tags=self.class_tags,
        )


def _combine(domain_a: str, domain_b: str) -> str:
    if domain_a == domain_b:
        return domain_a
    if domain_a == "both":
        return domain_b
    if domain_b == "both":
        return domain_a
    raise ParameterError(f"cannot combine exponents on domains {domain_a!r} and {domain_b!r}")


def holder_conjugate_pair(q: ExponentFunction, r: ExponentFunction) -> ExponentFunction:
    """The exponent p with 1/p = 1/q + 1/r pointwise.

    The returned bounds are the conservative interval-arithmetic ones; they
    are exact when q and r attain their extremes at common points, which
    holds for all built-in families. Raises if the conservative lower bound
    drops below 1 (the product space would leave the Lebesgue scale).
    """
    p_minus = 1.0 / (1.0 / q.p_minus + 1.0 / r.p_minus)
    p_plus = 1.0 / (1.0 / q.p_plus + 1.0 / r.p_plus)
    if p_minus < 1.0:
        raise ParameterError(
            f"1/q + 1/r exceeds 1 somewhere (conservative p_minus = {p_minus:.4f})"
        )

    def fn(pts, qf=q.fn, rf=r.fn):
        return 1.0 / (1.0 / np.asarray(qf(pts), dtype=float) + 1.0 / np.asarray(rf(pts), dtype=float))

    def _lim(a, b):
        return None if a is None or b is None else 1.0 / (1.0 / a + 1.0 / b)

    return ExponentFunction(
        fn=fn,
        p_minus=p_minus,
        p_plus=p_plus,
        domain=_combine(q.domain, r.domain),
        limit_zero=_lim(q.limit_zero, r.limit_zero),
        limit_infty=_lim(q.limit_infty, r.limit_infty),
        class_tags=q.class_tags & r.class_tags,
    )


def harmonic_interpolation(p0: ExponentFunction, p1: ExponentFunction, theta: float) -> ExponentFunction:
    """The exponent p with 1/p = (1 - theta)/p0 + theta/p1 pointwise."""
    if not 0.0 <= theta <= 1.0:
        raise ParameterError(f"theta must lie in [0, 1], got {theta}")

    def fn(pts, f0=p0.fn, f1=p1.fn):
        return 1.0 / (
            (1.0 - theta) / np.asarray(f0(pts), dtype=float)
            + theta / np.asarray(f1(pts), dtype=float)
        )

    def _lim(a, b):
        return None if a is None or b is None else 1.0 / ((1.0 - theta) / a + theta / b)

    return ExponentFunction(
        fn=fn,
        p_minus=1.0 / ((1.0 - theta) / p0.p_minus + theta / p1.p_minus),
        p_plus=1.0 / ((1.0 - theta) / p0.p_plus + theta / p1.p_plus),
        domain=_combine(p0.domain, p1.domain),
        limit_zero=_lim(p0.limit_zero, p1.limit_zero),
        limit_infty=_lim(p0.limit_infty, p1.limit_infty),
        class_tags=p0.class_tags & p1.class_tags,
    )


def make_constant(c: float) -> ExponentFunction:
    """Constant exponent p(x) = c, usable on either domain."""
    c = float(c)
    if c < 1.0 or not np.isfinite(c):
        raise ParameterError(f"constant exponent must satisfy 1 <= c < inf, got {c}")

    def fn(pts):
        pts = np.asarray(pts, dtype=float)
        shape = pts.shape[:-1] if pts.ndim == 2 else pts.shape
        return np.full(shape, c)

    return ExponentFunction(
        fn=fn,
        p_minus=c,
        p_plus=c,
        domain="both",
        limit_zero=c,
        limit_infty=c,
        class_tags=frozenset({TAG_LH0, TAG_LHINF, TAG_GAUSS_INF, TAG_HALFLINE}),
        descriptor={"kind": "constant", "params": [c]},
    )


def _radius_sq(pts: np.ndarray) -> np.ndarray:
    pts = np.asarray(pts, dtype=float)
    if pts.ndim == 2:
        return np.sum(pts * pts, axis=-1)
    return pts * pts


def make_gaussian_family(p_inf: float, c: float) -> ExponentFunction:
    """Space exponent p(x) = p_inf + c / (1 + |x|^2); p_minus = p_inf, p_plus = p_inf + c."""
    p_inf, c = float(p_inf), float(c)
    if p_inf < 1.0:
        raise ParameterError(f"limit exponent must be >= 1, got {p_inf}")
    if c < 0.0:
        raise ParameterError(f"amplitude must be >= 0, got {c}")

    def fn(pts):
        return p_inf + c / (1.0 + _radius_sq(pts))

    return ExponentFunction(
        fn=fn,
        p_minus=p_inf,
        p_plus=p_inf + c,
        domain="space",
        limit_zero=None,
        limit_infty=p_inf,
        class_tags=frozenset({TAG_LH0, TAG_LHINF, TAG_GAUSS_INF}),
        descriptor={"kind": "gaussian", "params": [p_inf, c]},
    )


def make_time_family(q0: float, q_inf: float) -> ExponentFunction:
    """Time exponent q(t) = q_inf + (q0 - q_inf) / (1 + t) on (0, inf)."""
    q0, q_inf = float(q0), float(q_inf)
    if q0 < 1.0 or q_inf < 1.0:
        raise ParameterError(f"both endpoint exponents must be >= 1, got q0={q0}, q_inf={q_inf}")

    def fn(ts):
        ts = np.asarray(ts, dtype=float)
        return q_inf + (q0 - q_inf) / (1.0 + ts)

    return ExponentFunction(
        fn=fn,
        p_minus=min(q0, q_inf),
        p_plus=max(q0, q_inf),
        domain="time",
        limit_zero=q0,
        limit_infty=q_inf,
        class_tags=frozenset({TAG_LH0, TAG_LHINF, TAG_HALFLINE}),
        descriptor={"kind": "time", "params": [q0, q_inf]},
    )


def exponent_from_descriptor(desc: dict) -> ExponentFunction:
    """Rebuild a built-in family from its JSON descriptor."""
    if not isinstance(desc, dict) or "kind" not in desc or "params" not in desc:
        raise ParameterError(f"exponent descriptor needs 'kind' and 'params', got {desc!r}")
    kind, params = desc["kind"], list(desc["params"])
    if kind == "constant":
        if len(params) != 1:
            raise ParameterError("constant descriptor takes exactly one parameter")
        return make_constant(params[0])
    if kind == "gaussian":
        if len(params) != 2:
            raise ParameterError("gaussian descriptor takes exactly two parameters")
        return make_gaussian_family(params[0], params[1])
    if kind == "time":
        if len(params) != 2:
            raise ParameterError("time descriptor takes exactly two parameters")
        return make_time_family(params[0], params[1])
    raise ParameterError(f"unknown exponent kind {kind!r}")


@dataclass(frozen=True)
class ClassConstants:
    """Empirical regularity moduli measured on a sample set.

    Fields are suprema over the samples, or None when the needed limit or
    domain does not apply. The distinct constants are reported separately;
    nothing merges them into a single number.
    """

    c_lh0: float | None
    c_lhinf: float | None
    c_gamma: float | None
    a0: float | None
    a_inf: float | None


def estimate_class_constants(p: ExponentFunction, samples) -> ClassConstants:
    """Empirical log-Holder / decay constants for p on the given samples.

    ``samples`` has shape (m, d) for space exponents or (m,) for time
    exponents (positive). Pairwise quantities are O(m^2); keep m moderate.
    """
    pts = np.asarray(samples, dtype=float)
    if pts.ndim not in (1, 2) or len(pts) < 2:
        raise ParameterError("need at least two sample points")
    if p.is_constant:
        return ClassConstants(0.0, 0.0, 0.0, 0.0, 0.0)

    vals = p(pts)
    radii = np.sqrt(_radius_sq(pts))

    # pairwise log-Holder modulus at small scales
    diffs = np.abs(vals[:, None] - vals[None, :])
    if pts.ndim == 2:
        dist = np.sqrt(np.sum((pts[:, None, :] - pts[None, :, :]) ** 2, axis=-1))
    else:
        dist = np.abs(pts[:, None] - pts[None, :])
    mask = dist > 0
    c_lh0 = float(np.max(diffs[mask] * np.log(np.e + 1.0 / dist[mask]))) if mask.any() else 0.0

    c_lhinf = None
    c_gamma = None
    if p.limit_infty is not None:
        gap = np.abs(vals - p.limit_infty)
        c_lhinf = float(np.max(gap * np.log(np.e + radii)))
        if p.domain in ("space", "both"):
            c_gamma = float(np.max(gap * radii**2))

    a0 = None
    a_inf = None
    if p.domain in ("time", "both") and pts.ndim == 1:
        if p.limit_zero is not None:
            small = pts[(pts > 0) & (pts <= 0.5)]
            if small.size:
                a0 = float(np.max(np.abs(p(small) - p.limit_zero) * np.log(1.0 / small)))
        if p.limit_infty is not None:
            large = pts[pts >= 2.0]
            if large.size:
                a_inf = float(np.max(np.abs(p(large) - p.limit_infty) * np.log(large)))

    return ClassConstants(c_lh0=c_lh0, c_lhinf=c_lhinf, c_gamma=c_gamma, a0=a0, a_inf=a_inf)
