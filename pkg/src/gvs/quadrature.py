"""Quadrature rules for the standard Gaussian measure and for dt/t.

Two discretizations back everything in this package:

* a tensor Gauss-Hermite rule for integrals against the Gaussian probability
  measure ``pi^{-d/2} exp(-|x|^2) dx`` on R^d, and
* a panelized Gauss-Legendre rule in u = ln t for integrals against the
  multiplicative measure dt/t on a truncated interval [t_min, t_max].

Both are bundled into :class:`QuadratureContext`, which is what the semigroup
and norm routines take. Default resolutions can be rescaled globally through
the ``GVS_GRID_SCALE`` environment variable (a float multiplier).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.legendre import leggauss

from .errors import ParameterError

DEFAULT_NODES_PER_AXIS = 64
DEFAULT_TIME_PANELS = 400
DEFAULT_T_MIN = 1e-4
DEFAULT_T_MAX = 1e3
_PANEL_ORDER = 6


def grid_scale() -> float:
    """Resolution multiplier read from GVS_GRID_SCALE (default 1.0)."""
    raw = os.environ.get("GVS_GRID_SCALE", "")
    if not raw:
        return 1.0
    try:
        scale = float(raw)
    except ValueError as exc:
        raise ParameterError(f"GVS_GRID_SCALE must be a float, got {raw!r}") from exc
    if not scale > 0:
        raise ParameterError(f"GVS_GRID_SCALE must be positive, got {scale}")
    return scale


def gauss_hermite_rule(nodes_per_axis: int, dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Tensor Gauss-Hermite rule normalized for the Gaussian probability measure.

    Parameters
    ----------
    nodes_per_axis : int
        1-d node count; the rule is exact on polynomials of degree
        ``2 * nodes_per_axis - 1`` per axis.
    dim : int
        Ambient dimension (tensor product of the 1-d rule).

    Returns
    -------
    points : ndarray, shape (nodes_per_axis**dim, dim)
    weights : ndarray, shape (nodes_per_axis**dim,)
        Weights sum to 1: the measure integrated is the Gaussian probability
        measure, so nodes are the raw Hermite nodes (no sqrt-2 rescaling) and
        the 1-d weights are divided by sqrt(pi).
    """
    if nodes_per_axis < 1:
        raise ParameterError("nodes_per_axis must be >= 1")
    if dim < 1:
        raise ParameterError("dim must be >= 1")
    x1, w1 = hermgauss(nodes_per_axis)
    w1 = w1 / np.sqrt(np.pi)
    if dim == 1:
        return x1[:, None].copy(), w1.copy()
    grids = np.meshgrid(*([x1] * dim), indexing="ij")
    points = np.stack([g.ravel() for g in grids], axis=-1)
    weights = np.ones(nodes_per_axis**dim)
    wgrids = np.meshgrid(*([w1] * dim), indexing="ij")
    for g in wgrids:
        weights *= g.ravel()
    return points, weights


@dataclass(frozen=True, eq=False)
class LogTimeGrid:
    """Panelized quadrature for ``integral f(t) dt/t`` over [t_min, t_max].

    Panels are log-spaced; any breakpoints supplied at construction become
    panel edges, so integrands with jumps exactly there are integrated without
    smearing. ``points``/``weights`` satisfy
    ``sum(weights * f(points)) ~ integral_{t_min}^{t_max} f(t) dt/t``.
    """

    t_min: float
    t_max: float
    n_panels: int
    breakpoints: tuple[float, ...]
    points: np.ndarray
    weights: np.ndarray

    @property
    def panel_edges(self) -> np.ndarray:
        """Panel boundaries in t, reproducing the construction exactly."""
        edges = np.geomspace(self.t_min, self.t_max, self.n_panels + 1)
        if self.breakpoints:
            edges = np.unique(np.concatenate([edges, np.asarray(self.breakpoints)]))
        return edges

    def refined(self) -> "LogTimeGrid":
        """Same grid with doubled panel count (breakpoints preserved)."""
        return logtime_grid(self.t_min, self.t_max, 2 * self.n_panels, self.breakpoints)

    def with_breakpoints(self, breakpoints) -> "LogTimeGrid":
        merged = tuple(sorted(set(self.breakpoints) | set(float(b) for b in breakpoints)))
        return logtime_grid(self.t_min, self.t_max, self.n_panels, merged)


def logtime_grid(
    t_min: float = DEFAULT_T_MIN,
    t_max: float = DEFAULT_T_MAX,
    n_panels: int | None = None,
    breakpoints: tuple[float, ...] = (),
) -> LogTimeGrid:
    """Build a :class:`LogTimeGrid`; panel count defaults to 400 * GVS_GRID_SCALE."""
    if not (0 < t_min < t_max):
        raise ParameterError(f"need 0 < t_min < t_max, got [{t_min}, {t_max}]")
    if n_panels is None:
        n_panels = max(8, round(DEFAULT_TIME_PANELS * grid_scale()))
    if n_panels < 1:
        raise ParameterError("n_panels must be >= 1")
    edges = np.geomspace(t_min, t_max, n_panels + 1)
    inner = [float(b) for b in breakpoints if t_min < b < t_max]
    if inner:
        edges = np.unique(np.concatenate([edges, inner]))
    u = np.log(edges)
    gx, gw = leggauss(_PANEL_ORDER)
    mid = 0.5 * (u[:-1] + u[1:])
    half = 0.5 * np.diff(u)
    upts = (mid[:, None] + half[:, None] * gx[None, :]).ravel()
    uwts = (half[:, None] * gw[None, :]).ravel()
    return LogTimeGrid(
        t_min=float(t_min),
        t_max=float(t_max),
        n_panels=int(n_panels),
        breakpoints=tuple(sorted(set(inner))),
        points=np.exp(upts),
        weights=uwts,
    )


@dataclass(frozen=True, eq=False)
class QuadratureContext:
    """Gauss-Hermite rule for the Gaussian measure plus a dt/t grid.

    Attributes
    ----------
    dim : int
    nodes_per_axis : int
    gh_points : ndarray, shape (n, dim)
    gh_weights : ndarray, shape (n,)
    time_grid : LogTimeGrid
    """

    dim: int
    nodes_per_axis: int
    gh_points: np.ndarray
    gh_weights: np.ndarray
    time_grid: LogTimeGrid

    def with_time_grid(self, time_grid: LogTimeGrid) -> "QuadratureContext":
        return QuadratureContext(
            dim=self.dim,
            nodes_per_axis=self.nodes_per_axis,
            gh_points=self.gh_points,
            gh_weights=self.gh_weights,
            time_grid=time_grid,
        )


def make_context(
    dim: int = 1,
    nodes_per_axis: int | None = None,
    t_min: float = DEFAULT_T_MIN,
    t_max: float = DEFAULT_T_MAX,
    n_panels: int | None = None,
    breakpoints: tuple[float, ...] = (),
) -> QuadratureContext:
    """Assemble a :class:`QuadratureContext` with GVS_GRID_SCALE-aware defaults."""
    if nodes_per_axis is None:
        nodes_per_axis = max(4, round(DEFAULT_NODES_PER_AXIS * grid_scale()))
    points, weights = gauss_hermite_rule(nodes_per_axis, dim)
    return QuadratureContext(
        dim=dim,
        nodes_per_axis=nodes_per_axis,
        gh_points=points,
        gh_weights=weights,
        time_grid=logtime_grid(t_min, t_max, n_panels, breakpoints),
    )
