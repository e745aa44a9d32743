"""Mode location and boundary-behavior classification.

Closed forms exist for the three subfamilies; for general finite p the
stationary points come from the roots t in (0, 1) of

    (b-1) t^(-1/q) (1-t) - b(q+1) (t^(-1/q) - 1)(1-t) + p b q (t^(-1/q) - 1) t = 0

each mapping back to x = x0 + c (p+1)^(-1/(bq)) (t^(-1/q) - 1)^(1/b).
Unimodality is only guaranteed for the subfamilies, so the general path
evaluates the density at every root plus the boundary and keeps the global
maximizer.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import IFDistribution, IFParams, Subfamily, classify
from .errors import DomainError
from .kernels import Bracket, find_root

__all__ = [
    "BoundaryKind",
    "BoundaryBehavior",
    "ModeKind",
    "ModeResult",
    "boundary_behavior",
    "solve_mode_equation",
    "mode",
    "mode_grid",
    "MODE_AT_BOUNDARY",
    "MODE_ASYMPTOTE",
]

# sentinel codes used by mode_grid cells (modes are >= x0 >= 0, so these
# cannot collide with a real mode location)
MODE_AT_BOUNDARY = -1.0
MODE_ASYMPTOTE = -2.0

_GRID_POINTS = 1000
_GRID_EPS = 1e-12


class BoundaryKind(enum.Enum):
    DIVERGES = "diverges-to-infinity"
    FINITE = "finite-positive"
    ZERO = "zero-at-boundary"


@dataclass(frozen=True)
class BoundaryBehavior:
    kind: BoundaryKind
    value: float  # the density limit at x0: +inf, a positive constant, or 0


class ModeKind(enum.Enum):
    BOUNDARY = "boundary"
    INTERIOR = "interior"
    ASYMPTOTE = "asymptote-at-boundary"


@dataclass(frozen=True)
class ModeResult:
    kind: ModeKind
    x: float
    density: float
    n_candidates: int = 0  # interior stationary points examined (general path)

    @staticmethod
    def boundary(x0: float, density: float) -> "ModeResult":
        return ModeResult(ModeKind.BOUNDARY, x0, density)

    @staticmethod
    def interior(x: float, density: float, n_candidates: int = 0) -> "ModeResult":
        return ModeResult(ModeKind.INTERIOR, x, density, n_candidates)

    @staticmethod
    def asymptote(x0: float) -> "ModeResult":
        return ModeResult(ModeKind.ASYMPTOTE, x0, math.inf)


def boundary_behavior(params: IFParams) -> BoundaryBehavior:
    """How the density behaves as x -> x0+.

    Near the boundary the density scales like y^(b(p+1)-1) for b > 0 (with
    exponent +inf at p = inf) and like y^(-bq-1) for b < 0, so the sign of
    that local exponent decides between divergence, a finite limit and zero.
    """
    value = IFDistribution(params)._boundary_density()
    if value == math.inf:
        return BoundaryBehavior(BoundaryKind.DIVERGES, value)
    if value == 0.0:
        return BoundaryBehavior(BoundaryKind.ZERO, value)
    return BoundaryBehavior(BoundaryKind.FINITE, value)


def _residual_factory(params: IFParams):
    b, q, p = params.b, params.q, params.p

    def residual(t):
        t = np.asarray(t, dtype=float)
        sm1 = np.expm1(-np.log(t) / q)   # t^(-1/q) - 1, exact near t = 1
        s = sm1 + 1.0
        return ((b - 1.0) * s * (1.0 - t)
                - b * (q + 1.0) * sm1 * (1.0 - t)
                + p * b * q * sm1 * t)

    return residual


def _t_grid() -> np.ndarray:
    # logarithmic half-grids in t and in 1-t: the residual varies fastest
    # near t = 0, while small-p roots crowd toward t = 1
    n = _GRID_POINTS // 2
    low = np.exp(np.linspace(math.log(_GRID_EPS), math.log(0.5), n))
    high = 1.0 - np.exp(np.linspace(math.log(0.5), math.log(_GRID_EPS), n))
    return np.unique(np.concatenate([low, high]))


def solve_mode_equation(params: IFParams, tol: float = 1e-14) -> list[float]:
    """All distinct roots t in (0, 1) of the stationarity equation (finite p)."""
    IFDistribution(params)  # validate
    if math.isinf(params.p):
        raise DomainError("the stationarity equation in t requires finite p")
    residual = _residual_factory(params)
    ts = _t_grid()
    vals = residual(ts)
    roots: list[float] = []
    for i in range(len(ts) - 1):
        a, bnd = vals[i], vals[i + 1]
        if a == 0.0:
            roots.append(float(ts[i]))
        elif a * bnd < 0.0:
            roots.append(find_root(residual, Bracket(float(ts[i]), float(ts[i + 1])),
                                   tol=tol))
    if vals[-1] == 0.0:
        roots.append(float(ts[-1]))
    roots.sort()
    merged: list[float] = []
    for r in roots:
        if not merged or abs(r - merged[-1]) > 1e-9 * max(1.0, abs(r)):
            merged.append(r)
    return merged


def mode_x_from_t(params: IFParams, t: float) -> float:
    """Map a root of the stationarity equation back to the x axis."""
    b, c, q, p, x0 = params.b, params.c, params.q, params.p, params.x0
    inner = math.expm1(-math.log(t) / q)
    scale = math.exp(-math.log1p(p) / (b * q))
    return x0 + c * scale * inner ** (1.0 / b)


def _if1_mode(params: IFParams, d: IFDistribution) -> ModeResult:
    b, c, q, x0 = params.b, params.c, params.q, params.x0
    if b == 1.0 or b == -1.0 / q:
        return ModeResult.boundary(x0, d.pdf(x0))
    if b > 1.0 or b < -1.0 / q:
        x = x0 + c * ((b - 1.0) / (b * q + 1.0)) ** (1.0 / b)
        return ModeResult.interior(x, d.pdf(x))
    return ModeResult.asymptote(x0)


def _if2_mode(params: IFParams, d: IFDistribution) -> ModeResult:
    b, c, q, x0 = params.b, params.c, params.q, params.x0
    if b == -1.0 / q:
        return ModeResult.boundary(x0, d.pdf(x0))
    if b > 0.0 or b < -1.0 / q:
        x = x0 + c * (b * q / (b * q + 1.0)) ** (1.0 / (b * q))
        return ModeResult.interior(x, d.pdf(x))
    return ModeResult.asymptote(x0)


def _if3_mode(params: IFParams, d: IFDistribution) -> ModeResult:
    p, c, q, x0 = params.p, params.c, params.q, params.x0
    scale = math.exp(-math.log1p(p) / q)
    x = x0 + c * scale * (((q + 1.0) / ((p + 1.0) * q + 1.0)) ** (-1.0 / q) - 1.0)
    return ModeResult.interior(x, d.pdf(x))


def mode(params: IFParams) -> ModeResult:
    """Global maximizer of the density: the boundary x0, an interior point,
    or a vertical asymptote at x0."""
    d = IFDistribution(params)
    sub = classify(params)
    if sub is Subfamily.IF1:
        return _if1_mode(params, d)
    if sub is Subfamily.IF2:
        return _if2_mode(params, d)
    if sub is Subfamily.IF3:
        return _if3_mode(params, d)

    bb = boundary_behavior(params)
    if bb.kind is BoundaryKind.DIVERGES:
        return ModeResult.asymptote(params.x0)
    roots = solve_mode_equation(params)
    best_x, best_f = params.x0, bb.value
    for t in roots:
        x = mode_x_from_t(params, t)
        fx = d.pdf(x)
        if fx > best_f:
            best_x, best_f = x, fx
    if best_x == params.x0:
        return ModeResult(ModeKind.BOUNDARY, params.x0, bb.value, len(roots))
    return ModeResult.interior(best_x, best_f, len(roots))


_AXIS_NAMES = ("p", "b", "c", "q", "x0")


def mode_grid(template: IFParams, axis1: tuple[str, float, float],
              axis2: tuple[str, float, float],
              steps: int | tuple[int, int]) -> np.ndarray:
    """Matrix of mode locations over a 2-parameter sweep.

    Row i, column j holds the mode x for axis1 value i and axis2 value j.
    Boundary modes are encoded as -1.0 and asymptotes at x0 as -2.0 (real
    modes are >= x0 >= 0, so the codes are unambiguous).
    """
    n1, n2 = (steps, steps) if isinstance(steps, int) else steps
    if n1 < 1 or n2 < 1:
        raise DomainError("mode_grid needs at least one step per axis")
    name1, lo1, hi1 = axis1
    name2, lo2, hi2 = axis2
    for name in (name1, name2):
        if name not in _AXIS_NAMES:
            raise DomainError(f"unknown axis parameter {name!r}")
    if name1 == name2:
        raise DomainError("the two axes must name different parameters")
    for lo, hi in ((lo1, hi1), (lo2, hi2)):
        if math.isnan(lo) or math.isnan(hi) or lo > hi:
            raise DomainError("axis range must satisfy lo <= hi")
    vals1 = np.linspace(lo1, hi1, n1)
    vals2 = np.linspace(lo2, hi2, n2)
    out = np.empty((n1, n2))
    base = {"p": template.p, "b": template.b, "c": template.c,
            "q": template.q, "x0": template.x0}
    for i, v1 in enumerate(vals1):
        for j, v2 in enumerate(vals2):
            kw = dict(base)
            kw[name1] = float(v1)
            kw[name2] = float(v2)
            res = mode(IFParams(**kw))
            if res.kind is ModeKind.BOUNDARY:
                out[i, j] = MODE_AT_BOUNDARY
            elif res.kind is ModeKind.ASYMPTOTE:
                out[i, j] = MODE_ASYMPTOTE
            else:
                out[i, j] = res.x
    return out
