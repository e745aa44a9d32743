"""Parameter model, subfamily classification and the distribution surface.

The family has density

    f(x) = |b| q / c * y^(b-1) * G(x)^(-q-1) * e_p(G(x)^-q),   y = (x-x0)/c

on [x0, oo), where G(x) = (p+1)^(-1/q) + y^b for finite p (just y^b at
p = inf) and e_p is the deformed exponential (1 - t/(p+1))^p bridging the
constant 1 at p = 0 and exp(-t) at p = inf.  p = 0 gives pure power laws,
p = inf power laws with exponential cut-off, and finite p > 0 interpolates.

All distribution functions accept scalars or arrays and return matching
shapes.  Everything is evaluated through log1p/expm1-style stable forms so
that large finite p, deep tails and points near x0 keep full precision.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kernels import UniformStream

__all__ = [
    "IFParams",
    "Subfamily",
    "IFDistribution",
    "new_distribution",
    "classify",
    "p_exponential",
    "g_big",
]

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class IFParams:
    """The five parameters. p may be math.inf; all others are finite reals.

    p >= 0 selects the family member (0 = power law, inf = cut-off law),
    b != 0 shapes skewness (negative b gives the inverse family),
    c > 0 is scale, q > 0 tail-weight, x0 >= 0 the lower support endpoint.
    """

    p: float
    b: float
    c: float
    q: float
    x0: float

    def violations(self) -> list[str]:
        out = []
        if math.isnan(self.p) or self.p < 0:
            out.append("p must be a nonnegative real or inf")
        if math.isnan(self.b) or math.isinf(self.b) or self.b == 0:
            out.append("b must be nonzero and finite")
        if math.isnan(self.c) or math.isinf(self.c) or not self.c > 0:
            out.append("c must be positive and finite")
        if math.isnan(self.q) or math.isinf(self.q) or not self.q > 0:
            out.append("q must be positive and finite")
        if math.isnan(self.x0) or math.isinf(self.x0) or self.x0 < 0:
            out.append("x0 must be nonnegative and finite")
        return out


class Subfamily(enum.Enum):
    IF1 = "IF1"          # p = 0
    IF2 = "IF2"          # p = inf
    IF3 = "IF3"          # 0 < p < inf and b = 1
    GENERAL = "General"


def classify(params: IFParams) -> Subfamily:
    """Subfamily tag; thresholds (p = 0, p = inf, b = 1) compare exactly."""
    if params.p == 0.0:
        return Subfamily.IF1
    if math.isinf(params.p):
        return Subfamily.IF2
    if params.b == 1.0:
        return Subfamily.IF3
    return Subfamily.GENERAL


def p_exponential(p: float, x):
    """Deformed exponential e_p(x) = (1 - x/(p+1))^p on [0, p+1].

    e_0 is identically 1 on [0, 1]; e_inf(x) = exp(-x) on [0, inf).
    """
    if math.isnan(p) or p < 0:
        raise DomainError("p must be a nonnegative real or inf")
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)
    if np.isnan(xs).any() or (xs < 0).any():
        raise DomainError("p_exponential requires x >= 0")
    if math.isinf(p):
        out = np.exp(-xs)
    else:
        if (xs > p + 1.0).any():
            raise DomainError(f"p_exponential with p={p} requires x <= p+1")
        if p == 0.0:
            out = np.ones_like(xs)
        else:
            with np.errstate(divide="ignore"):
                out = np.exp(p * np.log1p(-xs / (p + 1.0)))
    return float(out[0]) if scalar else out


def g_big(params: IFParams, x):
    """G(x) = (p+1)^(-1/q) + ((x-x0)/c)^b, with the (p+1) term absent at
    p = inf.  For b < 0 the value at x = x0 is +inf."""
    d = IFDistribution(params)
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)
    if (xs < params.x0).any():
        raise DomainError("g_big requires x >= x0")
    y = (xs - params.x0) / params.c
    with np.errstate(divide="ignore"):
        powered = np.power(y, params.b)
    k = 0.0 if math.isinf(params.p) else math.exp(d._ln_k)
    out = k + powered
    return float(out[0]) if scalar else out


def new_distribution(params: IFParams) -> "IFDistribution":
    """Validate params and return an immutable distribution value."""
    return IFDistribution(params)


class IFDistribution:
    """Immutable distribution value over [x0, inf).

    Quantile endpoint convention (for either sign of b): quantile(0) = x0
    and quantile(1) = +inf, the mathematical limits of the inverse cdf.
    """

    def __init__(self, params: IFParams):
        problems = params.violations()
        if problems:
            raise DomainError("; ".join(problems))
        self.params = params
        self.p = float(params.p)
        self.b = float(params.b)
        self.c = float(params.c)
        self.q = float(params.q)
        self.x0 = float(params.x0)
        self._inf_p = math.isinf(self.p)
        self._ln_coef = math.log(abs(self.b) * self.q / self.c)
        # ln k with k = (p+1)^(-1/q); -inf at p = inf so logaddexp degrades
        # gracefully to ln G = b ln y
        self._ln_k = -math.inf if self._inf_p else -math.log1p(self.p) / self.q
        self._boundary = self._boundary_density()

    def __repr__(self):
        pa = self.params
        return (f"IFDistribution(p={pa.p!r}, b={pa.b!r}, c={pa.c!r}, "
                f"q={pa.q!r}, x0={pa.x0!r})")

    @property
    def subfamily(self) -> Subfamily:
        return classify(self.params)

    # -- boundary behavior ---------------------------------------------------

    def _boundary_density(self) -> float:
        """Limit of the density at x -> x0+ (0, a finite constant, or +inf).

        Local exponent analysis: for b > 0 the density grows like
        y^(b(p+1)-1) near the boundary (exponent +inf at p = inf), for b < 0
        like y^(-bq-1) independent of p.
        """
        b, q, c, p = self.b, self.q, self.c, self.p
        if b > 0:
            if self._inf_p:
                return 0.0
            e = b * (p + 1.0) - 1.0
            if e > 0:
                return 0.0
            if e < 0:
                return math.inf
            ln_val = (math.log(b) + (p + 1.0) * math.log(q)
                      + ((p + q + 1.0) / q) * math.log1p(p) - math.log(c))
            return math.exp(ln_val)
        e = -b * q - 1.0
        if e > 0:
            return 0.0
        if e < 0:
            return math.inf
        return 1.0 / c

    # -- log-space building blocks --------------------------------------------

    def _ln_y(self, y: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return np.log(y)

    def _ln_g(self, ln_y: np.ndarray) -> np.ndarray:
        return np.logaddexp(self._ln_k, self.b * ln_y)

    def _ln_w(self, ln_g: np.ndarray) -> np.ndarray:
        # w = G^(-q) / (p+1) in (0, 1]
        return -self.q * ln_g - math.log1p(self.p)

    @staticmethod
    def _ln_one_minus_exp(la: np.ndarray) -> np.ndarray:
        """log(1 - exp(la)) for la <= 0, stable on both ends."""
        la = np.asarray(la, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            big = np.log(-np.expm1(la))
            small = np.log1p(-np.exp(la))
        return np.where(la > -_LN2, big, small)

    def _interior_log_pdf(self, y: np.ndarray) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        out = np.full(y.shape, -math.inf)
        fin = np.isfinite(y)  # y = inf (beyond any double x) has density 0
        if not fin.any():
            return out
        ln_y = self._ln_y(y[fin])
        if self._inf_p:
            with np.errstate(over="ignore"):  # v -> inf means log-density -inf
                v = np.exp(-self.b * self.q * ln_y)
            out[fin] = self._ln_coef + (-self.b * self.q - 1.0) * ln_y - v
            return out
        ln_g = self._ln_g(ln_y)
        vals = self._ln_coef + (self.b - 1.0) * ln_y - (self.q + 1.0) * ln_g
        if self.p > 0:
            vals = vals + self.p * self._ln_one_minus_exp(self._ln_w(ln_g))
        out[fin] = vals
        return out

    # -- distribution surface --------------------------------------------------

    def pdf(self, x):
        """Density, total on the reals: 0 below x0, the boundary limit at
        x0 (possibly +inf), strictly positive on (x0, inf)."""
        xs = np.asarray(x, dtype=float)
        scalar = xs.ndim == 0
        xs = np.atleast_1d(xs).astype(float)
        out = np.zeros(xs.shape)
        y = (xs - self.x0) / self.c
        interior = (y > 0) & np.isfinite(xs)
        if interior.any():
            with np.errstate(over="ignore"):
                out[interior] = np.exp(self._interior_log_pdf(y[interior]))
        out[xs == self.x0] = self._boundary
        out[np.isnan(xs)] = np.nan
        return float(out[0]) if scalar else out

    def pdf_offset(self, delta):
        """pdf(x0 + delta) computed straight from the offset.

        Avoids the cancellation in (x - x0) when delta is many orders of
        magnitude below x0; the workhorse for quadrature up against the
        support boundary.
        """
        ds = np.asarray(delta, dtype=float)
        scalar = ds.ndim == 0
        ds = np.atleast_1d(ds).astype(float)
        out = np.zeros(ds.shape)
        y = ds / self.c
        interior = (y > 0) & np.isfinite(ds)
        if interior.any():
            with np.errstate(over="ignore"):
                out[interior] = np.exp(self._interior_log_pdf(y[interior]))
        out[ds == 0.0] = self._boundary
        out[np.isnan(ds)] = np.nan
        return float(out[0]) if scalar else out

    def log_pdf(self, x):
        """ln pdf on the open support x > x0; stays finite where pdf underflows."""
        xs = np.asarray(x, dtype=float)
        scalar = xs.ndim == 0
        xs = np.atleast_1d(xs).astype(float)
        y = (xs - self.x0) / self.c
        if not (y > 0).all():
            raise DomainError("log_pdf requires x > x0")
        out = self._interior_log_pdf(y)
        return float(out[0]) if scalar else out

    def log_pdf_offset(self, delta):
        """log_pdf(x0 + delta) straight from the offset; requires delta > 0."""
        ds = np.asarray(delta, dtype=float)
        scalar = ds.ndim == 0
        ds = np.atleast_1d(ds).astype(float)
        if not (ds > 0).all():
            raise DomainError("log_pdf_offset requires delta > 0")
        with np.errstate(over="ignore"):  # delta/c may exceed the float range
            out = self._interior_log_pdf(ds / self.c)
        return float(out[0]) if scalar else out

    def _ln_sf_plus(self, y: np.ndarray) -> np.ndarray:
        """ln of (1 - w)^(p+1) (the b > 0 survival), i.e. (p+1) ln(1-w)."""
        ln_y = self._ln_y(y)
        if self._inf_p:
            with np.errstate(over="ignore"):
                return -np.exp(-self.b * self.q * ln_y)
        ln_g = self._ln_g(ln_y)
        return (self.p + 1.0) * self._ln_one_minus_exp(self._ln_w(ln_g))

    def cdf(self, x):
        """Distribution function; 0 at and below x0, 1 in the limit."""
        xs = np.asarray(x, dtype=float)
        return self.cdf_offset(xs - self.x0)

    def cdf_offset(self, delta):
        """cdf(x0 + delta) straight from the offset (no x0 cancellation)."""
        ds = np.asarray(delta, dtype=float)
        scalar = ds.ndim == 0
        ds = np.atleast_1d(ds).astype(float)
        out = np.zeros(ds.shape)
        y = ds / self.c
        pos = y > 0
        if pos.any():
            ln_plus = self._ln_sf_plus(y[pos])
            if self.b > 0:
                out[pos] = np.exp(ln_plus)
            else:
                out[pos] = -np.expm1(ln_plus)
        out[np.isnan(ds)] = np.nan
        return float(out[0]) if scalar else out

    def survival(self, x):
        """1 - cdf computed from the complementary branch directly, so deep
        tail values keep relative accuracy (no 1.0 - ... subtraction)."""
        xs = np.asarray(x, dtype=float)
        return self.sf_offset(xs - self.x0)

    def sf_offset(self, delta):
        """survival(x0 + delta) straight from the offset."""
        ds = np.asarray(delta, dtype=float)
        scalar = ds.ndim == 0
        ds = np.atleast_1d(ds).astype(float)
        out = np.ones(ds.shape)
        y = ds / self.c
        pos = y > 0
        if pos.any():
            ln_plus = self._ln_sf_plus(y[pos])
            if self.b > 0:
                out[pos] = -np.expm1(ln_plus)
            else:
                out[pos] = np.exp(ln_plus)
        out[np.isnan(ds)] = np.nan
        return float(out[0]) if scalar else out

    sf = survival

    def hazard(self, x):
        """pdf / survival, from the explicit branch for each sign of b."""
        xs = np.asarray(x, dtype=float)
        scalar = xs.ndim == 0
        xs = np.atleast_1d(xs).astype(float)
        y = (xs - self.x0) / self.c
        if not (y > 0).all():
            raise DomainError("hazard requires x > x0")
        ln_y = self._ln_y(y)
        with np.errstate(over="ignore"):
            if self.b > 0:
                ln_num = self._interior_log_pdf(y)
                den = -np.expm1(self._ln_sf_plus(y))
                out = np.exp(ln_num) / den
            elif self._inf_p:
                out = np.exp(self._ln_coef + (-self.b * self.q - 1.0) * ln_y)
            else:
                ln_g = self._ln_g(ln_y)
                ln1mw = self._ln_one_minus_exp(self._ln_w(ln_g))
                out = np.exp(self._ln_coef + (self.b - 1.0) * ln_y
                             - (self.q + 1.0) * ln_g - ln1mw)
        return float(out[0]) if scalar else out

    def _quantile_plus_offset(self, ln_y: np.ndarray,
                              ln_1my: np.ndarray) -> np.ndarray:
        """Rising-branch quantile minus x0, evaluated from ln(y) and ln(1-y).

        Taking both logs keeps full precision for probabilities next to
        either endpoint; the b < 0 case reuses this with the two swapped.
        """
        b, q, c, p = self.b, self.q, self.c, self.p
        if self._inf_p:
            return c * (-ln_y) ** (-1.0 / (b * q))
        if p == 0.0:
            inner = np.expm1(-ln_1my / q)
            return c * inner ** (1.0 / b)
        u = -np.expm1(ln_y / (p + 1.0))          # 1 - y^(1/(p+1))
        inner = np.expm1(-np.log(u) / q)         # u^(-1/q) - 1
        scale = math.exp(-math.log1p(p) / (b * q))
        return c * scale * inner ** (1.0 / b)

    def quantile_offset(self, y):
        """quantile(y) - x0 without forming x, so offsets far below the
        floating-point resolution of x0 survive."""
        ys = np.asarray(y, dtype=float)
        scalar = ys.ndim == 0
        ys = np.atleast_1d(ys).astype(float)
        if np.isnan(ys).any() or (ys < 0).any() or (ys > 1).any():
            raise DomainError("quantile requires y in [0, 1]")
        out = np.empty(ys.shape)
        out[ys == 0.0] = 0.0
        out[ys == 1.0] = math.inf
        mid = (ys > 0.0) & (ys < 1.0)
        if mid.any():
            ym = ys[mid]
            ln_y = np.log(ym)
            ln_1my = np.log1p(-ym)
            with np.errstate(over="ignore"):
                if self.b > 0:
                    out[mid] = self._quantile_plus_offset(ln_y, ln_1my)
                else:
                    out[mid] = self._quantile_plus_offset(ln_1my, ln_y)
        return float(out[0]) if scalar else out

    def quantile(self, y):
        """Inverse cdf on [0, 1]; strictly increasing on (0, 1), with
        quantile(0) = x0 and quantile(1) = +inf."""
        out = self.x0 + np.asarray(self.quantile_offset(y))
        return float(out[()]) if out.ndim == 0 else out

    def median(self) -> float:
        """Closed-form median; identical for either sign of b."""
        b, q, c, p, x0 = self.b, self.q, self.c, self.p, self.x0
        if self._inf_p:
            return x0 + c * _LN2 ** (-1.0 / (b * q))
        if p == 0.0:
            return x0 + c * math.expm1(_LN2 / q) ** (1.0 / b)
        u = -math.expm1(-_LN2 / (p + 1.0))       # 1 - 2^(-1/(p+1))
        inner = math.expm1(-math.log(u) / q)
        scale = math.exp(-math.log1p(p) / (b * q))
        return x0 + c * scale * inner ** (1.0 / b)

    def sample(self, n: int, seed: int) -> np.ndarray:
        """n inverse-transform draws, deterministic per seed, in stream order.

        Uniforms are strictly inside (0, 1), so every draw is finite and
        greater than x0.  Draws whose offset from x0 falls below the float
        spacing at x0 (a real boundary-layer event for b < 0 with small
        |b| q) are represented by the smallest double above x0.
        """
        if n < 0:
            raise DomainError(f"n must be nonnegative, got {n!r}")
        us = UniformStream(seed).draws(int(n))
        xs = np.asarray(self.quantile(us), dtype=float)
        return np.maximum(xs, np.nextafter(self.x0, math.inf))
