"""Moment existence, closed-form moments, and mode geography.

Which moments exist is decided by the tails: the polynomial lower tail is
governed by bq (for b > 0), while for b < 0 the upper tail steepens with
the interpolation parameter, so the existence frontier moves with p.
"""

import math

import numpy as np

from ifdist import (
    IFDistribution,
    IFParams,
    boundary_behavior,
    integrate,
    mean,
    mode,
    mode_grid,
    moment_exists,
    raw_moment,
    variance,
)

print("Existence frontier for b = -1 (inverse family), r-th moment:")
print("  p      r=1    r=2    r=3")
for p in (0.0, 1.0, 3.0, math.inf):
    row = "  " + f"{p!r:<7}"
    for r in (1, 2, 3):
        ok, _ = moment_exists(IFParams(p, -1.0, 1.0, 1.0, 0.0), r)
        row += f"{'yes' if ok else 'no ':<7}"
    print(row)
print("  (the frontier is r < -b(p+1); at p=inf every moment exists)")

print("\nWatching a divergent moment grow in the truncated integrals")
print("versus a convergent one settling (Lomax, r = 1):")
for q, label in ((1.0, "q=1.0  (mean does not exist)"),
                 (1.5, "q=1.5  (mean = c/(q-1) = 2)")):
    d = IFDistribution(IFParams(0.0, 1.0, 1.0, q, 0.0))
    f = lambda ds: np.asarray(ds) * d.pdf_offset(ds)
    ts = [integrate(f, 0.0, 10.0 ** k, 1e-10).value for k in range(1, 7)]
    print(f"  {label}: " + "  ".join(f"{t:8.3f}" for t in ts))

print("\nClosed-form moments with provenance:")
for pa in (IFParams(math.inf, -1.0, 2.0, 2.0, 0.0),   # rayleigh
           IFParams(0.0, 2.0, 1.0, 3.0, 0.0),
           IFParams(2.0, 2.0, 1.0, 3.0, 0.0)):        # no closed form: numeric
    m = mean(pa)
    v = variance(pa)
    print(f"  {pa}")
    print(f"    mean {m.value:.8f} ({m.provenance}), "
          f"variance {v.value:.8f} ({v.provenance})")

print("\nMode geography: boundary, interior, or a vertical asymptote at x0.")
for pa in (IFParams(0.0, 2.0, 1.0, 1.0, 0.0),
           IFParams(0.0, 0.5, 1.0, 2.0, 0.0),
           IFParams(0.0, 1.0, 1.0, 2.0, 0.0),
           IFParams(math.inf, -1.0, 1.0, 2.0, 0.0)):
    res = mode(pa)
    bb = boundary_behavior(pa)
    print(f"  b={pa.b:>4}, p={pa.p!r:<5} -> {res.kind.value:<22} "
          f"x={res.x:.6f}  density(x0)={bb.value}")

print("\nMode matrix for the power-law members over (b, q); the codes -1")
print("(mode at x0) and -2 (asymptote at x0) mark the non-interior region:")
grid = mode_grid(IFParams(0.0, 1.0, 1.0, 1.0, 0.0),
                 ("b", -2.5, 3.0), ("q", 0.5, 2.0), (6, 4))
bs = np.linspace(-2.5, 3.0, 6)
qs = np.linspace(0.5, 2.0, 4)
print("  b\\q " + "".join(f"{q:>10.2f}" for q in qs))
for i, b in enumerate(bs):
    print(f"  {b:>4.1f}" + "".join(f"{grid[i, j]:>10.4f}" for j in range(len(qs))))
