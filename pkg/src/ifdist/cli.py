"""Command-line surface: evaluation, summaries, sampling, figure-data
generation, catalog queries and self-verification.

Exit codes: 0 success, 1 validation problem, 2 numeric failure, 3 I/O error.
All output is deterministic for fixed flags (including seeds); numbers are
printed with 17 significant digits so files round-trip to the exact doubles.

The distribution is selected either by the five raw flags

    --p (accepts the literal "inf") --b --c --q --x0

or by --dist NAME plus that entry's own flags (see `ifdist catalog list`);
the two styles are mutually exclusive.  A flat key=value file with keys
p, b, c, q, x0 can be supplied via --params; raw flags override file values.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
import zlib
from itertools import product

import numpy as np

from . import catalog as cat
from . import modes as modes_mod
from . import moments as moments_mod
from .core import IFDistribution, IFParams, classify
from .errors import DomainError, NumericFailure
from .kernels import UniformStream, integrate, maximize_scalar

__all__ = ["main"]

_RAW_KEYS = ("p", "b", "c", "q", "x0")
_ENTRY_KEYS = ("b", "c", "q", "x0", "gamma", "m", "p")

# the density-sweep base point: every parameter fixed unless varied/overridden
_CURVE_BASE = {"p": 1.0, "b": 1.0, "c": 200.0, "q": 2.0, "x0": 0.0}

_CHECK_GRID = {
    "p": [0.0, 0.5, 1.0, 5.0, 1e3, math.inf],
    "b": [-3.0, -1.0, -0.5, 0.5, 1.0, 2.0],
    "q": [0.5, 1.0, 2.0, 5.0],
    "c": [1.0, 200.0],
    "x0": [0.0, 1.0],
}
_CHECK_LEVELS = np.array([1e-6, 0.001, 0.01, 0.05, 0.1, 0.25, 0.5,
                          0.75, 0.9, 0.95, 0.99, 0.999, 1 - 1e-6])


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise _UsageError(message)


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _parse_p(text: str) -> float:
    if text.strip().lower() == "inf":
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise _UsageError(f"cannot parse p value {text!r}")


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise _UsageError(f"cannot parse number list {text!r}")


def _read_params_file(path: str) -> dict[str, float]:
    out: dict[str, float] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" in line:
                key, _, value = line.partition("=")
            else:
                parts = line.split(None, 1)
                if len(parts) != 2:
                    raise _UsageError(f"{path}:{lineno}: expected 'key = value'")
                key, value = parts
            key = key.strip()
            value = value.strip()
            if key not in _RAW_KEYS:
                raise _UsageError(f"{path}:{lineno}: unknown parameter {key!r}")
            out[key] = _parse_p(value) if key == "p" else float(value)
    return out


def _build_params(ns) -> IFParams:
    if ns.dist is not None:
        if ns.params is not None:
            raise _UsageError("--dist and --params are mutually exclusive")
        if ns.p is not None:
            raise _UsageError("--dist and --p are mutually exclusive; "
                              "named entries pin p themselves")
        e = cat.entry(ns.dist)
        expected = [name for name, _ in e.free_parameters]
        provided = {}
        for key in _ENTRY_KEYS:
            val = getattr(ns, key, None)
            if val is not None and key in expected:
                provided[key] = val
        for key in ("b", "c", "q", "x0", "gamma", "m"):
            val = getattr(ns, key, None)
            if val is not None and key not in expected:
                raise _UsageError(f"--{key} is not a parameter of {ns.dist}")
        return cat.named(ns.dist, **provided)

    values: dict[str, float] = {}
    if ns.params is not None:
        values.update(_read_params_file(ns.params))
    if ns.p is not None:
        values["p"] = _parse_p(ns.p)
    for key in ("b", "c", "q", "x0"):
        val = getattr(ns, key)
        if val is not None:
            values[key] = val
    missing = [k for k in _RAW_KEYS if k not in values]
    if missing:
        raise _UsageError("missing parameter flags: "
                          + ", ".join(f"--{k}" for k in missing))
    return IFParams(values["p"], values["b"], values["c"], values["q"],
                    values["x0"])


def _build_parser() -> _Parser:
    parser = _Parser(prog="ifdist", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--p", help='interpolation parameter, "inf" allowed')
    parser.add_argument("--b", type=float, help="shape/skewness, nonzero")
    parser.add_argument("--c", type=float, help="scale, positive")
    parser.add_argument("--q", type=float, help="tail-weight, positive")
    parser.add_argument("--x0", type=float, help="location, nonnegative")
    parser.add_argument("--gamma", type=float,
                        help="gamma parameter of the Pareto III/IV entries")
    parser.add_argument("--m", type=float,
                        help="m parameter of the Stoppa/Generalized Lomax entries")
    parser.add_argument("--dist", help="named catalog entry")
    parser.add_argument("--params", help="key=value parameter file")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p_eval = sub.add_parser("eval", help="evaluate a distribution function")
    p_eval.add_argument("--what", required=True,
                        choices=["pdf", "logpdf", "cdf", "sf", "hazard",
                                 "quantile"])
    p_eval.add_argument("--at", required=True,
                        help="comma-separated evaluation points")

    sub.add_parser("summary", help="subfamily, median, mean, variance, mode")

    p_sample = sub.add_parser("sample", help="write inverse-transform draws")
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--out", required=True, help="output CSV path")

    p_curve = sub.add_parser("curve", help="density sweep data along one parameter")
    p_curve.add_argument("--vary", required=True, choices=list(_RAW_KEYS))
    p_curve.add_argument("--values", required=True,
                         help='comma-separated sweep values ("inf" allowed for p)')
    p_curve.add_argument("--x-range", default="0,1000,201",
                         help="LO,HI,N evaluation grid (default 0,1000,201)")

    p_grid = sub.add_parser("modegrid", help="mode matrix over two parameter axes")
    p_grid.add_argument("--axis1", required=True, help="NAME,LO,HI")
    p_grid.add_argument("--axis2", required=True, help="NAME,LO,HI")
    p_grid.add_argument("--steps", default="21,21", help="N1,N2 (default 21,21)")

    p_cat = sub.add_parser("catalog", help="named special cases")
    p_cat.add_argument("action", choices=["list", "show"])
    p_cat.add_argument("name", nargs="?")

    p_check = sub.add_parser("check", help="run a verification suite")
    p_check.add_argument("--suite", required=True,
                         choices=["normalization", "roundtrip", "moments",
                                  "modes"])
    p_check.add_argument("--tol", type=float, default=None)
    return parser


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _cmd_eval(ns) -> int:
    d = IFDistribution(_build_params(ns))
    pts = _parse_floats(ns.at)
    fn = {"pdf": d.pdf, "logpdf": d.log_pdf, "cdf": d.cdf, "sf": d.survival,
          "hazard": d.hazard, "quantile": d.quantile}[ns.what]
    print("x,value")
    for x in pts:
        print(f"{_fmt(x)},{_fmt(fn(x))}")
    return 0


def _cmd_summary(ns) -> int:
    params = _build_params(ns)
    d = IFDistribution(params)
    print(f"subfamily={classify(params).value}")
    print(f"median={_fmt(d.median())}")
    for label, res in (("mean", moments_mod.mean(params)),
                       ("variance", moments_mod.variance(params))):
        if res.exists:
            print(f"{label}={_fmt(res.value)} provenance={res.provenance}")
        else:
            print(f"{label}=non-existent constraint={res.constraint}")
    mres = modes_mod.mode(params)
    if mres.kind is modes_mod.ModeKind.INTERIOR:
        print(f"mode=interior x={_fmt(mres.x)} density={_fmt(mres.density)}")
    elif mres.kind is modes_mod.ModeKind.BOUNDARY:
        print(f"mode=boundary x={_fmt(mres.x)}")
    else:
        print(f"mode=asymptote-at-boundary x={_fmt(mres.x)}")
    return 0


def _cmd_sample(ns) -> int:
    d = IFDistribution(_build_params(ns))
    if ns.n < 0:
        raise _UsageError("--n must be nonnegative")
    xs = d.sample(ns.n, ns.seed)
    with open(ns.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("value\n")
        for v in xs:
            fh.write(_fmt(v) + "\n")
    return 0


def _curve_base(ns) -> dict[str, float]:
    if ns.dist is not None:
        pa = _build_params(ns)
        return {"p": pa.p, "b": pa.b, "c": pa.c, "q": pa.q, "x0": pa.x0}
    base = dict(_CURVE_BASE)
    if ns.params is not None:
        base.update(_read_params_file(ns.params))
    if ns.p is not None:
        base["p"] = _parse_p(ns.p)
    for key in ("b", "c", "q", "x0"):
        val = getattr(ns, key)
        if val is not None:
            base[key] = val
    return base


def _cmd_curve(ns) -> int:
    base = _curve_base(ns)
    rng = _parse_floats(ns.x_range)
    if len(rng) != 3 or not rng[2].is_integer() or rng[2] < 2 or rng[0] >= rng[1]:
        raise _UsageError("--x-range expects LO,HI,N with LO < HI and N >= 2")
    if ns.vary != "x0" and rng[0] < base["x0"]:
        raise _UsageError(f"--x-range must start at or above x0 = {base['x0']}")
    xs = np.linspace(rng[0], rng[1], int(rng[2]))
    if ns.vary == "p":
        values = [_parse_p(tok) for tok in ns.values.split(",") if tok != ""]
    else:
        values = _parse_floats(ns.values)
    if not values:
        raise _UsageError("--values must name at least one sweep value")
    columns = []
    for v in values:
        kw = dict(base)
        kw[ns.vary] = v
        columns.append(IFDistribution(IFParams(**kw)).pdf(xs))
    header = "x," + ",".join(
        f"{ns.vary}={'inf' if math.isinf(v) else _fmt(v)}" for v in values)
    print(header)
    for i, x in enumerate(xs):
        print(_fmt(x) + "," + ",".join(_fmt(col[i]) for col in columns))
    return 0


def _cmd_modegrid(ns) -> int:
    params = _build_params(ns)

    def parse_axis(text):
        parts = text.split(",")
        if len(parts) != 3:
            raise _UsageError("--axis expects NAME,LO,HI")
        return parts[0].strip(), float(parts[1]), float(parts[2])

    axis1 = parse_axis(ns.axis1)
    axis2 = parse_axis(ns.axis2)
    steps = _parse_floats(ns.steps)
    if len(steps) != 2 or not all(s.is_integer() and s >= 1 for s in steps):
        raise _UsageError("--steps expects N1,N2 with integers >= 1")
    grid = modes_mod.mode_grid(params, axis1, axis2,
                               (int(steps[0]), int(steps[1])))
    v1 = np.linspace(axis1[1], axis1[2], int(steps[0]))
    v2 = np.linspace(axis2[1], axis2[2], int(steps[1]))
    print(f"{axis1[0]}\\{axis2[0]}," + ",".join(_fmt(v) for v in v2))
    for i, v in enumerate(v1):
        print(_fmt(v) + "," + ",".join(_fmt(cell) for cell in grid[i]))
    return 0


def _cmd_catalog(ns) -> int:
    if ns.action == "list":
        cols = ["name", "arity", "parameters", "constraints", "if_map",
                "tree_parent", "mean", "mean_constraint"]
        print(",".join(cols))
        for rec in cat.records():
            print(",".join('"' + str(rec[c]) + '"' if "," in str(rec[c])
                           else str(rec[c]) for c in cols))
        return 0
    if ns.name is None:
        raise _UsageError("catalog show requires a name")
    e = cat.entry(ns.name)
    print(f"name={e.name}")
    print("parameters=" + ",".join(p for p, _ in e.free_parameters))
    print("constraints=" + "; ".join(c for _, c in e.free_parameters if c))
    print(f"if_map={e.map_text}")
    print(f"tree_parent={e.tree_parent or ''}")
    if e.mean_text:
        print(f"mean={e.mean_text}")
        print(f"mean_constraint={e.mean_constraint or ''}")
    return 0


def _check_params_iter():
    for p, b, q, c, x0 in product(_CHECK_GRID["p"], _CHECK_GRID["b"],
                                  _CHECK_GRID["q"], _CHECK_GRID["c"],
                                  _CHECK_GRID["x0"]):
        yield IFParams(p, b, c, q, x0)


def _check_normalization(tol: float) -> tuple[float, str]:
    worst, where = 0.0, ""
    for pa in _check_params_iter():
        d = IFDistribution(pa)
        r = integrate(d.pdf_offset, 0.0, math.inf, min(1e-8, tol / 10.0))
        dev = abs(r.value - 1.0)
        if not r.converged:
            dev = max(dev, r.abs_error_estimate)
        if dev > worst:
            worst, where = dev, repr(pa)
    return worst, where


def _check_roundtrip(tol: float) -> tuple[float, str]:
    worst, where = 0.0, ""
    for pa in _check_params_iter():
        d = IFDistribution(pa)
        dev = float(np.max(np.abs(
            d.cdf_offset(d.quantile_offset(_CHECK_LEVELS)) - _CHECK_LEVELS)))
        if dev > worst:
            worst, where = dev, repr(pa)
    return worst, where


def _table1_check_args(name: str) -> list[dict[str, float]]:
    # deterministic in-constraint draws per tabled row (crc32, not hash():
    # string hashing is randomized per process)
    e = cat.CATALOG[name]
    u = UniformStream(zlib.crc32(name.encode()))
    out = []
    for _ in range(3):
        args = {}
        for pname, constraint in e.free_parameters:
            if pname == "gamma":
                args[pname] = 0.15 + 0.6 * next(u)
            elif pname == "b":
                args[pname] = (-4.0 + 2.0 * next(u) if "b < 0" in constraint
                               else 1.5 + 2.5 * next(u))
            elif pname == "m":
                args[pname] = 1.5 + 2.5 * next(u)
            elif pname == "q":
                args[pname] = 1.7 + 2.5 * next(u)
            elif pname == "c":
                args[pname] = 0.5 + 3.0 * next(u)
            elif pname == "x0":
                args[pname] = 1.5 * next(u)
            elif pname == "p":
                args[pname] = 0.5 + 3.0 * next(u)
        out.append(args)
    return out


def _check_moments(tol: float) -> tuple[float, str]:
    worst, where = 0.0, ""
    rows = [n for n in cat.catalog_names() if cat.CATALOG[n].in_mean_table]
    for name in rows:
        row_worst = 0.0
        for args in _table1_check_args(name):
            closed = cat.table1_mean(name, **args)
            pa = cat.named(name, **args)
            if not closed.exists:
                continue
            num = moments_mod._numeric_moment(pa, 1)
            dev = abs(closed.value - num.value) / (1.0 + abs(closed.value))
            row_worst = max(row_worst, dev)
            if dev > worst:
                worst, where = dev, f"{name} {args!r}"
        print(f"row={name} worst={row_worst:.3e}")
    return worst, where


def _check_modes(tol: float) -> tuple[float, str]:
    worst, where = 0.0, ""
    for pa in _check_params_iter():
        res = modes_mod.mode(pa)
        if res.kind is not modes_mod.ModeKind.INTERIOR:
            continue
        d = IFDistribution(pa)
        lo = pa.x0 + 1e-9 * pa.c
        hi = pa.x0 + 50.0 * pa.c
        argmax, _ = maximize_scalar(d.log_pdf, lo, hi, tol=1e-11 * pa.c)
        dev = abs(res.x - argmax) / pa.c
        if dev > worst:
            worst, where = dev, repr(pa)
    return worst, where


_SUITES = {
    "normalization": (_check_normalization, 1e-6),
    "roundtrip": (_check_roundtrip, 1e-9),
    "moments": (_check_moments, 1e-6),
    "modes": (_check_modes, 1e-6),
}


def _cmd_check(ns) -> int:
    fn, default_tol = _SUITES[ns.suite]
    tol = ns.tol if ns.tol is not None else default_tol
    if tol <= 0:
        raise _UsageError("--tol must be positive")
    t0 = time.time()
    worst, where = fn(tol)
    elapsed = time.time() - t0
    status = "pass" if worst <= tol else "fail"
    print(f"suite={ns.suite} worst={worst:.3e} tol={tol:g} "
          f"seconds={elapsed:.1f} result={status}")
    if status == "fail":
        print(f"offending={where}", file=sys.stderr)
        return 2
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "summary": _cmd_summary,
    "sample": _cmd_sample,
    "curve": _cmd_curve,
    "modegrid": _cmd_modegrid,
    "catalog": _cmd_catalog,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        if ns.command is None:
            parser.print_usage(sys.stderr)
            return 1
        return _COMMANDS[ns.command](ns)
    except _UsageError as exc:
        print(f"ifdist: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"ifdist: {exc}", file=sys.stderr)
        return 1
    except NumericFailure as exc:
        print(f"ifdist: numeric failure: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ifdist: i/o error: {exc}", file=sys.stderr)
        return 3
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
