"""Named special cases of the family, their mean-table rows, and the tree
of specializations.

Every entry maps its own free parameters onto the five family parameters
(p, b, c, q, x0).  The skew-inverting families (negative b: Weibull,
Rayleigh, Exponential, Dagum, Lindsay-Burr III) are the mirror twins of the
positive-b entries and therefore carry no tree edge; the drawn tree covers
b > 0 only.

Naming note: Lindsay-Burr III is often called just Burr III (or Dagum with
location) elsewhere, and Tadikamalla-Burr XII appears as Burr XII with scale;
the names here follow the family-tree convention used throughout this
package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .core import IFParams
from .errors import DomainError
from .kernels import beta, ln_gamma
from .moments import MomentResult

__all__ = [
    "CatalogEntry",
    "CATALOG",
    "TREE_EDGES",
    "catalog_names",
    "entry",
    "named",
    "resolve",
    "table1_mean",
    "records",
]

INF = math.inf


def _gamma(x: float) -> float:
    return math.exp(ln_gamma(x))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    # ordered (parameter, constraint description); constraint '' means free
    free_parameters: tuple[tuple[str, str], ...]
    map_text: str              # the (p, b, c, q, x0) image, human readable
    to_if: Callable[..., IFParams]
    check: Callable[..., list[str]]        # constraint violations for args
    matches: Callable[[IFParams], bool]    # exact membership of IF points
    tree_parent: str | None = None
    mean_text: str | None = None           # printed mean formula, if tabled
    mean_constraint: str | None = None
    mean_fn: Callable[..., MomentResult] | None = field(default=None, repr=False)
    in_mean_table: bool = False

    @property
    def arity(self) -> int:
        return len(self.free_parameters)


def _positive(name):
    return lambda v: [] if v > 0 else [f"{name} must be positive"]


def _nonneg(name):
    return lambda v: [] if v >= 0 else [f"{name} must be nonnegative"]


def _mk_check(**per_param):
    def check(**args):
        out = []
        for pname, fn in per_param.items():
            out.extend(fn(args[pname]))
        return out
    return check


def _mean_cf(value: float) -> MomentResult:
    return MomentResult.closed_form(value)


_NOT_DEFINED = MomentResult.non_existent("requires r < bq")


def _entries() -> list[CatalogEntry]:
    es: list[CatalogEntry] = []

    # ---- four-parameter subfamilies -------------------------------------
    es.append(CatalogEntry(
        name="if1",
        free_parameters=(("b", "b != 0"), ("c", "c > 0"), ("q", "q > 0"),
                         ("x0", "x0 >= 0")),
        map_text="(0, b, c, q, x0)",
        to_if=lambda b, c, q, x0: IFParams(0.0, b, c, q, x0),
        check=_mk_check(b=lambda v: [] if v != 0 else ["b must be nonzero"],
                        c=_positive("c"), q=_positive("q"), x0=_nonneg("x0")),
        matches=lambda pa: pa.p == 0.0,
        tree_parent="if",
    ))
    es.append(CatalogEntry(
        name="if2",
        free_parameters=(("b", "b != 0"), ("c", "c > 0"), ("q", "q > 0"),
                         ("x0", "x0 >= 0")),
        map_text="(inf, b, c, q, x0)",
        to_if=lambda b, c, q, x0: IFParams(INF, b, c, q, x0),
        check=_mk_check(b=lambda v: [] if v != 0 else ["b must be nonzero"],
                        c=_positive("c"), q=_positive("q"), x0=_nonneg("x0")),
        matches=lambda pa: math.isinf(pa.p),
        tree_parent="if",
    ))
    es.append(CatalogEntry(
        name="if3",
        free_parameters=(("p", "0 < p < inf"), ("c", "c > 0"), ("q", "q > 0"),
                         ("x0", "x0 >= 0")),
        map_text="(p, 1, c, q, x0)",
        to_if=lambda p, c, q, x0: IFParams(p, 1.0, c, q, x0),
        check=_mk_check(p=lambda v: [] if 0 < v < INF else ["p must be in (0, inf)"],
                        c=_positive("c"), q=_positive("q"), x0=_nonneg("x0")),
        matches=lambda pa: 0.0 < pa.p < INF and pa.b == 1.0,
        tree_parent="if",
    ))

    # ---- power-law members (p = 0) ---------------------------------------
    es.append(CatalogEntry(
        name="pareto_iv",
        free_parameters=(("gamma", "gamma > 0"), ("c", "c > 0"), ("q", "q > 0"),
                         ("x0", "x0 >= 0")),
        map_text="(0, 1/gamma, c, q, x0)",
        to_if=lambda gamma, c, q, x0: IFParams(0.0, 1.0 / gamma, c, q, x0),
        check=_mk_check(gamma=_positive("gamma"), c=_positive("c"),
                        q=_positive("q"), x0=_nonneg("x0")),
        matches=lambda pa: pa.p == 0.0 and pa.b > 0,
        tree_parent="if1",
        mean_text="x0 + c q B(q - gamma, 1 + gamma)",
        mean_constraint="gamma < q",
        mean_fn=lambda gamma, c, q, x0: (
            _mean_cf(x0 + c * q * beta(q - gamma, 1.0 + gamma))
            if gamma < q else _NOT_DEFINED),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="lindsay_burr_iii",
        free_parameters=(("b", "b < 0"), ("c", "c > 0"), ("q", "q > 0"),
                         ("x0", "x0 >= 0")),
        map_text="(0, b, c, q, x0)",
        to_if=lambda b, c, q, x0: IFParams(0.0, b, c, q, x0),
        check=_mk_check(b=lambda v: [] if v < 0 else ["b must be negative"],
                        c=_positive("c"), q=_positive("q"), x0=_nonneg("x0")),
        matches=lambda pa: pa.p == 0.0 and pa.b < 0,
        mean_text="x0 + c q B(q - 1/b, 1 + 1/b)",
        mean_constraint="b < -1",
        mean_fn=lambda b, c, q, x0: (
            _mean_cf(x0 + c * q * beta(q - 1.0 / b, 1.0 + 1.0 / b))
            if b < -1 else MomentResult.non_existent("requires r < -b(p+1)")),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="dagum",
        free_parameters=(("b", "b < 0"), ("c", "c > 0"), ("q", "q > 0")),
        map_text="(0, b, c, q, 0)",
        to_if=lambda b, c, q: IFParams(0.0, b, c, q, 0.0),
        check=_mk_check(b=lambda v: [] if v < 0 else ["b must be negative"],
                        c=_positive("c"), q=_positive("q")),
        matches=lambda pa: pa.p == 0.0 and pa.b < 0 and pa.x0 == 0.0,
        mean_text="c q B(q - 1/b, 1 + 1/b)",
        mean_constraint="b < -1",
        mean_fn=lambda b, c, q: (
            _mean_cf(c * q * beta(q - 1.0 / b, 1.0 + 1.0 / b))
            if b < -1 else MomentResult.non_existent("requires r < -b(p+1)")),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="pareto_ii",
        free_parameters=(("c", "c > 0"), ("q", "q > 0"), ("x0", "x0 >= 0")),
        map_text="(0, 1, c, q, x0)",
        to_if=lambda c, q, x0: IFParams(0.0, 1.0, c, q, x0),
        check=_mk_check(c=_positive("c"), q=_positive("q"), x0=_nonneg("x0")),
        matches=lambda pa: pa.p == 0.0 and pa.b == 1.0,
        tree_parent="if1",
        mean_text="x0 + c / (q - 1)",
        mean_constraint="q > 1",
        mean_fn=lambda c, q, x0: (_mean_cf(x0 + c / (q - 1.0))
                                  if q > 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="pareto_iii",
        free_parameters=(("gamma", "gamma > 0"), ("c", "c > 0"), ("x0", "x0 >= 0")),
        map_text="(0, 1/gamma, c, 1, x0)",
        to_if=lambda gamma, c, x0: IFParams(0.0, 1.0 / gamma, c, 1.0, x0),
        check=_mk_check(gamma=_positive("gamma"), c=_positive("c"),
                        x0=_nonneg("x0")),
        matches=lambda pa: pa.p == 0.0 and pa.b > 0 and pa.q == 1.0,
        tree_parent="if1",
        mean_text="x0 + c Gamma(1 - gamma) Gamma(1 + gamma)",
        mean_constraint="gamma < 1",
        mean_fn=lambda gamma, c, x0: (
            _mean_cf(x0 + c * _gamma(1.0 - gamma) * _gamma(1.0 + gamma))
            if gamma < 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="tadikamalla_burr_xii",
        free_parameters=(("b", "b > 0"), ("c", "c > 0"), ("q", "q > 0")),
        map_text="(0, b, c, q, 0)",
        to_if=lambda b, c, q: IFParams(0.0, b, c, q, 0.0),
        check=_mk_check(b=_positive("b"), c=_positive("c"), q=_positive("q")),
        matches=lambda pa: pa.p == 0.0 and pa.b > 0 and pa.x0 == 0.0,
        tree_parent="if1",
        mean_text="c q B(q - 1/b, 1 + 1/b)",
        mean_constraint="b q > 1",
        mean_fn=lambda b, c, q: (
            _mean_cf(c * q * beta(q - 1.0 / b, 1.0 + 1.0 / b))
            if b * q > 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="pareto_i",
        free_parameters=(("x0", "x0 > 0"), ("q", "q > 0")),
        map_text="(0, 1, x0, q, x0)",
        to_if=lambda x0, q: IFParams(0.0, 1.0, x0, q, x0),
        check=_mk_check(x0=_positive("x0"), q=_positive("q")),
        matches=lambda pa: (pa.p == 0.0 and pa.b == 1.0 and pa.x0 > 0
                            and pa.c == pa.x0),
        tree_parent="pareto_ii",
        mean_text="q x0 / (q - 1)",
        mean_constraint="q > 1",
        mean_fn=lambda x0, q: (_mean_cf(q * x0 / (q - 1.0))
                               if q > 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="lomax",
        free_parameters=(("c", "c > 0"), ("q", "q > 0")),
        map_text="(0, 1, c, q, 0)",
        to_if=lambda c, q: IFParams(0.0, 1.0, c, q, 0.0),
        check=_mk_check(c=_positive("c"), q=_positive("q")),
        matches=lambda pa: pa.p == 0.0 and pa.b == 1.0 and pa.x0 == 0.0,
        tree_parent="pareto_ii",
        mean_text="c / (q - 1)",
        mean_constraint="q > 1",
        mean_fn=lambda c, q: (_mean_cf(c / (q - 1.0)) if q > 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="burr_xii",
        free_parameters=(("b", "b > 0"), ("q", "q > 0")),
        map_text="(0, b, 1, q, 0)",
        to_if=lambda b, q: IFParams(0.0, b, 1.0, q, 0.0),
        check=_mk_check(b=_positive("b"), q=_positive("q")),
        matches=lambda pa: (pa.p == 0.0 and pa.b > 0 and pa.c == 1.0
                            and pa.x0 == 0.0),
        tree_parent="tadikamalla_burr_xii",
        mean_text="q B(q - 1/b, 1 + 1/b)",
        mean_constraint="b q > 1",
        mean_fn=lambda b, q: (
            _mean_cf(q * beta(q - 1.0 / b, 1.0 + 1.0 / b))
            if b * q > 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="fisk",
        free_parameters=(("b", "b > 0"), ("c", "c > 0")),
        map_text="(0, b, c, 1, 0)",
        to_if=lambda b, c: IFParams(0.0, b, c, 1.0, 0.0),
        check=_mk_check(b=_positive("b"), c=_positive("c")),
        matches=lambda pa: (pa.p == 0.0 and pa.b > 0 and pa.q == 1.0
                            and pa.x0 == 0.0),
        tree_parent="pareto_iii",
        mean_text="c Gamma(1 - 1/b) Gamma(1 + 1/b)",
        mean_constraint="b > 1",
        mean_fn=lambda b, c: (
            _mean_cf(c * _gamma(1.0 - 1.0 / b) * _gamma(1.0 + 1.0 / b))
            if b > 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))

    # ---- cut-off members (p = inf) ----------------------------------------
    es.append(CatalogEntry(
        name="weibull",
        free_parameters=(("c", "c > 0"), ("q", "q > 0"), ("x0", "x0 >= 0")),
        map_text="(inf, -1, c, q, x0)",
        to_if=lambda c, q, x0: IFParams(INF, -1.0, c, q, x0),
        check=_mk_check(c=_positive("c"), q=_positive("q"), x0=_nonneg("x0")),
        matches=lambda pa: math.isinf(pa.p) and pa.b == -1.0,
        mean_text="x0 + c Gamma(1 + 1/q)",
        mean_constraint=None,
        mean_fn=lambda c, q, x0: _mean_cf(x0 + c * _gamma(1.0 + 1.0 / q)),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="weibull_2p",
        free_parameters=(("c", "c > 0"), ("q", "q > 0")),
        map_text="(inf, -1, c, q, 0)",
        to_if=lambda c, q: IFParams(INF, -1.0, c, q, 0.0),
        check=_mk_check(c=_positive("c"), q=_positive("q")),
        matches=lambda pa: math.isinf(pa.p) and pa.b == -1.0 and pa.x0 == 0.0,
        mean_text="c Gamma(1 + 1/q)",
        mean_constraint=None,
        mean_fn=lambda c, q: _mean_cf(c * _gamma(1.0 + 1.0 / q)),
    ))
    es.append(CatalogEntry(
        name="frechet",
        free_parameters=(("c", "c > 0"), ("q", "q > 0"), ("x0", "x0 >= 0")),
        map_text="(inf, 1, c, q, x0)",
        to_if=lambda c, q, x0: IFParams(INF, 1.0, c, q, x0),
        check=_mk_check(c=_positive("c"), q=_positive("q"), x0=_nonneg("x0")),
        matches=lambda pa: math.isinf(pa.p) and pa.b == 1.0,
        tree_parent="if2",
        mean_text="x0 + c Gamma(1 - 1/q)",
        mean_constraint="q > 1",
        mean_fn=lambda c, q, x0: (_mean_cf(x0 + c * _gamma(1.0 - 1.0 / q))
                                  if q > 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="frechet_2p",
        free_parameters=(("c", "c > 0"), ("q", "q > 0")),
        map_text="(inf, 1, c, q, 0)",
        to_if=lambda c, q: IFParams(INF, 1.0, c, q, 0.0),
        check=_mk_check(c=_positive("c"), q=_positive("q")),
        matches=lambda pa: math.isinf(pa.p) and pa.b == 1.0 and pa.x0 == 0.0,
        mean_text="c Gamma(1 - 1/q)",
        mean_constraint="q > 1",
        mean_fn=lambda c, q: (_mean_cf(c * _gamma(1.0 - 1.0 / q))
                              if q > 1 else _NOT_DEFINED),
    ))
    es.append(CatalogEntry(
        name="gumbel_ii",
        free_parameters=(("c", "c > 0"), ("q", "q > 0")),
        map_text="(inf, 1, c, q, 0)",
        to_if=lambda c, q: IFParams(INF, 1.0, c, q, 0.0),
        check=_mk_check(c=_positive("c"), q=_positive("q")),
        matches=lambda pa: math.isinf(pa.p) and pa.b == 1.0 and pa.x0 == 0.0,
        tree_parent="frechet",
        mean_text="c Gamma(1 - 1/q)",
        mean_constraint="q > 1",
        mean_fn=lambda c, q: (_mean_cf(c * _gamma(1.0 - 1.0 / q))
                              if q > 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="rayleigh",
        free_parameters=(("c", "c > 0"),),
        map_text="(inf, -1, c, 2, 0)",
        to_if=lambda c: IFParams(INF, -1.0, c, 2.0, 0.0),
        check=_mk_check(c=_positive("c")),
        matches=lambda pa: (math.isinf(pa.p) and pa.b == -1.0 and pa.q == 2.0
                            and pa.x0 == 0.0),
        mean_text="c sqrt(pi) / 2",
        mean_constraint=None,
        mean_fn=lambda c: _mean_cf(c * math.sqrt(math.pi) / 2.0),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="inverse_rayleigh",
        free_parameters=(("c", "c > 0"),),
        map_text="(inf, 1, c, 2, 0)",
        to_if=lambda c: IFParams(INF, 1.0, c, 2.0, 0.0),
        check=_mk_check(c=_positive("c")),
        matches=lambda pa: (math.isinf(pa.p) and pa.b == 1.0 and pa.q == 2.0
                            and pa.x0 == 0.0),
        tree_parent="gumbel_ii",
        mean_text="c sqrt(pi)",
        mean_constraint=None,
        mean_fn=lambda c: _mean_cf(c * math.sqrt(math.pi)),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="exponential",
        free_parameters=(("c", "c > 0"),),
        map_text="(inf, -1, c, 1, 0)",
        to_if=lambda c: IFParams(INF, -1.0, c, 1.0, 0.0),
        check=_mk_check(c=_positive("c")),
        matches=lambda pa: (math.isinf(pa.p) and pa.b == -1.0 and pa.q == 1.0
                            and pa.x0 == 0.0),
        mean_text="c",
        mean_constraint=None,
        mean_fn=lambda c: _mean_cf(c),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="inverse_exponential",
        free_parameters=(("c", "c > 0"),),
        map_text="(inf, 1, c, 1, 0)",
        to_if=lambda c: IFParams(INF, 1.0, c, 1.0, 0.0),
        check=_mk_check(c=_positive("c")),
        matches=lambda pa: (math.isinf(pa.p) and pa.b == 1.0 and pa.q == 1.0
                            and pa.x0 == 0.0),
        tree_parent="gumbel_ii",
        mean_text="not defined",
        mean_constraint="violated",
        mean_fn=lambda c: _NOT_DEFINED,
        in_mean_table=True,
    ))

    # ---- b = 1 members with finite p > 0 (parameterized by m = p+1) -------
    es.append(CatalogEntry(
        name="generalized_lomax",
        free_parameters=(("m", "m > 1"), ("c", "c > 0"), ("q", "q > 0")),
        map_text="(m-1, 1, c, q, 0)",
        to_if=lambda m, c, q: IFParams(m - 1.0, 1.0, c, q, 0.0),
        check=_mk_check(m=lambda v: [] if v > 1 else ["m must exceed 1"],
                        c=_positive("c"), q=_positive("q")),
        matches=lambda pa: (0.0 < pa.p < INF and pa.b == 1.0 and pa.x0 == 0.0),
        tree_parent="if3",
        mean_text="c m^(1-1/q) (B(1 - 1/q, m) - 1/m)",
        mean_constraint="q > 1",
        mean_fn=lambda m, c, q: (
            _mean_cf(c * m ** (1.0 - 1.0 / q) * (beta(1.0 - 1.0 / q, m) - 1.0 / m))
            if q > 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))
    es.append(CatalogEntry(
        name="stoppa",
        free_parameters=(("m", "m > 1"), ("c", "c > 0"), ("q", "q > 0")),
        map_text="(m-1, 1, c, q, c m^(-1/q))",
        to_if=lambda m, c, q: IFParams(m - 1.0, 1.0, c, q, c * m ** (-1.0 / q)),
        check=_mk_check(m=lambda v: [] if v > 1 else ["m must exceed 1"],
                        c=_positive("c"), q=_positive("q")),
        matches=lambda pa: (0.0 < pa.p < INF and pa.b == 1.0
                            and pa.x0 == pa.c * (pa.p + 1.0) ** (-1.0 / pa.q)),
        tree_parent="if3",
        mean_text="c m^(1-1/q) B(1 - 1/q, m)",
        mean_constraint="q > 1",
        mean_fn=lambda m, c, q: (
            _mean_cf(c * m ** (1.0 - 1.0 / q) * beta(1.0 - 1.0 / q, m))
            if q > 1 else _NOT_DEFINED),
        in_mean_table=True,
    ))
    return es


CATALOG: dict[str, CatalogEntry] = {e.name: e for e in _entries()}

# Specialization edges of the drawn (b > 0) tree: child = parent with the
# stated condition pinned.  Each binder rewrites one side's arguments into
# the other side's so the two maps can be compared bit-exactly; direction
# "up" means child args -> parent args, "down" parent args -> child args
# (used where the reverse would force a double reciprocal).  "if" stands for
# the full five-parameter family.
TREE_EDGES: list[tuple[str, str, str, str, Callable[[dict], dict]]] = [
    ("if", "if1", "p = 0", "up", lambda a: dict(a)),
    ("if", "if3", "b = 1", "up", lambda a: dict(a)),
    ("if", "if2", "p -> inf", "up", lambda a: dict(a)),
    ("if1", "pareto_iii", "q = 1", "up",
     lambda a: {"b": 1.0 / a["gamma"], "c": a["c"], "q": 1.0, "x0": a["x0"]}),
    ("if1", "tadikamalla_burr_xii", "x0 = 0", "up",
     lambda a: {"b": a["b"], "c": a["c"], "q": a["q"], "x0": 0.0}),
    ("if1", "pareto_ii", "b = 1", "up",
     lambda a: {"b": 1.0, "c": a["c"], "q": a["q"], "x0": a["x0"]}),
    ("if3", "pareto_ii", "p = 0", "up",
     lambda a: {"p": 0.0, "c": a["c"], "q": a["q"], "x0": a["x0"]}),
    ("if3", "generalized_lomax", "x0 = 0", "up",
     lambda a: {"p": a["m"] - 1.0, "c": a["c"], "q": a["q"], "x0": 0.0}),
    ("if3", "stoppa", "x0 = c (p+1)^(-1/q)", "up",
     lambda a: {"p": a["m"] - 1.0, "c": a["c"], "q": a["q"],
                "x0": a["c"] * a["m"] ** (-1.0 / a["q"])}),
    ("if3", "frechet", "p -> inf", "up",
     lambda a: {"p": INF, "c": a["c"], "q": a["q"], "x0": a["x0"]}),
    ("if2", "frechet", "b = 1", "up",
     lambda a: {"b": 1.0, "c": a["c"], "q": a["q"], "x0": a["x0"]}),
    ("pareto_iii", "fisk", "x0 = 0", "down",
     lambda a: {"b": 1.0 / a["gamma"], "c": a["c"]}),
    ("tadikamalla_burr_xii", "fisk", "q = 1", "up",
     lambda a: {"b": a["b"], "c": a["c"], "q": 1.0}),
    ("tadikamalla_burr_xii", "burr_xii", "c = 1", "up",
     lambda a: {"b": a["b"], "c": 1.0, "q": a["q"]}),
    ("tadikamalla_burr_xii", "lomax", "b = 1", "up",
     lambda a: {"b": 1.0, "c": a["c"], "q": a["q"]}),
    ("pareto_ii", "lomax", "x0 = 0", "up",
     lambda a: {"c": a["c"], "q": a["q"], "x0": 0.0}),
    ("pareto_ii", "pareto_i", "x0 = c", "up",
     lambda a: {"c": a["x0"], "q": a["q"], "x0": a["x0"]}),
    ("generalized_lomax", "lomax", "p = 0", "up",
     lambda a: {"m": 1.0, "c": a["c"], "q": a["q"]}),
    ("stoppa", "pareto_i", "p = 0", "up",
     lambda a: {"m": 1.0, "c": a["x0"], "q": a["q"]}),
    ("generalized_lomax", "gumbel_ii", "p -> inf", "up",
     lambda a: {"m": INF, "c": a["c"], "q": a["q"]}),
    ("stoppa", "gumbel_ii", "p -> inf", "up",
     lambda a: {"m": INF, "c": a["c"], "q": a["q"]}),
    ("frechet", "gumbel_ii", "x0 = 0", "up",
     lambda a: {"c": a["c"], "q": a["q"], "x0": 0.0}),
    ("gumbel_ii", "inverse_exponential", "q = 1", "up",
     lambda a: {"c": a["c"], "q": 1.0}),
    ("gumbel_ii", "inverse_rayleigh", "q = 2", "up",
     lambda a: {"c": a["c"], "q": 2.0}),
]


def catalog_names() -> list[str]:
    return sorted(CATALOG)


def entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise DomainError(f"unknown distribution name {name!r}") from None


def named(name: str, **args) -> IFParams:
    """Family parameters of a named special case, validating its constraints."""
    e = entry(name)
    expected = [pname for pname, _ in e.free_parameters]
    missing = [pn for pn in expected if pn not in args]
    extra = [k for k in args if k not in expected]
    if missing or extra:
        bits = []
        if missing:
            bits.append(f"missing {', '.join(missing)}")
        if extra:
            bits.append(f"unexpected {', '.join(extra)}")
        raise DomainError(f"{name} takes ({', '.join(expected)}): "
                          + "; ".join(bits))
    clean = {k: float(v) for k, v in args.items()}
    problems = e.check(**clean)
    if problems:
        raise DomainError(f"{name}: " + "; ".join(problems))
    return e.to_if(**clean)


def resolve(params: IFParams) -> list[str]:
    """Every catalog name whose constraint region contains params exactly,
    most specific (fewest free parameters) first; concrete names ahead of
    the if1/if2/if3 subfamily heads on ties."""
    hits = [e for e in CATALOG.values() if e.matches(params)]
    hits.sort(key=lambda e: (e.arity, e.name.startswith("if"), e.name))
    return [e.name for e in hits]


def table1_mean(name: str, **args) -> MomentResult:
    """The printed mean formula of a named case, honoring its constraint."""
    e = entry(name)
    if e.mean_fn is None:
        raise DomainError(f"{name} has no tabled mean expression")
    expected = [pname for pname, _ in e.free_parameters]
    missing = [pn for pn in expected if pn not in args]
    extra = [k for k in args if k not in expected]
    if missing or extra:
        raise DomainError(f"{name} mean takes ({', '.join(expected)})")
    clean = {k: float(v) for k, v in args.items()}
    problems = e.check(**clean)
    if problems:
        raise DomainError(f"{name}: " + "; ".join(problems))
    return e.mean_fn(**clean)


def records() -> list[dict]:
    """Machine-readable listing, one record per entry."""
    out = []
    for name in catalog_names():
        e = CATALOG[name]
        out.append({
            "name": e.name,
            "arity": e.arity,
            "parameters": ",".join(p for p, _ in e.free_parameters),
            "constraints": "; ".join(c for _, c in e.free_parameters if c),
            "if_map": e.map_text,
            "tree_parent": e.tree_parent or "",
            "mean": e.mean_text or "",
            "mean_constraint": e.mean_constraint or "",
        })
    return out
