import math

import pytest

from ifdist import DomainError, IFParams, UniformStream
from ifdist.catalog import (
    CATALOG,
    TREE_EDGES,
    catalog_names,
    entry,
    named,
    records,
    resolve,
    table1_mean,
)
from ifdist.moments import mean

INF = math.inf

# seeded argument draws per entry, honoring constraints with margin so the
# tabled means stay well-defined
def draw_args(e, u):
    args = {}
    for pname, constraint in e.free_parameters:
        if pname == "gamma":
            args[pname] = 0.1 + 0.7 * next(u)          # gamma < 1 < q margins
        elif pname == "b":
            if "b < 0" in constraint:
                args[pname] = -4.0 + 2.5 * next(u)      # in [-4, -1.5]
            else:
                args[pname] = 1.5 + 3.0 * next(u)       # in [1.5, 4.5]
        elif pname == "m":
            args[pname] = 1.5 + 3.0 * next(u)
        elif pname == "q":
            args[pname] = 1.6 + 3.0 * next(u)           # q > 1.6
        elif pname == "c":
            args[pname] = 0.5 + 4.0 * next(u)
        elif pname == "x0":
            args[pname] = 2.0 * next(u)
        elif pname == "p":
            args[pname] = 0.3 + 4.0 * next(u)
    return args


class TestNamed:
    def test_exponential(self):
        assert named("exponential", c=1) == IFParams(INF, -1.0, 1.0, 1.0, 0.0)

    def test_pareto_i(self):
        assert named("pareto_i", x0=1, q=2) == IFParams(0.0, 1.0, 1.0, 2.0, 1.0)

    def test_burr_xii(self):
        assert named("burr_xii", b=2, q=3) == IFParams(0.0, 2.0, 1.0, 3.0, 0.0)

    def test_weibull_triplet(self):
        assert named("weibull", c=2, q=3, x0=1) == IFParams(INF, -1.0, 2.0, 3.0, 1.0)

    def test_stoppa_location_lock(self):
        pa = named("stoppa", m=2, c=1, q=3)
        assert pa.x0 == 2.0 ** (-1.0 / 3.0)

    def test_pareto_iv_gamma_conversion(self):
        pa = named("pareto_iv", gamma=0.5, c=1, q=3, x0=0)
        assert pa.b == 2.0

    def test_unknown_name(self):
        with pytest.raises(DomainError, match="unknown distribution"):
            named("nonexistent", c=1)

    def test_constraint_violation(self):
        with pytest.raises(DomainError, match="negative"):
            named("dagum", b=2.0, c=1, q=1)

    def test_missing_and_extra_args(self):
        with pytest.raises(DomainError, match="missing"):
            named("exponential")
        with pytest.raises(DomainError, match="unexpected"):
            named("exponential", c=1, q=2)


class TestResolve:
    def test_exponential_is_weibull(self):
        names = resolve(IFParams(INF, -1.0, 3.0, 1.0, 0.0))
        assert names[0] == "exponential"
        assert "weibull" in names and "weibull_2p" in names

    def test_pareto_chain(self):
        names = resolve(IFParams(0.0, 1.0, 2.0, 3.0, 2.0))
        assert names[:3] == ["pareto_i", "pareto_ii", "pareto_iv"]

    def test_general_point_matches_nothing(self):
        assert resolve(IFParams(2.5, 1.7, 1.0, 1.0, 0.0)) == []

    def test_gumbel_and_frechet_2p_are_both_reported(self):
        names = resolve(IFParams(INF, 1.0, 2.0, 3.0, 0.0))
        assert "gumbel_ii" in names and "frechet_2p" in names

    def test_contains_own_name(self):
        u = UniformStream(2024)
        for name in catalog_names():
            e = CATALOG[name]
            args = draw_args(e, u)
            assert name in resolve(named(name, **args)), name


class TestTable1Mean:
    def test_rayleigh(self):
        res = table1_mean("rayleigh", c=2)
        assert res.value == pytest.approx(math.sqrt(math.pi), rel=1e-12)

    def test_inverse_exponential_not_defined(self):
        assert not table1_mean("inverse_exponential", c=1).exists

    def test_lomax(self):
        assert table1_mean("lomax", c=3, q=4).value == pytest.approx(1.0, rel=1e-14)

    def test_constraint_column(self):
        assert not table1_mean("pareto_ii", c=1, q=0.8, x0=0).exists
        assert not table1_mean("fisk", b=0.9, c=1).exists
        assert not table1_mean("dagum", b=-0.5, c=1, q=2).exists

    def test_unknown_name(self):
        with pytest.raises(DomainError):
            table1_mean("nope", c=1)

    def test_fixture_equality_against_moments(self):
        # every tabled row, 20 seeded draws: printed formula == mean machinery
        u = UniformStream(7)
        rows = [n for n in catalog_names() if CATALOG[n].in_mean_table]
        assert len(rows) == 19
        for name in rows:
            e = CATALOG[name]
            for _ in range(20):
                args = draw_args(e, u)
                t1 = table1_mean(name, **args)
                m = mean(named(name, **args))
                assert t1.exists == m.exists, (name, args)
                if t1.exists:
                    assert t1.value == pytest.approx(m.value, rel=1e-9), (name, args)


class TestTree:
    def test_every_edge_is_exact(self):
        # drawing arguments on one side and pinning the edge condition must
        # reproduce the other side's parameter map exactly
        u = UniformStream(99)
        for parent, child, cond, direction, binder in TREE_EDGES:
            if parent == "if":
                continue
            pe, ce = CATALOG[parent], CATALOG[child]
            for _ in range(5):
                if direction == "up":
                    cargs = draw_args(ce, u)
                    pargs = binder(cargs)
                else:
                    pargs = draw_args(pe, u)
                    pargs["x0"] = 0.0  # the pinned condition of the down edge
                    cargs = binder(pargs)
                assert pe.to_if(**pargs) == ce.to_if(**cargs), (parent, child)

    def test_root_edges_present(self):
        roots = [(p, c) for p, c, _, _, _ in TREE_EDGES if p == "if"]
        assert set(roots) == {("if", "if1"), ("if", "if2"), ("if", "if3")}

    def test_edge_count_matches_figure(self):
        assert len(TREE_EDGES) == 24

    def test_limit_edges_reach_gumbel(self):
        gl = CATALOG["generalized_lomax"].to_if(m=INF, c=2.0, q=3.0)
        st = CATALOG["stoppa"].to_if(m=INF, c=2.0, q=3.0)
        gm = named("gumbel_ii", c=2.0, q=3.0)
        assert gl == gm and st == gm


class TestInversePairs:
    def test_weibull_frechet_mirror(self):
        w = named("weibull", c=2, q=3, x0=1)
        f = named("frechet", c=2, q=3, x0=1)
        assert w == IFParams(w.p, -f.b, f.c, f.q, f.x0)

    def test_rayleigh_mirror(self):
        r = named("rayleigh", c=2)
        ir = named("inverse_rayleigh", c=2)
        assert r.b == -ir.b and (r.p, r.c, r.q, r.x0) == (ir.p, ir.c, ir.q, ir.x0)


class TestRecords:
    def test_complete_and_well_formed(self):
        rs = records()
        assert len(rs) == len(CATALOG) >= 20
        for r in rs:
            assert r["name"] in CATALOG
            assert r["arity"] == CATALOG[r["name"]].arity
            assert r["if_map"].startswith("(")

    def test_stoppa_map_text(self):
        assert entry("stoppa").map_text == "(m-1, 1, c, q, c m^(-1/q))"
