"""The ten acceptance criteria, at their stated sample sizes and tolerances."""

import math
import time

import numpy as np
import pytest

from qmb import bornology as born, core, harness, metrization as met, oracle, zoo
from qmb.geometry import Interval
from qmb.points import Nat, Real
from qmb.report import emit_report

R = Real
INF = math.inf
criterion = pytest.mark.criterion


# -- 1 ----------------------------------------------------------------------


@criterion(1)
def test_axiom_suite_over_zoo():
    t0 = time.perf_counter()
    for zid in zoo.ids():
        e = zoo.get(zid)
        rep = harness.run_suite({"suite": "axioms", "target": zid, "samples": 2000,
                                 "tol": 1e-9})
        by = {c.check_id: c for c in rep.checks}
        assert by["axioms:reflexivity"].status == "pass", zid
        assert by["axioms:triangle"].status == "pass", (zid, by["axioms:triangle"].witness)
        assert by["axioms:triangle"].metrics["triples"] == 2000
        sep = by["axioms:separation"]
        assert sep.status == "pass", (zid, sep.witness)
        if e.space.quasi_metric and not e.pseudometric:
            assert sep.metrics["pairs"] == 2000, zid
    assert time.perf_counter() - t0 < 10


# -- 2 ----------------------------------------------------------------------


@criterion(2)
@pytest.mark.parametrize("zid", zoo.ids())
def test_conjugate_involution_exact(zid):
    s = zoo.get(zid).space
    cc = core.conjugate(core.conjugate(s))
    for x, y in core.sample_pairs(s, core.make_rng(2), 1000):
        assert core.dist(cc, x, y) == core.dist(s, x, y)


@criterion(2)
def test_symmetrized_upper_is_absolute_difference():
    m = core.symmetrize(zoo.rho_upper())
    pairs = core.sample_pairs(m, core.make_rng(3), 1000)
    assert len(pairs) == 1000
    for x, y in pairs:
        assert abs(core.dist(m, x, y) - abs(x.x - y.x)) <= 1e-12


@criterion(2)
def test_conjugate_upper_is_lower():
    c, low = core.conjugate(zoo.rho_upper()), zoo.rho_lower()
    for x, y in core.sample_pairs(c, core.make_rng(4), 1000):
        assert core.dist(c, x, y) == core.dist(low, x, y)


# -- 3 ----------------------------------------------------------------------

CENTERS = [Nat(k) for k in range(11)]


@criterion(3)
def test_omega_bounded_under_d():
    s = zoo.ex1_6_space()
    w = born.is_d_bounded(s, zoo.omega(s))
    assert w.kind == "bounded" and (w.center, w.radius) == (Nat(0), 2)


@criterion(3)
def test_omega_escapes_under_conjugate():
    s = zoo.ex1_6_space()
    c = core.conjugate(s)
    w = born.is_d_bounded(c, zoo.omega(s), centers=CENTERS, radius_budget=2 ** 20)
    assert w.kind == "escape"
    assert list(w.centers) == CENTERS
    for x, y, v in zip(w.centers, w.points, w.distances):
        assert core.dist(c, x, y) == v >= 2 ** 20


@criterion(3)
def test_symmetrized_prefixes_bounded_omega_escapes():
    s = zoo.ex1_6_space()
    m = core.symmetrize(s)
    for n in range(0, 20):
        w = born.is_d_bounded(m, zoo.nat_prefix(n))
        assert w.kind == "bounded"
        assert all(core.dist(m, w.center, p) < w.radius for p in zoo.nat_prefix(n).members)
    w = born.is_d_bounded(m, zoo.omega(s), centers=CENTERS, radius_budget=2 ** 20)
    assert w.kind == "escape"


# -- 4 ----------------------------------------------------------------------


@pytest.fixture(scope="module")
def chi_open():
    return met.chi_from_base(zoo.euclid_line(), zoo.symmetric_open().base, 1.0)


@criterion(4)
def test_chi_lipschitz_5000_pairs(chi_open):
    rng = np.random.default_rng(44)
    xs = rng.uniform(-10, 10, 5000)
    hs = rng.uniform(-1, 1, 5000)
    n = 0
    for x, h in zip(xs, hs):
        y = x + h
        d = abs(y - x)
        if d >= 1 or not -10 <= y <= 10:
            y = x - h
            d = abs(y - x)
        assert d < 1
        n += 1
        assert chi_open.chi(R(y)) - chi_open.chi(R(x)) <= 2 * d + 1e-9
    assert n == 5000


@criterion(4)
def test_chi_hand_values(chi_open):
    for x, want in [(0.0, 0.0), (1.5, 0.5), (2.5, 1.5)]:
        assert abs(chi_open.chi(R(x)) - want) <= 1e-12


# -- 5 ----------------------------------------------------------------------


@criterion(5)
def test_rho_from_chi_suite():
    rep = harness.run_suite({"suite": "metrization-6.5", "target": "d_n", "base": "open",
                             "delta": 1.0})
    by = {c.check_id: c for c in rep.checks}
    for cid in ("chi:construct", "rho:axioms", "rho:local-identity", "rho:bounded-base",
                "chi:growth"):
        assert by[cid].status == "pass", (cid, by[cid].witness, by[cid].message)


@criterion(5)
@pytest.mark.parametrize("delta", [1.0, 0.5])
def test_rho_from_chi_contract_direct(delta):
    dn = zoo.euclid_line()
    c = met.chi_from_base(dn, zoo.symmetric_open().base, delta)
    rho = met.rho_from_chi(c)
    rep = core.check_axioms(rho, 2000, seed=5, tol=1e-9)
    assert rep.passed
    lim = min(1.0, delta)
    close = 0
    for x, y in core.sample_pairs(dn, core.make_rng(6), 2000, near=0.9):
        if core.dist(dn, x, y) < lim:
            close += 1
            assert core.dist(rho, x, y) == core.dist(dn, x, y)
    assert close > 1000
    pts = dn.sample(2000, 7)
    for n in range(1, 8):
        B = c.base.at(n)
        w = born.is_d_bounded(rho, B)
        assert w.kind == "bounded"
        for p in pts:
            if not B.contains(p):
                assert c.chi(p) >= n - 1


# -- 6 ----------------------------------------------------------------------

# (interval, sup of max(x, 0) finite?)
PROBES = [
    ((-INF, 0.0, False, True), True),
    ((-INF, 5.0, False, False), True),
    ((-INF, -3.0, False, False), True),
    ((-INF, 1e4, False, True), True),
    ((-INF, INF, False, False), False),
    ((0.0, INF, True, False), False),
    ((3.0, INF, False, False), False),
    ((-100.0, INF, True, False), False),
    ((0.5, INF, False, False), False),
    ((1e3, INF, True, False), False),
    ((1e5, INF, True, False), False),
    ((-5.0, 5.0, True, True), True),
    ((0.0, 1.0, True, True), True),
    ((2.0, 3.0, False, False), True),
    ((100.0, 200.0, True, True), True),
    ((-10.0, -1.0, True, True), True),
    ((-1e5, 1e5, False, False), True),
    ((-2.0, 7.0, True, False), True),
    ((-INF, -100.0, False, True), True),
    ((40.0, 41.0, True, True), True),
]


@pytest.fixture(scope="module")
def rho47():
    return met.quasimetric_from_char(core.truncate(zoo.euclid_line(), 1),
                                     met.CharFunction(lambda p: max(p.x, 0.0), "max(x,0)"))


@criterion(6)
def test_char_quasimetric_axioms(rho47):
    rep = core.check_axioms(rho47, 2000, seed=8, tol=1e-9)
    assert rep.passed


@criterion(6)
@pytest.mark.parametrize("iv, finite_sup", PROBES, ids=[str(p[0]) for p in PROBES])
def test_char_quasimetric_bounded_sets(rho47, iv, finite_sup):
    assert len(PROBES) == 20
    A = core.real_set(Interval(*iv))
    w = born.is_d_bounded(rho47, A, sample_budget=2000, radius_budget=2 ** 20)
    assert w.kind == ("bounded" if finite_sup else "escape")


@criterion(6)
def test_metric_from_char_is_du():
    m = met.metric_from_char(zoo.euclid_line_1(),
                             met.CharFunction(lambda p: max(p.x, 0.0), "max(x,0)"))
    du = zoo.d_u()
    pairs = core.sample_pairs(du, core.make_rng(9), 1000)
    assert len(pairs) == 1000
    for x, y in pairs:
        assert core.dist(m, x, y) == core.dist(du, x, y)


# -- 7 ----------------------------------------------------------------------


@criterion(7)
def test_dn_dplus_not_uniformly_equivalent():
    dn, dp = zoo.euclid_line(), zoo.dplus_n()
    w = met.uniform_equivalence_check(dn, dp)
    assert w.kind == "witness"
    src, dst = (dn, dp) if w.direction == "0->1" else (dp, dn)
    assert core.dist(src, w.x, w.y) == w.d_small < min(met.DEFAULT_GRID)
    assert core.dist(dst, w.x, w.y) == w.d_other >= w.eps


@criterion(7)
@pytest.mark.parametrize("zid, base", [("hedgehog", zoo.spine_base),
                                       ("hawaiian", zoo.earring_base)])
def test_not_proper_with_replayable_witness(zid, base):
    s, b = zoo.get(zid).space, base()
    r = born.properness_check(s, b)
    assert r.kind == "counterexample"
    assert born.replay_counterexample(s, b, r.n, r.point, r.delta)


@criterion(7)
def test_sorgenfrey_lower_rays_proper_delta_one():
    r = born.properness_check(zoo.sorgenfrey_rho_s(), zoo.lower_bounded_closed())
    assert r.kind == "pass"
    assert r.deltas and all(d == 1 for d in r.deltas.values())


# -- 8 ----------------------------------------------------------------------


@criterion(8)
def test_interleaved_sequences_exhaustive():
    d, rho = zoo.ex8_2_space(30), zoo.ex8_6_rho(30)
    differ_at_one = 0
    for a in d.points:
        for b in d.points:
            dv, rv = core.dist(d, a, b), core.dist(rho, a, b)
            if dv < 1:
                assert rv == dv, (a, b)
            elif dv == 1 and rv != dv:
                differ_at_one += 1
    assert differ_at_one >= 1


@criterion(8)
def test_interleaved_sequences_locally_identical_delta_one():
    r = met.locally_identical_check(zoo.ex8_2_space(30), zoo.ex8_6_rho(30))
    assert r.kind == "pass" and r.delta == 1


# -- 9 ----------------------------------------------------------------------


@criterion(9)
def test_oracle_equivalence_100_digraphs():
    t0 = time.perf_counter()
    for seed in range(100):
        n = 1 + seed % 8
        fs = oracle.closure(oracle.random_digraph(n, 0.5, seed))
        assert oracle.triangle_violations(fs, tol=0.0) == [], seed
        res = oracle.cross_check(fs, seed)
        assert res["disagreements"] == [], (seed, res["disagreements"][:3])
        assert res["checks"] > 0
    assert time.perf_counter() - t0 < 5


# -- 10 ---------------------------------------------------------------------

DETERMINISM = [
    {"suite": "axioms", "target": "hedgehog", "samples": 500},
    {"suite": "conjugation", "target": "rho_upper", "samples": 500},
    {"suite": "metrization-4.7", "target": {"op": "truncate", "arg": "d_n", "cap": 1},
     "char": "positive_part", "samples": 400},
    {"suite": "metrization-6.5", "target": "d_n", "base": "open", "samples": 400},
    {"suite": "bornology", "target": "ex1_6"},
    {"suite": "properness", "target": "hawaiian", "base": "earring"},
    {"suite": "uniform-equivalence", "target": "d_n", "other": "dplus_n", "samples": 500},
    {"suite": "locally-identical", "target": "ex8_6", "other": "ex8_2"},
    {"suite": "cb-base-8.5", "target": "d_n", "base": "CB"},
    {"suite": "oracle", "graphs": 20},
]


@criterion(10)
@pytest.mark.parametrize("cfg", DETERMINISM, ids=[c["suite"] for c in DETERMINISM])
def test_reports_byte_identical(cfg):
    a = emit_report(harness.run_suite(cfg))
    b = emit_report(harness.run_suite(cfg))
    c = emit_report(harness.run_suite(cfg, workers=4))
    assert a == b == c
