import math

import pytest
from hypothesis import given, settings, strategies as st

from qmb import bornology as born, core, metrization as met, zoo
from qmb.errors import AsymmetricInput, CarrierMismatch, ContractViolation, CriterionViolation
from qmb.geometry import Interval
from qmb.points import Nat, Real

R = Real
pos = met.CharFunction(lambda p: max(p.x, 0.0), "max(x,0)")
absf = met.CharFunction(lambda p: abs(p.x), "|x|")


@pytest.fixture(scope="module")
def chi_dn():
    return met.chi_from_base(zoo.euclid_line(), zoo.symmetric_open().base, 1.0)


def test_char_function_rejects_negative():
    with pytest.raises(ContractViolation):
        met.CharFunction(lambda p: -1.0, "neg")(R(0.0))


def test_forcing_from_point():
    s = zoo.ex1_6_space()
    f = met.forcing_from_point(s, Nat(0))
    assert f(Nat(0)) == 0 and all(f(Nat(n)) == 1 for n in range(1, 20))
    g = met.forcing_from_point(zoo.sorgenfrey_rho_s(), R(0.0))
    assert g(R(3.0)) == 3 and g(R(-3.0)) == 1


def test_quasimetric_from_char_values():
    d = core.truncate(zoo.euclid_line(), 1)
    rho = met.quasimetric_from_char(d, pos)
    assert core.dist(rho, R(0.0), R(2.0)) == 3
    assert core.dist(rho, R(2.0), R(0.0)) == 1
    zero = met.quasimetric_from_char(d, met.constant(0.0))
    for x, y in core.sample_pairs(d, core.make_rng(0), 300):
        assert core.dist(zero, x, y) == core.dist(d, x, y)


def test_quasimetric_from_char_needs_bound():
    with pytest.raises(ValueError):
        met.quasimetric_from_char(zoo.euclid_line(), pos)


def test_metric_from_char_values():
    d = zoo.euclid_line_1()
    rho = met.metric_from_char(d, absf)
    assert core.dist(rho, R(1.0), R(-2.0)) == 2
    same = met.metric_from_char(d, met.constant(3.0))
    for x, y in core.sample_pairs(d, core.make_rng(1), 300):
        assert core.dist(same, x, y) == core.dist(d, x, y)
    du = met.metric_from_char(d, pos)
    for x, y in core.sample_pairs(d, core.make_rng(2), 500):
        assert core.dist(du, x, y) == core.dist(zoo.d_u(), x, y)


def test_metric_from_char_rejects_asymmetric():
    with pytest.raises(AsymmetricInput):
        met.metric_from_char(zoo.sorgenfrey_rho_s1(), pos)


def test_dg_from_char():
    dn = zoo.euclid_line()
    dg = met.dg_from_char(dn, pos)
    assert core.dist(dg, R(-5.0), R(3.0)) == 4
    assert core.dist(dg, R(2.0), R(2.0)) == 0
    t = core.truncate(dn, 1)
    z = met.dg_from_char(dn, met.constant(0.0))
    for x, y in core.sample_pairs(dn, core.make_rng(3), 300):
        assert core.dist(z, x, y) == core.dist(t, x, y)


def test_psi_band_convention():
    dn = zoo.euclid_line()
    make = lambda n: core.real_set(Interval.open(-float(n), float(n)))
    closures, complements = met.euclidean_interval_oracles(make)
    psi = met.psi_from_base(dn, closures, complements)
    assert psi(R(0.0)) == 1
    pts = dn.sample(500, 0)
    for n in range(1, 6):
        out = [p for p in pts if abs(p.x) >= n + 1]
        assert all(psi(p) >= n for p in out)
        inside = [p for p in pts if abs(p.x) < n]
        assert max((psi(p) for p in inside), default=0) <= n + 1
    assert max(psi(p) for p in pts) > 100


def test_chi_examples(chi_dn):
    assert abs(chi_dn.chi(R(0.0)) - 0) <= 1e-12
    assert abs(chi_dn.chi(R(1.5)) - 0.5) <= 1e-12
    assert abs(chi_dn.chi(R(2.5)) - 1.5) <= 1e-12
    assert chi_dn.phi(0)(R(123.0)) == 1


def test_phi_vanishes_inside_and_saturates_outside(chi_dn):
    pts = zoo.euclid_line().sample(400, 9)
    for n in range(1, 5):
        phi = chi_dn.phi(n)
        for p in pts:
            if chi_dn.base.at(n).contains(p):
                assert phi(p) == 0
            if not chi_dn.base.at(n + 1).contains(p):
                assert phi(p) == 1


def test_chi_preconditions():
    dn = zoo.euclid_line()
    with pytest.raises(ValueError):
        met.chi_from_base(dn, zoo.compact_bounded().base, 1.0)   # [0,0] is nonempty
    with pytest.raises(ValueError):
        met.chi_from_base(dn, zoo.symmetric_open().base, 0.0)


def test_chi_criterion_violation_on_hedgehog():
    e = zoo.get("hedgehog")
    with pytest.raises(CriterionViolation) as err:
        met.chi_from_base(e.space, born.empty_start(zoo.spine_base().base), 0.25)
    assert err.value.delta == 0.25


def test_rho_from_chi_values(chi_dn):
    rho = met.rho_from_chi(chi_dn)
    assert core.dist(rho, R(0.0), R(2.5)) == 1
    assert core.dist(rho, R(2.5), R(0.0)) == 1
    assert core.dist(rho, R(0.0), R(0.3)) == 0.3


def test_rho_from_chi_far_branch(chi_dn):
    rho = met.rho_from_chi(chi_dn)
    x, y = R(0.0), R(40.5)
    want = max(1.0, 0.5 * (chi_dn.chi(y) - chi_dn.chi(x)))
    assert core.dist(rho, x, y) == want > 1


@settings(max_examples=200, deadline=None)
@given(st.floats(-10, 10), st.floats(-0.999, 0.999))
def test_chi_lipschitz_property(x, h):
    c = met.chi_from_base(zoo.euclid_line(), zoo.symmetric_open().base, 1.0)
    y = x + h
    d = abs(y - x)
    if d < 1:
        assert c.chi(R(y)) - c.chi(R(x)) <= 2 * d + 1e-9


def test_uniform_continuity_examples(chi_dn):
    r = met.uniform_continuity_check(met.constant(2.0), zoo.euclid_line())
    assert r.kind == "pass"
    r = met.uniform_continuity_check(chi_dn.chi, zoo.euclid_line(), samples=1000)
    assert r.kind == "pass"
    sq = met.CharFunction(lambda p: p.x * p.x, "x^2")
    r = met.uniform_continuity_check(sq, zoo.euclid_line(), samples=1000)
    assert r.kind == "witness"
    assert r.d < min(met.DEFAULT_GRID) and r.gap >= r.eps


def test_uniform_equivalence_examples():
    dn = zoo.euclid_line()
    assert met.uniform_equivalence_check(dn, zoo.euclid_line_1()).kind == "pass"
    assert met.uniform_equivalence_check(dn, dn).kind == "pass"
    w = met.uniform_equivalence_check(dn, zoo.dplus_n())
    assert w.kind == "witness"
    a = core.dist(dn if w.direction == "0->1" else zoo.dplus_n(), w.x, w.y)
    b = core.dist(zoo.dplus_n() if w.direction == "0->1" else dn, w.x, w.y)
    assert a == w.d_small < min(met.DEFAULT_GRID) and b == w.d_other >= w.eps


def test_uniform_equivalence_carrier_mismatch():
    with pytest.raises(CarrierMismatch):
        met.uniform_equivalence_check(zoo.euclid_line(), zoo.ex1_6_space())


def test_locally_identical_examples(chi_dn):
    r = met.locally_identical_check(zoo.ex8_2_space(), zoo.ex8_6_rho())
    assert r.kind == "pass" and r.delta == 1
    r = met.locally_identical_check(zoo.euclid_line(), met.rho_from_chi(chi_dn))
    assert r.kind == "pass" and r.delta == 1
    dn = zoo.euclid_line()
    twice = core.QPSpace(dn.carrier, lambda x, y: 2 * abs(x.x - y.x), dn.sampler, "2d_n",
                         neighbor=dn.neighbor)
    r = met.locally_identical_check(dn, twice)
    assert r.kind == "witness" and r.delta is None


def test_cb_uniform_base_examples():
    dn = zoo.euclid_line()
    b = met.cb_uniform_base(dn, zoo.compact_bounded().base, 1.0)
    assert list(b.source) == list(range(len(b.source)))
    # neighbourhoods of [-n, n] at radius 1/2 are (-n-1/2, n+1/2)
    assert b.at(2).contains(R(2.49)) and not b.at(2).contains(R(2.5))
    e = zoo.get("ex8_2")
    b = met.cb_uniform_base(e.space, zoo.index_prefix_base(), 1.0)
    rho = zoo.ex8_6_rho()
    for m in range(min(b.length, 5)):
        assert born.is_d_bounded(rho, b.at(m)).kind == "bounded"


def test_cb_uniform_base_fixed_point():
    dn = zoo.euclid_line()
    fam = born.BaseSequence(lambda n: core.real_set(Interval.open(-n - 0.5, n + 0.5)), "F")
    b = met.cb_uniform_base(dn, fam, 1.0)
    assert list(b.source) == list(range(len(b.source)))


def test_rho_from_chi_bounded_sets_are_the_bornology(chi_dn):
    rho = met.rho_from_chi(chi_dn)
    for n in range(1, 5):
        assert born.is_d_bounded(rho, chi_dn.base.at(n)).kind == "bounded"
    ray = core.real_set(Interval(0.0, math.inf, True))
    assert born.is_d_bounded(rho, ray, centers=[R(0.0)]).kind == "escape"
