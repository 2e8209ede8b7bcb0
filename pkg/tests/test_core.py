import math

import pytest
from hypothesis import given, settings, strategies as st

from qmb import core, zoo
from qmb.errors import CarrierMismatch, ContractViolation, EmptySetError
from qmb.geometry import Interval
from qmb.points import Nat, Real

R = Real
finite_reals = st.floats(-1e4, 1e4, allow_nan=False)


@pytest.fixture(scope="module")
def ex16():
    return zoo.ex1_6_space()


def test_dist_ex16(ex16):
    assert core.dist(ex16, Nat(3), Nat(5)) == 8
    assert core.dist(ex16, Nat(0), Nat(5)) == 1
    assert core.dist(ex16, Nat(4), Nat(4)) == 0


def test_dist_rejects_foreign_point(ex16):
    with pytest.raises(CarrierMismatch):
        core.dist(ex16, R(1.0), Nat(2))


def test_nan_distance_is_contract_violation():
    bad = core.QPSpace(zoo.REALS, lambda x, y: math.nan, zoo.real_sampler(), "nan")
    with pytest.raises(ContractViolation):
        core.dist(bad, R(0.0), R(1.0))


def test_conjugate_ex16(ex16):
    c = core.conjugate(ex16)
    assert core.dist(c, Nat(0), Nat(5)) == 32
    assert c.label.endswith("⁻¹")


def test_conjugate_rho_upper_is_rho_lower():
    c = core.conjugate(zoo.rho_upper())
    low = zoo.rho_lower()
    for x, y in [(0.0, 3.0), (3.0, 0.0), (-2.5, 7.0), (1.0, 1.0)]:
        assert core.dist(c, R(x), R(y)) == core.dist(low, R(x), R(y))


def test_symmetrize_examples(ex16):
    assert core.dist(core.symmetrize(ex16), Nat(3), Nat(5)) == 32
    su = core.symmetrize(zoo.rho_upper())
    assert core.dist(su, R(-1.0), R(2.5)) == 3.5
    assert core.dist(su, R(2.5), R(-1.0)) == 3.5


def test_truncate_examples():
    t = core.truncate(zoo.euclid_line(), 1)
    assert core.dist(t, R(0.0), R(5.0)) == 1
    assert core.dist(t, R(0.0), R(0.25)) == 0.25
    with pytest.raises(ValueError):
        core.truncate(zoo.euclid_line(), 0)
    ts = core.truncate(zoo.sorgenfrey_rho_s(), 1)
    s1 = zoo.sorgenfrey_rho_s1()
    for x, y in core.sample_pairs(ts, core.make_rng(0), 500):
        assert core.dist(ts, x, y) == core.dist(s1, x, y)


def test_ball_contains(ex16):
    assert all(core.ball_contains(ex16, Nat(0), 2, Nat(n)) for n in range(64))
    rs = zoo.sorgenfrey_rho_s()
    assert not core.ball_contains(rs, R(0.0), 1, R(-0.5))
    assert core.ball_contains(rs, R(0.0), 1, R(0.5))
    assert core.ball_contains(rs, R(3.0), 1e-300, R(3.0))
    with pytest.raises(ValueError):
        core.ball_contains(rs, R(0.0), 0, R(0.0))


def test_set_dist_from_examples():
    dn = zoo.euclid_line()
    A = core.real_set(Interval.open(-1.0, 1.0))
    r = core.set_dist_from(dn, A, R(1.5))
    assert r.exact and r.value == 0.5
    assert core.set_dist_from(dn, A, R(0.2)).value == 0
    rs = zoo.sorgenfrey_rho_s()
    ray = core.real_set(Interval(0.0, math.inf, True))
    assert core.set_dist_from(rs, ray, R(-0.5)).value == 1


def test_set_dist_to_examples():
    dn = zoo.euclid_line()
    comp = core.real_set(Interval(-math.inf, -2.0, False, True),
                         Interval(2.0, math.inf, True))
    assert core.set_dist_to(dn, R(0.5), comp).value == 1.5
    rs = zoo.sorgenfrey_rho_s()
    ray = core.real_set(Interval(1.0, math.inf, True))
    assert core.set_dist_to(rs, R(0.0), ray).value == 1
    assert core.set_dist_to(rs, R(4.0), ray).value == 0


def test_set_dist_empty_raises():
    with pytest.raises(EmptySetError):
        core.set_dist_from(zoo.euclid_line(), core.EMPTY, R(0.0))


def test_sampled_set_dist_is_an_upper_bound():
    dn = zoo.euclid_line()
    # no shape, so the sampling fallback is used
    A = core.SetDescriptor(contains=lambda p: -1 < p.x < 1,
                           sampler=lambda rng, n: [R(v) for v in rng.uniform(-1, 1, n)])
    r = core.set_dist_from(dn, A, R(1.5))
    assert not r.exact
    assert r.value >= 0.5


def test_neighborhood_contains():
    dn = zoo.euclid_line()
    A = core.real_set(Interval.open(-1.0, 1.0))
    assert core.neighborhood_contains(dn, A, 1, R(2.5)) is core.Membership.OUTSIDE
    assert core.neighborhood_contains(dn, A, 1, R(0.0)) is core.Membership.INSIDE
    assert core.neighborhood_contains(dn, A, 1, R(1.9)) is core.Membership.INSIDE
    assert core.neighborhood_contains(dn, core.EMPTY, 1, R(0.0)) is core.Membership.OUTSIDE


@pytest.mark.parametrize("n", [0, 1, 3, 10])
def test_sorgenfrey_ray_neighbourhood_absorbed(n):
    rs = zoo.sorgenfrey_rho_s()
    A = core.real_set(Interval(-float(n), math.inf, True))
    succ = core.real_set(Interval(-float(n) - 1, math.inf, True))
    rng = core.make_rng(n)
    pts = [R(v) for v in rng.uniform(-n - 5, n + 5, 2000)] + [R(-n - 1.0), R(-n - 0.999)]
    for p in pts:
        if core.neighborhood_contains(rs, A, 1, p) is core.Membership.INSIDE:
            assert succ.contains(p)


def test_check_axioms_zoo_and_broken():
    rep = core.check_axioms(zoo.sorgenfrey_rho_s(), 500, seed=1)
    assert rep.passed
    broken = core.QPSpace(zoo.REALS, lambda x, y: x.x - y.x, zoo.real_sampler(), "x-y")
    rep = core.check_axioms(broken, 200, seed=0)
    assert rep.negativity_failures or rep.triangle_failures


def test_rho_upper_separation_witness():
    rep = core.check_axioms(zoo.rho_upper(), 200, seed=0, require_separation=True)
    assert rep.separation_failures
    x, y = rep.separation_failures[0]
    assert x != y and core.dist(zoo.rho_upper(), x, y) == 0


@settings(max_examples=200, deadline=None)
@given(finite_reals, finite_reals)
def test_involution_and_symmetrize_properties(a, b):
    for s in (zoo.sorgenfrey_rho_s(), zoo.dplus_n(), zoo.rho_zero()):
        x, y = R(a), R(b)
        assert core.dist(core.conjugate(core.conjugate(s)), x, y) == core.dist(s, x, y)
        m = core.symmetrize(s)
        assert core.dist(m, x, y) == core.dist(m, y, x)
        assert core.dist(m, x, y) >= max(core.dist(s, x, y), core.dist(s, y, x))


@settings(max_examples=200, deadline=None)
@given(finite_reals, finite_reals, st.floats(0.01, 100))
def test_truncate_properties(a, b, c):
    s = zoo.rho_zero()
    t = core.truncate(s, c)
    v, w = core.dist(t, R(a), R(b)), core.dist(s, R(a), R(b))
    assert v <= c
    if w < c:
        assert v == w


@settings(max_examples=200, deadline=None)
@given(finite_reals, finite_reals, st.floats(1e-6, 50), st.floats(1e-6, 50))
def test_ball_monotone(a, b, r1, r2):
    s = zoo.sorgenfrey_rho_l()
    lo, hi = sorted((r1, r2))
    if core.ball_contains(s, R(a), lo, R(b)):
        assert core.ball_contains(s, R(a), hi, R(b))


@settings(max_examples=100, deadline=None)
@given(st.floats(-50, 50), st.floats(0.1, 20), st.floats(1e-3, 5), finite_reals)
def test_neighbourhood_one_sided_soundness(lo, width, delta, x):
    """If some sampled member is within delta, the verdict is never OUTSIDE;
    with a closed form the two characterizations agree."""
    s = zoo.sorgenfrey_rho_s()
    A = core.real_set(Interval.closed(lo, lo + width))
    verdict = core.neighborhood_contains(s, A, delta, R(x))
    members = A.sample(64, 0)
    if any(core.dist(s, a, R(x)) < delta for a in members):
        assert verdict is core.Membership.INSIDE
    exact = core.set_dist_from(s, A, R(x)).value < delta
    assert (verdict is core.Membership.INSIDE) == exact


def test_ball_refinement_is_only_evidence():
    ev = core.ball_refinement_evidence(zoo.euclid_line(), zoo.euclid_line_1())
    assert ev["kind"] == "evidence" and ev["consistent"]
