import math

import pytest
from hypothesis import given, settings, strategies as st

from qmb import bornology as born, core, zoo
from qmb.errors import MaximalSetOrBudget, NoUniformDelta
from qmb.geometry import Inclusion, Interval
from qmb.points import APEX, Nat, Real

R = Real


def ray_below(vals):
    return born.BaseSequence(lambda n: core.real_set(Interval(-math.inf, float(vals(n)))),
                             "rays")


def test_metric_bornology_examples():
    s = zoo.ex1_6_space()
    b = born.metric_bornology(s, Nat(0))
    assert all(b.base.at(1).contains(Nat(k)) for k in range(64))
    assert b.base.at(0).contains(Nat(0))
    dn = born.metric_bornology(zoo.euclid_line(), R(0.0))
    assert dn.base.at(2).contains(R(2.5))
    assert not dn.base.at(2).contains(R(3.5))
    assert not dn.base.at(2).contains(R(-3.0))


def test_metric_bornology_covers_by_ceiling():
    s = zoo.sorgenfrey_rho_l()
    b = born.metric_bornology(s, R(0.0))
    for p in s.sample(300, 4):
        k = math.ceil(core.dist(s, R(0.0), p))
        assert b.base.at(k).contains(p)
        assert b.index_of(p) <= k


def test_metric_bornology_equal_balls_not_strict():
    # every ball of radius >= 2 about 0 is all of omega, so no strict step exists
    b = born.metric_bornology(zoo.ex1_6_space(), Nat(0))
    assert b.base.inclusion(1, 2) is not Inclusion.STRICT_SUBSET


def test_is_d_bounded_ex16():
    s = zoo.ex1_6_space()
    w = born.is_d_bounded(s, zoo.omega(s))
    assert w.kind == "bounded" and w.center == Nat(0) and w.radius == 2
    w = born.is_d_bounded(core.conjugate(s), zoo.omega(s))
    assert w.kind == "escape"
    assert set(w.centers) == {Nat(k) for k in range(11)}
    assert all(v >= 2 ** 20 for v in w.distances)


def test_singleton_bounded_radius_one():
    for s, p in [(zoo.euclid_line(), R(3.0)), (zoo.ex1_6_space(), Nat(7)),
                 (zoo.hedgehog(zoo.unit_interval(), R(0.0)), APEX)]:
        w = born.is_d_bounded(s, core.finite_set([p]))
        assert w.kind == "bounded" and w.center == p and w.radius == 1


def test_bounded_and_escape_are_replayable():
    s = zoo.sorgenfrey_rho_s()
    up = core.real_set(Interval(0.0, math.inf, True))
    w = born.is_d_bounded(s, up)
    assert w.kind == "escape"
    for c, p, v in zip(w.centers, w.points, w.distances):
        assert core.dist(s, c, p) == v >= w.radius
    down = core.real_set(Interval(-math.inf, 0.0, False, True))
    w = born.is_d_bounded(s, down)
    assert w.kind == "bounded"
    assert all(core.dist(s, w.center, p) < w.radius for p in down.sample(500, 1))


def test_refine_base_hand_trace():
    vals = [0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6]
    base = born.BaseSequence(lambda n: core.real_set(Interval(-math.inf, float(vals[n]))),
                             "C", length=len(vals))
    out = born.refine_base(base, 13)
    his = [out.at(m).shape.intervals[0].hi for m in range(out.length)]
    assert his[:4] == [0.0, 1.0, 2.0, 3.0]
    assert list(out.source[:4]) == [0, 2, 4, 6]


def test_refine_base_strictly_increasing_input():
    # literal minimum-index rule: A_0 = C_0, A_1 = min{n : C_0 ∪ C_1 ⊊ C_n} = C_2, ...
    out = born.refine_base(ray_below(lambda n: n), 10)
    assert list(out.source) == [0, 2, 3, 4, 5, 6, 7, 8, 9, 10]


def test_refine_base_output_strict_and_dominating():
    vals = [0, 0, 0, 1, 3, 3, 4, 7, 7, 8, 9, 9, 12]
    base = born.BaseSequence(lambda n: core.real_set(Interval(-math.inf, float(vals[n]))),
                             "C", length=len(vals))
    out = born.refine_base(base, 12)
    for m in range(out.length - 1):
        assert out.inclusion(m, m + 1) is Inclusion.STRICT_SUBSET
        assert set(vals).issuperset({vals[out.source[m]]})
        assert vals[out.source[m]] >= vals[m]


def test_refine_base_constant_raises():
    with pytest.raises(MaximalSetOrBudget):
        born.refine_base(ray_below(lambda n: 0), 20)


def test_refine_base_uniform_identity_cases():
    out, delta = born.refine_base_uniform(zoo.sorgenfrey_rho_s(),
                                          zoo.lower_bounded_closed().base, max_index=8)
    assert delta == 1 and list(out.source) == list(range(len(out.source)))
    out, delta = born.refine_base_uniform(zoo.euclid_line(), zoo.symmetric_open().base,
                                          max_index=8)
    assert delta == 1 and list(out.source) == list(range(len(out.source)))


def test_refine_base_uniform_hedgehog_fails():
    with pytest.raises(NoUniformDelta):
        born.refine_base_uniform(zoo.get("hedgehog").space, zoo.spine_base().base,
                                 max_index=6, samples=200)


def test_properness_examples():
    r = born.properness_check(zoo.sorgenfrey_rho_s(), zoo.lower_bounded_closed())
    assert r.kind == "pass" and all(d == 1 for d in r.deltas.values())
    r = born.properness_check(zoo.euclid_line(), zoo.full_line())
    assert r.kind == "pass"


def test_properness_hawaiian_counterexample_near_origin():
    e = zoo.get("hawaiian")
    b = zoo.earring_base()
    r = born.properness_check(e.space, b)
    assert r.kind == "counterexample"
    assert born.replay_counterexample(e.space, b, r.n, r.point, r.delta)
    assert math.hypot(r.point.first.x, r.point.second.x) < 0.01


def test_first_index_matches_linear_scan():
    base = ray_below(lambda n: n * n)
    for x in [-5.0, 0.0, 0.5, 3.9, 4.0, 99.0, 10_000.5]:
        lin = next(n for n in range(1000) if base.at(n).contains(R(x)))
        assert born.first_index(base, lambda d: d.contains(R(x)), 1000) == lin


def test_band_index_budget():
    from qmb.errors import BandAssignmentError
    with pytest.raises(BandAssignmentError):
        born.band_index(ray_below(lambda n: n), R(1e9), budget=100)


def test_cumulative_normalizes():
    raw = born.base_from_sets([core.real_set(Interval.closed(k, k + 1.0)) for k in range(4)])
    cum = born.cumulative(raw)
    assert cum.at(3).contains(R(0.5)) and cum.at(3).contains(R(4.0))


def test_empty_start_shifts():
    b = born.empty_start(zoo.lower_bounded_closed().base)
    assert b.at(0).is_empty and b.at(1).contains(R(0.0))
    assert born.empty_start(zoo.symmetric_open().base) is not None


def test_symmetrized_ex16_matches_finite_bornology():
    s = zoo.ex1_6_space()
    m = core.symmetrize(s)
    for n in (0, 3, 8):
        assert born.is_d_bounded(m, zoo.nat_prefix(n)).kind == "bounded"
    assert born.is_d_bounded(m, zoo.omega(s), centers=[Nat(k) for k in range(11)]).kind \
        == "escape"


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=20))
def test_finite_sets_bounded_under_every_line_metric(xs):
    A = core.finite_set([R(x) for x in xs])
    for s in (zoo.euclid_line(), zoo.sorgenfrey_rho_s(), zoo.rho_zero()):
        w = born.is_d_bounded(s, A)
        assert w.kind == "bounded"
        assert all(core.dist(s, w.center, p) < w.radius for p in A.members)
