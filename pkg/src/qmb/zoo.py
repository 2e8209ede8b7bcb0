"""Catalog of the concrete spaces, quasi-metrics and bornologies.

Every entry carries closed-form set distances for its standard sets, a
sampler that puts weight on the formula breakpoints, and a short table of
the verdicts the source states about it.  Verdicts are phrased as harness
configs so they can be replayed mechanically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import geometry as geo
from .bornology import BaseSequence, Bornology
from .core import (
    Carrier,
    QPSpace,
    SetDescriptor,
    everything,
    finite_set,
    from_shape,
    real_set,
    truncate,
)
from .geometry import Interval, tooth_at
from .points import APEX, Apex, Hand, Nat, Pair, Real, Spine, Tooth, plane

INF = math.inf

# -- carriers ---------------------------------------------------------------


def _is_real(lo=-INF, hi=INF):
    return lambda p: isinstance(p, Real) and lo <= p.x <= hi


REALS = Carrier("R", _is_real())
UNIT = Carrier("[0,1]", _is_real(0.0, 1.0))
NATS = Carrier("omega", lambda p: isinstance(p, Nat))

# constants that appear in the formulas; witnesses tend to sit on them
_GRID = (0.0, 1.0, -1.0, 0.5, -0.5, 2.0, -2.0, 1.5, -1.5, 1e-9, -1e-9, 3.0, -3.0)


def real_sampler(lo: float = -1e4, hi: float = 1e4, grid=_GRID):
    grid = np.array([g for g in grid if lo <= g <= hi] or [lo])
    near_lo, near_hi = max(lo, -4.0), min(hi, 4.0)

    def sampler(rng, n):
        u = rng.random(n)
        wide = rng.uniform(lo, hi, n)
        near = rng.uniform(near_lo, near_hi, n)
        pick = grid[rng.integers(0, len(grid), n)]
        xs = np.where(u < 0.4, wide, np.where(u < 0.8, near, pick))
        return [Real(float(v)) for v in xs]

    return sampler


def real_neighbor(lo: float = -INF, hi: float = INF):
    def neighbor(rng, p, scale):
        x = p.x + scale * (1.0 if rng.random() < 0.5 else -1.0) * rng.uniform(0.05, 1.0)
        if x < lo:
            x = lo + (lo - x) if lo + (lo - x) <= hi else lo
        if x > hi:
            x = hi - (x - hi) if hi - (x - hi) >= lo else hi
        return Real(float(x))

    return neighbor


# -- translation-invariant distances on the line -----------------------------


def _line_inf(pos, neg, lo, hi, lo_closed, hi_closed) -> float:
    """inf of F over the interval of offsets (lo, hi); F = pos on t>=0, neg on t<0."""
    if lo < 0 < hi or (lo == 0 and lo_closed) or (hi == 0 and hi_closed):
        return 0.0
    if lo >= 0:
        return pos(lo)
    # entirely negative: neg is non-increasing, so the inf sits at the top end
    return neg(hi)


def line_oracle(pos, neg):
    def oracle(shape, x, from_set):
        if not isinstance(shape, geo.RealSet) or not isinstance(x, Real):
            return None
        best = INF
        for iv in shape.intervals:
            if from_set:
                # d(a, x) = F(x - a), offsets x - hi .. x - lo
                v = _line_inf(pos, neg, x.x - iv.hi, x.x - iv.lo, iv.hi_closed, iv.lo_closed)
            else:
                v = _line_inf(pos, neg, iv.lo - x.x, iv.hi - x.x, iv.lo_closed, iv.hi_closed)
            best = min(best, v)
        return best

    return oracle


def line_space(label: str, pos: Callable[[float], float], neg: Callable[[float], float],
               *, quasi_metric=True, symmetric=False, bound=None) -> QPSpace:
    """``d(a, b) = pos(b - a)`` if ``b >= a`` else ``neg(b - a)``.

    ``pos`` must be non-decreasing with ``pos(0) = 0`` and ``neg``
    non-increasing; ``neg(0)`` is read as the left limit at 0.
    """

    def dist(a, b):
        t = b.x - a.x
        return pos(t) if t >= 0 else neg(t)

    return QPSpace(REALS, dist, real_sampler(), label, quasi_metric=quasi_metric,
                   symmetric=symmetric, bound=bound, set_oracle=line_oracle(pos, neg),
                   neighbor=real_neighbor())


def euclid_line() -> QPSpace:
    return line_space("d_n", lambda t: t, lambda t: -t, symmetric=True)


def euclid_line_1() -> QPSpace:
    return line_space("d_n1", lambda t: min(t, 1.0), lambda t: min(-t, 1.0),
                      symmetric=True, bound=1.0)


def sorgenfrey_rho_s() -> QPSpace:
    return line_space("rho_S", lambda t: t, lambda t: 1.0)


def sorgenfrey_rho_l() -> QPSpace:
    return line_space("rho_L", lambda t: min(t, 1.0), lambda t: 1.0 - t)


def sorgenfrey_rho_s1() -> QPSpace:
    return line_space("rho_S1", lambda t: min(1.0, t), lambda t: 1.0, bound=1.0)


def rho_zero() -> QPSpace:
    return line_space("rho_0", lambda t: t, lambda t: 1.0 - t)


def rho_upper() -> QPSpace:
    return line_space("rho_u", lambda t: t, lambda t: 0.0, quasi_metric=False)


def rho_lower() -> QPSpace:
    return line_space("rho_l", lambda t: 0.0, lambda t: -t, quasi_metric=False)


def phi_plus(x: float) -> float:
    return math.exp(x) if x < 0 else 1.0 + x


def _phi_image(iv: Interval) -> Interval:
    lo = 0.0 if math.isinf(iv.lo) else phi_plus(iv.lo)
    hi = INF if math.isinf(iv.hi) else phi_plus(iv.hi)
    return Interval(lo, hi, iv.lo_closed, iv.hi_closed)


def _dplus_oracle(shape, x, from_set):
    if not isinstance(shape, geo.RealSet) or not isinstance(x, Real):
        return None
    v = phi_plus(x.x)
    best = INF
    for iv in shape.intervals:
        im = _phi_image(iv)
        if im.contains(v):
            return 0.0
        best = min(best, abs(v - im.lo) if v < im.lo else abs(v - im.hi))
    return best


def dplus_n() -> QPSpace:
    # exp underflows below about -745; keep samples where Phi stays injective
    return QPSpace(REALS, lambda a, b: abs(phi_plus(a.x) - phi_plus(b.x)),
                   real_sampler(-700.0, 1e4), "d+_n", symmetric=True,
                   set_oracle=_dplus_oracle, neighbor=real_neighbor())


def dplus_n1() -> QPSpace:
    s = truncate(dplus_n(), 1.0)
    return QPSpace(s.carrier, s.dist_fn, s.sampler, "d+_n1", symmetric=True, bound=1.0,
                   set_oracle=s.set_oracle, neighbor=s.neighbor)


def d_u() -> QPSpace:
    def dist(a, b):
        return min(abs(a.x - b.x), 1.0) + abs(max(b.x, 0.0) - max(a.x, 0.0))

    return QPSpace(REALS, dist, real_sampler(), "d_u", symmetric=True,
                   neighbor=real_neighbor())


# -- powers of two on omega ------------------------------------------------------------


def _nat_sampler(top: int, small: int = 10):
    def sampler(rng, n):
        u = rng.random(n)
        a = rng.integers(0, small + 1, n)
        b = rng.integers(0, top + 1, n)
        return [Nat(int(v)) for v in np.where(u < 0.5, a, b)]

    return sampler


def _nat_neighbor(top: int):
    def neighbor(rng, p, scale):
        k = int(rng.integers(-3, 4))
        return Nat(int(min(top, max(0, p.n + k))))

    return neighbor


def ex1_6_space() -> QPSpace:
    return QPSpace(NATS, lambda a, b: 0.0 if a.n == b.n else float(2.0 ** a.n),
                   _nat_sampler(64), "d_1.6", neighbor=_nat_neighbor(64))


def nat_prefix(n: int) -> SetDescriptor:
    return finite_set([Nat(k) for k in range(n + 1)], label=f"{{0..{n}}}")


def omega(space: QPSpace) -> SetDescriptor:
    full = everything(space)
    return SetDescriptor(contains=full.contains, sampler=full.sampler, label="omega",
                         shape=full.shape, anchors=tuple(Nat(k) for k in range(11)))


# -- hedgehogs --------------------------------------------------------------


def hedgehog(base: QPSpace, x0, spine_count: int | None = None,
             label: str | None = None) -> QPSpace:
    """Hedgehog over ``base`` with base point ``x0`` and ``spine_count`` spines
    (None for countably many).  Spine points never use ``x0`` as coordinate."""
    bd = base.dist_fn
    wrap = type(x0)
    x0c = x0.x

    def at(c):
        return wrap(c)

    def dist(a, b):
        if isinstance(a, Apex):
            return 0.0 if isinstance(b, Apex) else bd(x0, at(b.coord))
        if isinstance(b, Apex):
            return bd(at(a.coord), x0)
        if a.spine == b.spine:
            return bd(at(a.coord), at(b.coord))
        return bd(at(a.coord), x0) + bd(x0, at(b.coord))

    def accepts(p):
        if isinstance(p, Apex):
            return True
        return (isinstance(p, Spine) and p.coord != x0c
                and base.carrier.accepts(at(p.coord))
                and (spine_count is None or p.spine < spine_count))

    top = 10 ** 6 if spine_count is None else spine_count

    def spine_draw(rng):
        if rng.random() < 0.5:
            return int(rng.integers(0, min(5, top)))
        return int(rng.integers(0, top))

    def near_x0(rng, scale):
        if base.neighbor is None:
            return None
        for _ in range(8):
            c = base.neighbor(rng, x0, scale)
            if c.x != x0c:
                return c.x
        return None

    def sampler(rng, n):
        out = []
        coords = base.sampler(rng, 2 * n)
        k = 0
        while len(out) < n:
            u = rng.random()
            if u < 0.05:
                out.append(APEX)
                continue
            if u < 0.5:
                c = near_x0(rng, float(2.0 ** rng.uniform(-16, 0)))
            else:
                c = coords[k % len(coords)].x
                k += 1
            if c is None or c == x0c:
                continue
            out.append(Spine(c, spine_draw(rng)))
        return out

    def neighbor(rng, p, scale):
        if isinstance(p, Apex):
            c = near_x0(rng, scale)
            return APEX if c is None else Spine(c, spine_draw(rng))
        c = base.neighbor(rng, at(p.coord), scale) if base.neighbor else at(p.coord)
        return APEX if c.x == x0c else Spine(c.x, p.spine)

    def oracle(shape, x, from_set):
        if not isinstance(shape, geo.SpineSet):
            return None
        if shape.contains(x):
            return 0.0
        # outside the prefix the apex is the nearest member in both directions
        return dist(APEX, x) if from_set else dist(x, APEX)

    name = label or f"J({base.label}, {spine_count if spine_count else 'omega'})"
    return QPSpace(Carrier(name, accepts), dist, sampler, name,
                   quasi_metric=base.quasi_metric, symmetric=base.symmetric,
                   set_oracle=oracle, neighbor=neighbor)


def unit_interval() -> QPSpace:
    sp = line_space("d_e[0,1]", lambda t: t, lambda t: -t, symmetric=True)
    return QPSpace(UNIT, sp.dist_fn, real_sampler(0.0, 1.0, (0.0, 1.0, 0.5, 1e-9)),
                   "d_e[0,1]", symmetric=True, set_oracle=sp.set_oracle,
                   neighbor=real_neighbor(0.0, 1.0))


def circle() -> QPSpace:
    """Unit circle by angle in [-pi, pi), with the chord metric."""

    def dist(a, b):
        return abs(2.0 * math.sin((a.x - b.x) / 2.0))

    def sampler(rng, n):
        return [Real(float(v)) for v in rng.uniform(-math.pi, math.pi, n)]

    top = math.nextafter(math.pi, 0.0)
    return QPSpace(Carrier("S1", _is_real(-math.pi, top)), dist, sampler, "d_e(S1)",
                   symmetric=True, neighbor=real_neighbor(-math.pi, top))


def spine_base(count: int | None = None) -> Bornology:
    return Bornology(BaseSequence(
        lambda n: from_shape(geo.SpineSet(n, count), None, f"apex+{n} spines"),
        "finite spines"), "finite spines")


# -- Hawaiian earring -------------------------------------------------------


def _earring_accepts(p):
    return (isinstance(p, Pair) and isinstance(p.first, Real)
            and isinstance(p.second, Real) and geo.earring_index(p) is not None)


def _circle_point(m: int, theta: float) -> Pair:
    return plane((1.0 + math.cos(theta)) / m, math.sin(theta) / m)


def earring_dist(a, b) -> float:
    return math.hypot(a.first.x - b.first.x, a.second.x - b.second.x)


def _earring_oracle(shape, x, from_set):
    if not isinstance(shape, geo.CircleUnion) or shape.count < 1:
        return None
    px, py = x.first.x, x.second.x
    # origin lies on every circle, so it bounds the distance from above
    best = math.hypot(px, py)
    for m in range(1, shape.count + 1):
        r = 1.0 / m
        best = min(best, abs(math.hypot(px - r, py) - r))
    return best


def hawaiian() -> QPSpace:
    lim = math.pi - 0.01

    def draw_m(rng):
        if rng.random() < 0.3:
            return int(rng.integers(1, 6))
        return max(1, int(round(10.0 ** rng.uniform(0, 6))))

    def sampler(rng, n):
        out = []
        for _ in range(n):
            if rng.random() < 0.02:
                out.append(plane(0.0, 0.0))
            else:
                out.append(_circle_point(draw_m(rng), float(rng.uniform(-lim, lim))))
        return out

    def neighbor(rng, p, scale):
        m = geo.earring_index(p)
        if not m:
            return _circle_point(draw_m(rng), float(rng.uniform(-lim, lim)))
        cx = 1.0 / m
        theta = math.atan2(p.second.x, p.first.x - cx)
        theta += scale * m * (1 if rng.random() < 0.5 else -1) * rng.uniform(0.05, 1.0)
        return _circle_point(m, max(-lim, min(lim, theta)))

    return QPSpace(Carrier("H", _earring_accepts), earring_dist, sampler, "d_e(H)",
                   symmetric=True, set_oracle=_earring_oracle, neighbor=neighbor)


def earring_base() -> Bornology:
    return Bornology(BaseSequence(
        lambda n: from_shape(geo.CircleUnion(n), None, f"H_1..H_{n}"),
        "circles"), "B_H")


# -- two interleaved sequences ---------------------------------------------------

INDEX_CUTOFF = 64


def _val(p: Nat) -> float:
    return math.ldexp(1.0, -p.n)


def ex8_2_dist(a: Nat, b: Nat) -> float:
    if a.n == b.n:
        return 0.0
    if a.n % 2 == 1 and b.n % 2 == 0:
        return _val(b)
    return 1.0


def ex8_6_dist(a: Nat, b: Nat) -> float:
    if a.n == b.n:
        return 0.0
    if b.n % 2 == 1:
        return math.ldexp(1.0, b.n)
    if a.n % 2 == 0:
        return 1.0
    return _val(b)


def _ex8_space(dist, label, cutoff=INDEX_CUTOFF) -> QPSpace:
    pts = tuple(Nat(k) for k in range(cutoff + 1))
    carrier = Carrier(f"X[{cutoff}]", lambda p: isinstance(p, Nat) and p.n <= cutoff)

    def sampler(rng, n):
        return [pts[i] for i in rng.integers(0, len(pts), n)]

    return QPSpace(carrier, dist, sampler, label, points=pts,
                   neighbor=_nat_neighbor(cutoff))


def ex8_2_space(cutoff: int = INDEX_CUTOFF) -> QPSpace:
    return _ex8_space(ex8_2_dist, "d_8.2", cutoff)


def ex8_6_rho(cutoff: int = INDEX_CUTOFF) -> QPSpace:
    return _ex8_space(ex8_6_dist, "rho_8.6", cutoff)


def index_prefix_base(cutoff: int = INDEX_CUTOFF) -> BaseSequence:
    return BaseSequence(lambda n: nat_prefix(min(n, cutoff)), "indices <= n")


# -- comb -------------------------------------------------------------------


def _comb_accepts(p):
    if isinstance(p, Hand):
        return 0.0 <= p.x <= 1.0
    return isinstance(p, Tooth) and 0 <= p.q <= 1 and 0.0 < p.y <= 1.0


def comb_dist(a, b) -> float:
    if a == b:
        return 0.0
    if isinstance(a, Hand):
        if isinstance(b, Hand):
            return abs(a.x - b.x)
        return abs(a.x - float(b.q)) + b.y
    if isinstance(b, Hand):
        return a.y + abs(float(a.q) - b.x)
    if a.q == b.q:
        return abs(a.y - b.y)
    return a.y + float(abs(a.q - b.q)) + b.y


def comb_euclid_dist(a, b) -> float:
    ax, ay = (a.x, 0.0) if isinstance(a, Hand) else (float(a.q), a.y)
    bx, by = (b.x, 0.0) if isinstance(b, Hand) else (float(b.q), b.y)
    if isinstance(a, Tooth) and isinstance(b, Tooth) and a.q == b.q:
        return abs(a.y - b.y)
    return math.hypot(ax - bx, ay - by)


def _draw_rank(rng) -> int:
    if rng.random() < 0.5:
        return int(rng.integers(0, 8))
    return int(rng.integers(0, 4096))


def _draw_height(rng) -> float:
    if rng.random() < 0.5:
        return float(rng.uniform(1e-6, 1.0))
    return float(2.0 ** -rng.uniform(0, 20))


def _comb_sampler(rng, n):
    out = []
    for _ in range(n):
        u = rng.random()
        if u < 0.15:
            out.append(Hand(float(rng.uniform(0.0, 1.0))))
        elif u < 0.25:
            out.append(Hand(float(tooth_at(_draw_rank(rng)))))
        else:
            out.append(Tooth(tooth_at(_draw_rank(rng)), _draw_height(rng)))
    return out


def _comb_neighbor(rng, p, scale):
    step = scale * (1 if rng.random() < 0.5 else -1) * rng.uniform(0.05, 1.0)
    if isinstance(p, Hand):
        if rng.random() < 0.3:
            # climb a tooth standing near this hand point
            q = tooth_at(_draw_rank(rng))
            return Tooth(q, min(1.0, abs(step))) if abs(float(q) - p.x) < scale else p
        return Hand(min(1.0, max(0.0, p.x + step)))
    y = p.y + step
    if y <= 0.0:
        return Hand(float(p.q))
    return Tooth(p.q, min(1.0, y))


def _teeth_oracle(euclid: bool):
    def oracle(shape, x, from_set):
        if not isinstance(shape, geo.TeethSet):
            return None
        if shape.contains(x):
            return 0.0
        # x is a tooth point beyond the prefix; the hand point below it is
        # nearest in the comb metric, and in the plane a nearby tooth can win
        best = x.y
        if euclid:
            for r in range(shape.count):
                best = min(best, abs(float(tooth_at(r)) - float(x.q)))
        return best

    return oracle


def comb() -> QPSpace:
    return QPSpace(Carrier("comb", _comb_accepts), comb_dist, _comb_sampler, "rho_comb",
                   symmetric=True, set_oracle=_teeth_oracle(False), neighbor=_comb_neighbor)


def comb_euclid() -> QPSpace:
    return QPSpace(Carrier("comb", _comb_accepts), comb_euclid_dist, _comb_sampler,
                   "d_e(comb)", symmetric=True, set_oracle=_teeth_oracle(True),
                   neighbor=_comb_neighbor)


def teeth_base() -> Bornology:
    return Bornology(BaseSequence(
        lambda n: from_shape(geo.TeethSet(n), None, f"hand+{n} teeth"),
        "finite teeth"), "finite teeth")


# -- standard bornologies on the line ---------------------------------------


def _line_base(make, label) -> Bornology:
    return Bornology(BaseSequence(lambda n: make(float(n)), label), label)


def upper_bounded() -> Bornology:
    return _line_base(lambda n: real_set(Interval(-INF, n)), "UB: (-inf,n)")


def lower_bounded() -> Bornology:
    return _line_base(lambda n: real_set(Interval(-n, INF)), "LB: (-n,inf)")


def lower_bounded_closed() -> Bornology:
    return _line_base(lambda n: real_set(Interval(-n, INF, True)), "LB: [-n,inf)")


def compact_bounded() -> Bornology:
    return _line_base(lambda n: real_set(Interval.closed(-n, n)), "CB: [-n,n]")


def symmetric_open() -> Bornology:
    return _line_base(lambda n: real_set(Interval.open(-n, n)), "(-n,n)")


def full_line() -> Bornology:
    return _line_base(lambda n: real_set(Interval(-INF, INF)), "P(R)")


def is_finite_set(A: SetDescriptor) -> bool:
    """Membership in FB: only explicitly finite descriptors qualify."""
    return A.members is not None


# -- catalog ----------------------------------------------------------------


@dataclass(frozen=True)
class BoundednessClaim:
    """``make(space)`` is stated bounded or unbounded under ``transform(space)``."""
    name: str
    make: Callable[[QPSpace], SetDescriptor]
    expected: str                    # "bounded" | "unbounded"
    transform: str = "id"            # "id" | "conjugate" | "symmetrize"
    centers: tuple | None = None


@dataclass(frozen=True)
class Verdict:
    claim: str
    suite: str
    expected: str                    # "pass" | "fail"
    params: dict = field(default_factory=dict)
    source: str = ""


@dataclass(eq=False)
class ZooEntry:
    id: str
    space: QPSpace
    notes: str
    bornologies: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)
    claims: list = field(default_factory=list)
    base_point: Any = None
    pseudometric: bool = False
    conjugate_of: str | None = None
    attributes: dict = field(default_factory=dict)


def _ray_up(a):
    return lambda s: real_set(Interval(a, INF, True))


def _ray_down(a):
    return lambda s: real_set(Interval(-INF, a, False, True))


def _line_claims(up: str, down: str, transform="id") -> list:
    return [
        BoundednessClaim(f"[0,inf) {up}", _ray_up(0.0), up, transform),
        BoundednessClaim(f"(-inf,0] {down}", _ray_down(0.0), down, transform),
        BoundednessClaim("[-3,5] bounded", lambda s: real_set(Interval.closed(-3.0, 5.0)),
                         "bounded", transform),
    ]


def _build() -> dict:
    e: dict[str, ZooEntry] = {}

    def add(entry):
        e[entry.id] = entry

    s = ex1_6_space()
    add(ZooEntry(
        "ex1_6", s, "d(x,y) = 2^x for x != y on omega",
        base_point=Nat(0),
        bornologies={"balls": lambda: _ball_base(s, Nat(0)), "prefixes": lambda: Bornology(
            BaseSequence(nat_prefix, "{0..n}"), "FB(omega)")},
        claims=[
            BoundednessClaim("omega d-bounded", omega, "bounded",
                             centers=tuple(Nat(k) for k in range(11))),
            BoundednessClaim("omega conjugate-unbounded", omega, "unbounded", "conjugate",
                             centers=tuple(Nat(k) for k in range(11))),
            BoundednessClaim("omega max-unbounded", omega, "unbounded", "symmetrize",
                             centers=tuple(Nat(k) for k in range(11))),
            BoundednessClaim("{0..5} max-bounded", lambda s: nat_prefix(5), "bounded",
                             "symmetrize"),
        ],
        verdicts=[Verdict("omega is d-bounded and d^-1-unbounded; B_max = FB", "bornology",
                          "pass", {}, "catalogue")]))

    add(ZooEntry(
        "sorgenfrey_rho_s", sorgenfrey_rho_s(),
        "rho_S(x,y) = y-x for x <= y, 1 otherwise",
        base_point=Real(0.0),
        bornologies={"UB": upper_bounded, "LB": lower_bounded,
                     "LB_closed": lower_bounded_closed},
        claims=_line_claims("unbounded", "bounded")
        + _line_claims("bounded", "unbounded", "conjugate"),
        verdicts=[
            Verdict("B_rho_S = UB and B_rho_S^-1 = LB", "bornology", "pass", {}, "catalogue"),
            Verdict("LB with base [-n,inf) is proper with delta = 1", "properness", "pass",
                    {"base": "LB_closed"}, "catalogue"),
        ]))

    add(ZooEntry(
        "sorgenfrey_rho_l", sorgenfrey_rho_l(),
        "rho_L(x,y) = min(y-x,1) for x <= y, 1+x-y otherwise",
        base_point=Real(0.0), bornologies={"LB": lower_bounded, "UB": upper_bounded},
        claims=_line_claims("bounded", "unbounded"),
        verdicts=[Verdict("rho_L induces LB", "bornology", "pass", {}, "catalogue")]))

    add(ZooEntry(
        "sorgenfrey_rho_s1", sorgenfrey_rho_s1(),
        "rho_S1(x,y) = min(1, y-x) for x <= y, 1 otherwise",
        base_point=Real(0.0), bornologies={"full": full_line},
        claims=_line_claims("bounded", "bounded"),
        verdicts=[Verdict("every set is rho_S1-bounded", "bornology", "pass", {},
                          "catalogue")]))

    add(ZooEntry("rho_zero", rho_zero(),
                 "rho_0(x,y) = y-x for x <= y, 1+x-y otherwise",
                 base_point=Real(0.0), bornologies={"CB": compact_bounded}))

    add(ZooEntry("rho_upper", rho_upper(), "rho_u(x,y) = max(y-x, 0)",
                 base_point=Real(0.0), pseudometric=True, conjugate_of="rho_lower",
                 verdicts=[Verdict("rho_u^-1 = rho_l", "conjugation", "pass",
                                   {"partner": "rho_lower", "symmetrizeMatches": "d_n"},
                                   "catalogue")]))
    add(ZooEntry("rho_lower", rho_lower(), "rho_l(x,y) = max(x-y, 0)",
                 base_point=Real(0.0), pseudometric=True, conjugate_of="rho_upper"))

    add(ZooEntry("d_n", euclid_line(), "the natural metric |x-y|",
                 base_point=Real(0.0),
                 bornologies={"CB": compact_bounded, "open": symmetric_open},
                 claims=_line_claims("unbounded", "unbounded")))
    add(ZooEntry("d_n1", euclid_line_1(), "d_n1 = min(d_n, 1)",
                 base_point=Real(0.0), bornologies={"full": full_line},
                 claims=_line_claims("bounded", "bounded")))
    add(ZooEntry(
        "dplus_n", dplus_n(), "d+_n(x,y) = |Phi(x)-Phi(y)|",
        base_point=Real(0.0), bornologies={"UB": upper_bounded},
        claims=_line_claims("unbounded", "bounded"),
        verdicts=[
            Verdict("d_n and d+_n are not uniformly equivalent", "uniform-equivalence",
                    "fail", {"other": "d_n"}, "catalogue"),
            Verdict("B_d+_n = UB", "bornology", "pass", {}, "catalogue"),
        ]))
    add(ZooEntry("dplus_n1", dplus_n1(), "d+_n1 = min(d+_n, 1)",
                 base_point=Real(0.0), bornologies={"full": full_line},
                 claims=_line_claims("bounded", "bounded")))
    add(ZooEntry("d_u", d_u(),
                 "d_u(x,y) = d_n1(x,y) + |max(y,0) - max(x,0)|",
                 base_point=Real(0.0), bornologies={"UB": upper_bounded},
                 claims=_line_claims("unbounded", "bounded")))

    hh = hedgehog(unit_interval(), Real(0.0), None, "J([0,1], omega)")
    add(ZooEntry(
        "hedgehog", hh, "hedgehog of countably many unit intervals",
        base_point=APEX, bornologies={"finite_spines": spine_base},
        verdicts=[Verdict("finite-spine bornology is not proper", "properness", "fail",
                          {"base": "finite_spines"}, "catalogue")]))
    add(ZooEntry("hedgehog_sorgenfrey", hedgehog(sorgenfrey_rho_s(), Real(0.0), None,
                                                 "J(rho_S, omega)"),
                 "hedgehog of Sorgenfrey lines", base_point=APEX,
                 bornologies={"finite_spines": spine_base}))
    add(ZooEntry("wedge_circles", hedgehog(circle(), Real(0.0), None, "J(S1, omega)"),
                 "wedge of countably many circles", base_point=APEX,
                 bornologies={"finite_spines": spine_base}))
    add(ZooEntry(
        "hawaiian", hawaiian(), "Hawaiian earring with d_e",
        base_point=plane(0.0, 0.0), bornologies={"earring": earring_base},
        attributes={"compact": True},
        verdicts=[Verdict("earring bornology is not proper", "properness", "fail",
                          {"base": "earring"}, "catalogue")]))

    d82 = ex8_2_space()
    add(ZooEntry("ex8_2", d82, "X = X1 u X2 indexed by n, point 2^-n",
                 base_point=Nat(0), bornologies={"prefixes": lambda: Bornology(
                     index_prefix_base(), "indices <= n")}))
    add(ZooEntry(
        "ex8_6", ex8_6_rho(), "rho locally identical with the d of ex8_2",
        base_point=Nat(0),
        verdicts=[Verdict("rho and d are uniformly locally identical", "locally-identical",
                          "pass", {"other": "ex8_2"}, "catalogue")]))

    add(ZooEntry(
        "comb", comb(), "comb over the rationals of [0,1]",
        base_point=Hand(0.0), bornologies={"finite_teeth": teeth_base},
        verdicts=[Verdict("finitely-many-teeth bornology is not proper", "properness",
                          "fail", {"base": "finite_teeth"}, "catalogue")]))
    add(ZooEntry("comb_euclid", comb_euclid(), "comb with the plane metric",
                 base_point=Hand(0.0), bornologies={"finite_teeth": teeth_base}))
    return e


def _ball_base(space, x0):
    from .bornology import metric_bornology

    return metric_bornology(space, x0)


_CATALOG: dict | None = None


def catalog() -> dict:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build()
    return _CATALOG


def get(zoo_id: str) -> ZooEntry:
    cat = catalog()
    if zoo_id not in cat:
        raise KeyError(f"unknown zoo id {zoo_id!r}")
    return cat[zoo_id]


def ids() -> list[str]:
    return sorted(catalog())
