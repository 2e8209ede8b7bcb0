"""Quasi-pseudometric spaces, set descriptors and the operations on them."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Any, Callable, NamedTuple, Sequence

import numpy as np

from . import geometry as geo
from .errors import CarrierMismatch, ContractViolation, EmptySetError
from .points import Real

DEFAULT_TOL = 1e-9

Sampler = Callable[[np.random.Generator, int], list]
Neighbor = Callable[[np.random.Generator, Any, float], Any]
# (shape, x, from_set) -> inf over the shape of d(a, x) if from_set else d(x, a)
SetOracle = Callable[[Any, Any, bool], "float | None"]


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


@dataclass(frozen=True)
class Carrier:
    name: str
    accepts: Callable[[Any], bool]

    def check(self, p) -> None:
        if not self.accepts(p):
            raise CarrierMismatch(f"{p!r} is not a point of carrier {self.name!r}")


@dataclass(frozen=True, eq=False)
class QPSpace:
    """A carrier with a total distance function and a seeded sampler.

    ``quasi_metric`` declares that ``d(x, y) = 0`` forces ``x = y``;
    ``symmetric`` declares ``d(x, y) = d(y, x)``; ``bound`` is a declared
    upper bound on all distances.  ``set_oracle``, ``neighbor`` and
    ``points`` are optional accelerators: closed-form set distances, a
    sampler of nearby points and a full enumeration of a finite carrier.
    """

    carrier: Carrier
    dist_fn: Callable[[Any, Any], float]
    sampler: Sampler
    label: str
    quasi_metric: bool = True
    symmetric: bool = False
    bound: float | None = None
    set_oracle: SetOracle | None = None
    neighbor: Neighbor | None = None
    points: tuple | None = None

    def __call__(self, x, y) -> float:
        return dist(self, x, y)

    def sample(self, n: int, seed=0) -> list:
        return self.sampler(make_rng(seed), n)

    def __repr__(self):
        return f"QPSpace({self.label!r})"


def _value(space: QPSpace, x, y) -> float:
    v = space.dist_fn(x, y)
    if not isinstance(v, (int, float)) or not math.isfinite(v):
        raise ContractViolation(f"{space.label}: d({x!r}, {y!r}) = {v!r}")
    return float(v)


def dist(space: QPSpace, x, y) -> float:
    space.carrier.check(x)
    space.carrier.check(y)
    v = _value(space, x, y)
    if v < 0:
        raise ContractViolation(f"{space.label}: d({x!r}, {y!r}) = {v!r} < 0")
    return v


def conjugate(space: QPSpace) -> QPSpace:
    f = space.dist_fn
    oracle = None
    if space.set_oracle is not None:
        inner = space.set_oracle
        oracle = lambda shape, x, from_set: inner(shape, x, not from_set)
    return replace(space, dist_fn=lambda x, y: f(y, x), label=space.label + "⁻¹",
                   set_oracle=oracle)


def symmetrize(space: QPSpace) -> QPSpace:
    f = space.dist_fn
    return replace(space, dist_fn=lambda x, y: max(f(x, y), f(y, x)),
                   label=f"max({space.label}, {space.label}⁻¹)", symmetric=True,
                   set_oracle=space.set_oracle if space.symmetric else None)


def truncate(space: QPSpace, cap: float) -> QPSpace:
    if not cap > 0:
        raise ValueError(f"truncation cap must be positive, got {cap}")
    f = space.dist_fn
    oracle = None
    if space.set_oracle is not None:
        inner = space.set_oracle

        def capped(shape, x, from_set):
            v = inner(shape, x, from_set)
            return None if v is None else min(v, cap)

        oracle = capped

    bound = cap if space.bound is None else min(cap, space.bound)
    return replace(space, dist_fn=lambda x, y: min(f(x, y), cap),
                   label=f"min({space.label}, {cap:g})", bound=bound,
                   set_oracle=oracle)


def ball_contains(space: QPSpace, center, radius: float, y) -> bool:
    if not radius > 0:
        raise ValueError("ball radius must be positive")
    return dist(space, center, y) < radius


# -- sets -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SetDescriptor:
    """A subset of a carrier.

    ``dist_from`` / ``dist_to`` are optional closed forms of
    ``inf_a d(a, x)`` and ``inf_a d(x, a)``, valid for ``oracle_for``
    (or any space when ``oracle_for`` is None).  ``members`` lists a finite
    set exhaustively; ``shape`` is a :mod:`qmb.geometry` description the
    ambient space may know closed forms for.
    """

    contains: Callable[[Any], bool]
    sampler: Sampler | None = None
    label: str = ""
    shape: Any = None
    members: tuple | None = None
    dist_from: Callable[[Any], float] | None = None
    dist_to: Callable[[Any], float] | None = None
    oracle_for: QPSpace | None = None
    is_empty: bool = False
    # small, "central" members used as default centres for boundedness tests
    anchors: tuple | None = None
    _memo: dict = field(default_factory=dict, repr=False)

    def sample(self, n: int, seed=0) -> list:
        if self.sampler is None:
            return []
        return self.sampler(make_rng(seed), n)

    def cached_sample(self, n: int, seed=0) -> list:
        """Like :meth:`sample` for integer seeds, memoized per descriptor."""
        key = (n, seed)
        pts = self._memo.get(key)
        if pts is None:
            pts = self.sample(n, seed)
            self._memo[key] = pts
        return pts

    def __repr__(self):
        return f"SetDescriptor({self.label!r})"


EMPTY = SetDescriptor(contains=lambda p: False, label="∅", shape=geo.Nothing(),
                      members=(), is_empty=True,
                      sampler=lambda rng, n: [])


def finite_set(points: Sequence, label: str | None = None) -> SetDescriptor:
    members = tuple(dict.fromkeys(points))
    if not members:
        return EMPTY
    ms = frozenset(members)

    def sampler(rng, n):
        idx = rng.integers(0, len(members), size=n)
        return [members[i] for i in idx]

    return SetDescriptor(contains=ms.__contains__, sampler=sampler,
                         label=label or f"finite[{len(members)}]",
                         shape=geo.FiniteSet(members), members=members)


def _interval_draws(rng, iv: geo.Interval, n: int) -> np.ndarray:
    lo, hi = iv.lo, iv.hi
    if math.isinf(lo) and math.isinf(hi):
        u = rng.random(n)
        wide = rng.uniform(-1e4, 1e4, n)
        far = np.sign(rng.random(n) - 0.5) * 10.0 ** rng.uniform(-3, 7, n)
        return np.where(u < 0.5, wide, far)
    if math.isinf(lo) or math.isinf(hi):
        end = hi if math.isinf(lo) else lo
        sign = -1.0 if math.isinf(lo) else 1.0
        off = 10.0 ** rng.uniform(-4, 7, n)
        off[rng.random(n) < 0.1] = 0.0
        return end + sign * off
    if lo == hi:
        return np.full(n, lo)
    base = rng.uniform(lo, hi, n)
    u = rng.random(n)
    width = hi - lo
    near_lo = lo + width * 2.0 ** rng.uniform(-20, 0, n) * 0.5
    near_hi = hi - width * 2.0 ** rng.uniform(-20, 0, n) * 0.5
    out = np.where(u < 0.2, near_lo, np.where(u < 0.4, near_hi, base))
    out[u > 0.95] = lo
    out[(u > 0.9) & (u <= 0.95)] = hi
    return out


def realset_sampler(rs: geo.RealSet) -> Sampler:
    ivs = rs.intervals

    def sampler(rng, n):
        if not ivs:
            return []
        out = []
        tries = 0
        while len(out) < n and tries < 50:
            which = rng.integers(0, len(ivs), size=n)
            for k, iv in enumerate(ivs):
                m = int(np.sum(which == k))
                if m:
                    for v in _interval_draws(rng, iv, m):
                        v = float(v)
                        if iv.contains(v) and math.isfinite(v):
                            out.append(Real(v))
            tries += 1
        return out[:n]

    return sampler


def _realset_anchors(rs: geo.RealSet) -> tuple:
    cand = [0.0, 1.0, -1.0, 10.0, -10.0, 100.0, -100.0]
    for iv in rs.intervals:
        for end, step in ((iv.lo, 1.0), (iv.hi, -1.0)):
            if math.isfinite(end):
                cand += [end, end + step * 1e-9 * max(1.0, abs(end)), end + step,
                         end + 10 * step, end + 100 * step]
        if math.isfinite(iv.lo) and math.isfinite(iv.hi):
            cand.append(0.5 * (iv.lo + iv.hi))
    return tuple(dict.fromkeys(Real(float(c)) for c in cand if rs.contains(Real(float(c)))))


def real_set(*intervals: geo.Interval, label: str | None = None) -> SetDescriptor:
    rs = geo.RealSet(intervals)
    if rs.is_empty:
        return EMPTY
    return SetDescriptor(contains=rs.contains, sampler=realset_sampler(rs),
                         label=label or str(rs), shape=rs,
                         anchors=_realset_anchors(rs) or None)


def from_shape(shape, sampler: Sampler | None, label: str) -> SetDescriptor:
    return SetDescriptor(contains=shape.contains, sampler=sampler, label=label,
                         shape=shape, is_empty=bool(shape.is_empty))


def everything(space: QPSpace) -> SetDescriptor:
    return SetDescriptor(contains=space.carrier.accepts, sampler=space.sampler,
                         label=space.carrier.name, shape=geo.Everything(),
                         members=space.points)


def _filtered_sampler(space: QPSpace, pred: Callable[[Any], bool],
                      seeds: Callable[[], list] | None = None) -> Sampler:
    def sampler(rng, n):
        out: list = []
        for _ in range(20):
            cand = space.sampler(rng, 2 * n)
            if seeds is not None and space.neighbor is not None:
                anchors = seeds()
                if anchors:
                    for _ in range(n):
                        a = anchors[int(rng.integers(0, len(anchors)))]
                        cand.append(space.neighbor(rng, a, 2.0 ** rng.uniform(-12, 3)))
            out.extend(p for p in cand if pred(p))
            if len(out) >= n:
                break
        if not out:
            return []
        if len(out) < n:
            idx = rng.integers(0, len(out), size=n - len(out))
            out.extend(out[i] for i in idx)
        return out[:n]

    return sampler


def ball(space: QPSpace, center, radius: float) -> SetDescriptor:
    space.carrier.check(center)
    if not radius > 0:
        raise ValueError("ball radius must be positive")
    pred = lambda y: _value(space, center, y) < radius
    members = None
    if space.points is not None:
        members = tuple(p for p in space.points if pred(p))
    return SetDescriptor(contains=pred,
                         sampler=_filtered_sampler(space, pred, lambda: [center]),
                         label=f"B({space.label}; {center!r}, {radius:g})",
                         shape=geo.Ball(center, radius), members=members)


def union_of(a: SetDescriptor, b: SetDescriptor) -> SetDescriptor:
    if a.is_empty:
        return b
    if b.is_empty:
        return a
    shape = geo.union(a.shape, b.shape)
    members = None
    if a.members is not None and b.members is not None:
        members = tuple(dict.fromkeys(a.members + b.members))

    def sampler(rng, n):
        k = int(rng.integers(0, n + 1))
        return a.sample(k, rng) + b.sample(n - k, rng)

    return SetDescriptor(contains=lambda p: a.contains(p) or b.contains(p),
                         sampler=sampler, label=f"{a.label} ∪ {b.label}",
                         shape=shape, members=members)


class SetDistance(NamedTuple):
    value: float
    exact: bool
    samples: int = 0


DEFAULT_SET_SAMPLES = 512


def _set_dist(space, A: SetDescriptor, x, from_set: bool, samples, seed) -> SetDistance:
    if A.is_empty:
        raise EmptySetError(f"set distance to the empty set {A.label!r}")
    space.carrier.check(x)
    if A.contains(x):
        return SetDistance(0.0, True)
    explicit = A.dist_from if from_set else A.dist_to
    if explicit is not None and (A.oracle_for is None or A.oracle_for is space):
        return SetDistance(float(explicit(x)), True)
    if A.members is not None:
        if from_set:
            v = min(_value(space, a, x) for a in A.members)
        else:
            v = min(_value(space, x, a) for a in A.members)
        return SetDistance(v, True)
    if space.set_oracle is not None and A.shape is not None:
        v = space.set_oracle(A.shape, x, from_set)
        if v is not None:
            return SetDistance(float(v), True)
    pts = A.cached_sample(samples, seed)
    if not pts:
        raise EmptySetError(f"no members could be sampled from {A.label!r}")
    if from_set:
        v = min(_value(space, a, x) for a in pts)
    else:
        v = min(_value(space, x, a) for a in pts)
    return SetDistance(v, False, len(pts))


def set_dist_from(space: QPSpace, A: SetDescriptor, x, samples=DEFAULT_SET_SAMPLES,
                  seed=0) -> SetDistance:
    """``inf_{a in A} d(a, x)``; sampled values are upper bounds (``exact=False``)."""
    return _set_dist(space, A, x, True, samples, seed)


def set_dist_to(space: QPSpace, x, A: SetDescriptor, samples=DEFAULT_SET_SAMPLES,
                seed=0) -> SetDistance:
    """``inf_{a in A} d(x, a)``; sampled values are upper bounds (``exact=False``)."""
    return _set_dist(space, A, x, False, samples, seed)


class Membership(enum.Enum):
    INSIDE = "definite-in"
    OUTSIDE = "definite-out"
    UNKNOWN = "unknown"

    def __bool__(self):
        return self is Membership.INSIDE


def neighborhood_contains(space: QPSpace, A: SetDescriptor, delta: float, x,
                          samples=DEFAULT_SET_SAMPLES, seed=0) -> Membership:
    """Whether ``x`` lies in the union of the radius-``delta`` balls around ``A``."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    if A.is_empty:
        return Membership.OUTSIDE
    sd = set_dist_from(space, A, x, samples, seed)
    if sd.value < delta:
        return Membership.INSIDE
    return Membership.OUTSIDE if sd.exact else Membership.UNKNOWN


def neighborhood(space: QPSpace, A: SetDescriptor, delta: float) -> SetDescriptor:
    """``[A]^delta`` as a set descriptor; sampled membership counts as outside."""
    if A.is_empty:
        return EMPTY
    pred = lambda x: neighborhood_contains(space, A, delta, x) is Membership.INSIDE
    members = None
    if space.points is not None:
        members = tuple(p for p in space.points if pred(p))
    anchors = lambda: A.cached_sample(16, 0)
    return SetDescriptor(contains=pred, sampler=_filtered_sampler(space, pred, anchors),
                         label=f"[{A.label}]^{delta:g}", members=members)


# -- sampling helpers -------------------------------------------------------


def _near_scale(rng) -> float:
    return float(2.0 ** rng.uniform(-16, 2))


def sample_pairs(space: QPSpace, rng, n: int, near: float = 0.5) -> list[tuple]:
    xs = space.sampler(rng, n)
    ys = space.sampler(rng, n)
    if space.neighbor is not None:
        for i in range(n):
            if rng.random() < near:
                ys[i] = space.neighbor(rng, xs[i], _near_scale(rng))
    return list(zip(xs, ys))


def sample_triples(space: QPSpace, rng, n: int) -> list[tuple]:
    xs = space.sampler(rng, n)
    ys = space.sampler(rng, n)
    zs = space.sampler(rng, n)
    nb = space.neighbor
    for i in range(n):
        u = rng.random()
        if nb is not None and u < 0.3:
            ys[i] = nb(rng, xs[i], _near_scale(rng))
        u = rng.random()
        if nb is not None and u < 0.25:
            zs[i] = nb(rng, xs[i], _near_scale(rng))
        elif nb is not None and u < 0.5:
            zs[i] = nb(rng, ys[i], _near_scale(rng))
        elif u < 0.55:
            zs[i] = xs[i]
    return list(zip(xs, ys, zs))


# -- axioms -----------------------------------------------------------------


@dataclass
class AxiomReport:
    label: str
    checked: int
    pairs_checked: int = 0
    reflexivity_failures: list = field(default_factory=list)
    triangle_failures: list = field(default_factory=list)
    separation_failures: list = field(default_factory=list)
    negativity_failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.reflexivity_failures or self.triangle_failures
                    or self.separation_failures or self.negativity_failures)


def check_axioms(space: QPSpace, sample_count: int = 2000, seed=0,
                 tol: float = DEFAULT_TOL,
                 require_separation: bool | None = None) -> AxiomReport:
    """Test reflexivity exactly, the triangle inequality within ``tol`` and,
    optionally, separation on seeded samples.  Failures are returned as
    witnesses; NaN or infinite distances raise :class:`ContractViolation`."""
    if sample_count <= 0:
        raise ValueError("sample_count must be positive")
    if require_separation is None:
        require_separation = space.quasi_metric
    rng = make_rng(seed)
    rep = AxiomReport(space.label, sample_count)
    triples = sample_triples(space, rng, sample_count)
    seen = set()
    for x, y, z in triples:
        for p in (x, y, z):
            if p not in seen:
                seen.add(p)
                v = _value(space, p, p)
                if v != 0.0:
                    rep.reflexivity_failures.append((p, v))
        dxy = _value(space, x, y)
        dxz = _value(space, x, z)
        dzy = _value(space, z, y)
        for (a, b), v in (((x, y), dxy), ((x, z), dxz), ((z, y), dzy)):
            if v < 0:
                rep.negativity_failures.append((a, b, v))
        if dxy > dxz + dzy + tol:
            rep.triangle_failures.append((x, y, z, dxy, dxz, dzy))
    if require_separation:
        pairs = 0
        for _ in range(10):
            for x, y in sample_pairs(space, rng, sample_count):
                if x == y:
                    continue
                pairs += 1
                v = _value(space, x, y)
                if v == 0.0:
                    rep.separation_failures.append((x, y))
                if pairs >= sample_count:
                    break
            if pairs >= sample_count:
                break
        rep.pairs_checked = pairs
    return rep


def ball_refinement_evidence(s0: QPSpace, s1: QPSpace, radii: Sequence[float] = (1.0, 0.5, 0.1),
                             grid: Sequence[float] | None = None, samples: int = 200,
                             seed=0) -> dict:
    """Sampled evidence that two distances induce the same topology.

    For sampled centres ``x`` and each radius ``r`` the grid is searched for
    ``r'`` with ``B_1(x, r') ⊆ B_0(x, r)`` (and the other way round) on
    sampled nearby points.  This is evidence only, never a proof.
    """
    grid = list(grid or [2.0 ** -k for k in range(0, 21)])
    rng = make_rng(seed)
    centers = s0.sampler(rng, samples)
    failures = []
    for x in centers:
        probes = [x]
        if s0.neighbor is not None:
            probes += [s0.neighbor(rng, x, _near_scale(rng)) for _ in range(32)]
        probes += s0.sampler(rng, 16)
        for r in radii:
            for a, b, name in ((s0, s1, "0<-1"), (s1, s0, "1<-0")):
                if not any(all(_value(a, x, y) < r for y in probes if _value(b, x, y) < rp)
                           for rp in grid):
                    failures.append((name, x, r))
    return {"kind": "evidence", "centers": len(centers), "failures": failures,
            "consistent": not failures}
