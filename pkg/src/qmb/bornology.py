"""Bornologies with countable monotone bases.

Bases are lazy sequences of set descriptors.  Everything that would need a
universal quantifier over the carrier (boundedness, the no-maximal-set
hypothesis, the properness criterion) is decided from seeded samples with
explicit budgets, and the answers say so.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import geometry as geo
from .core import (
    EMPTY,
    DEFAULT_SET_SAMPLES,
    Membership,
    QPSpace,
    SetDescriptor,
    _value,
    ball,
    make_rng,
    neighborhood_contains,
    union_of,
)
from .errors import BandAssignmentError, MaximalSetOrBudget, NoUniformDelta
from .geometry import Inclusion

DEFAULT_DELTA_GRID = tuple(2.0 ** -k for k in range(0, 11))


def set_inclusion(a: SetDescriptor, b: SetDescriptor, samples: int = 256,
                  seed=0) -> Inclusion:
    """Decide ``a ⊆ b``: exactly from shapes or member lists, else by sampling.

    A sampled verdict of SUBSET is only evidence; NOT_SUBSET always comes
    with a real member of ``a`` outside ``b``.
    """
    exact = geo.compare(a.shape, b.shape)
    if exact is not None:
        return exact
    if a.is_empty:
        return Inclusion.SUBSET if b.is_empty else Inclusion.STRICT_SUBSET
    if a.members is not None:
        if not all(b.contains(p) for p in a.members):
            return Inclusion.NOT_SUBSET
        if b.members is not None:
            return (Inclusion.SUBSET if all(a.contains(p) for p in b.members)
                    else Inclusion.STRICT_SUBSET)
    else:
        pts = a.sample(samples, seed)
        if not pts:
            return Inclusion.UNKNOWN
        if not all(b.contains(p) for p in pts):
            return Inclusion.NOT_SUBSET
    pts = b.members if b.members is not None else b.sample(samples, seed)
    if pts and not all(a.contains(p) for p in pts):
        return Inclusion.STRICT_SUBSET
    return Inclusion.SUBSET if pts else Inclusion.UNKNOWN


@dataclass(eq=False)
class BaseSequence:
    """A lazy, cached sequence ``at(0), at(1), ...`` of set descriptors.

    ``length`` is set for finite prefixes.  ``source`` records, for a refined
    sequence, which index of the parent each output came from.
    """

    at_fn: Callable[[int], SetDescriptor]
    label: str = "base"
    length: int | None = None
    inclusion_fn: Callable[[int, int], Inclusion] | None = None
    source: tuple | None = None
    _cache: dict = field(default_factory=dict, repr=False)
    _lock: Any = field(default_factory=threading.Lock, repr=False)

    def at(self, n: int) -> SetDescriptor:
        if n < 0 or (self.length is not None and n >= self.length):
            raise IndexError(f"{self.label}: index {n} out of range")
        with self._lock:
            d = self._cache.get(n)
        if d is None:
            d = self.at_fn(n)
            with self._lock:
                d = self._cache.setdefault(n, d)
        return d

    def __getitem__(self, n: int) -> SetDescriptor:
        return self.at(n)

    def has(self, n: int) -> bool:
        return n >= 0 and (self.length is None or n < self.length)

    def inclusion(self, i: int, j: int) -> Inclusion:
        if self.inclusion_fn is not None:
            return self.inclusion_fn(i, j)
        return set_inclusion(self.at(i), self.at(j))

    def __repr__(self):
        return f"BaseSequence({self.label!r})"


def base_from_sets(sets: Sequence[SetDescriptor], label="finite base") -> BaseSequence:
    sets = list(sets)
    return BaseSequence(lambda n: sets[n], label, length=len(sets))


def cumulative(base: BaseSequence) -> BaseSequence:
    """Normalize to a monotone base: ``at(n) <- at(0) ∪ ... ∪ at(n)``."""

    def at(n):
        acc = base.at(0)
        for m in range(1, n + 1):
            acc = union_of(acc, base.at(m))
        return acc

    return BaseSequence(at, f"cumulative({base.label})", base.length)


def empty_start(base: BaseSequence) -> BaseSequence:
    """``base`` itself if ``at(0)`` is empty, else ``∅, at(0), at(1), ...``."""
    if base.at(0).is_empty:
        return base
    n = None if base.length is None else base.length + 1
    return BaseSequence(lambda k: EMPTY if k == 0 else base.at(k - 1),
                        f"∅,{base.label}", n)


@dataclass(eq=False)
class Bornology:
    base: BaseSequence
    label: str = ""

    def index_of(self, x, budget: int = 1 << 20) -> int | None:
        """Least ``n`` with ``x`` in ``at(n)`` (galloping search, monotone base)."""
        return first_index(self.base, lambda d: d.contains(x), budget)

    def member_index(self, A: SetDescriptor, budget: int = 64) -> int | None:
        """Least ``n <= budget`` with ``A ⊆ at(n)``, witnessing membership."""
        for n in range(budget + 1):
            if not self.base.has(n):
                return None
            if set_inclusion(A, self.base.at(n)).holds:
                return n
        return None

    def covers(self, points: Sequence, budget: int = 1 << 20) -> list:
        """Sampled points that lie in no base set within the budget."""
        return [p for p in points if self.index_of(p, budget) is None]


def first_index(base: BaseSequence, pred: Callable[[SetDescriptor], bool], budget: int,
                start: int = 0) -> int | None:
    """Least ``n >= start`` with ``pred(at(n))``, assuming ``pred`` is monotone in n.

    Gallops over 1, 2, 4, ... then bisects, so a point in band ``n`` costs
    ``O(log n)`` base evaluations instead of a linear scan.
    """
    if not base.has(start):
        return None
    if pred(base.at(start)):
        return start
    lo, step = start, 1
    hi = None
    while True:
        cand = start + step
        if cand > budget or not base.has(cand):
            cand = budget if base.length is None else min(budget, base.length - 1)
            if cand <= lo or not pred(base.at(cand)):
                return None
            hi = cand
            break
        if pred(base.at(cand)):
            hi = cand
            break
        lo = cand
        step *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(base.at(mid)):
            hi = mid
        else:
            lo = mid
    return hi


def metric_bornology(space: QPSpace, x0) -> Bornology:
    space.carrier.check(x0)
    base = BaseSequence(lambda n: ball(space, x0, n + 1.0),
                        f"B({space.label}; {x0!r}, n+1)")

    def inclusion(i, j):
        # balls about one centre are nested by radius, but may coincide
        if i == j:
            return Inclusion.SUBSET
        got = set_inclusion(base.at(i), base.at(j))
        if i < j and got in (Inclusion.UNKNOWN, Inclusion.NOT_SUBSET):
            return Inclusion.SUBSET
        return got

    base.inclusion_fn = inclusion
    return Bornology(base, f"B_{space.label}")


# -- boundedness ------------------------------------------------------------


@dataclass(frozen=True)
class BoundedWitness:
    center: Any
    radius: float
    sup: float
    samples: int
    kind: str = "bounded"


@dataclass(frozen=True)
class EscapeWitness:
    """For every tested centre, a member at distance >= ``radius``."""
    centers: tuple
    points: tuple
    distances: tuple
    radius: float
    kind: str = "escape"


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    kind: str = "inconclusive"


def _radius_ladder(budget: float) -> list[float]:
    rs, r = [], 1.0
    while r < budget:
        rs.append(r)
        r *= 2.0
    rs.append(float(budget))
    return rs


def is_d_bounded(space: QPSpace, A: SetDescriptor, sample_budget: int = 2000,
                 radius_budget: float = 2.0 ** 20, centers: Sequence | None = None,
                 seed=0):
    """Three-valued boundedness of ``A`` under ``space``.

    Every tested centre is tried against the radius ladder ``1, 2, 4, ...,
    radius_budget`` on the sampled members.  The smallest passing radius
    over all centres gives a bounded witness.  If instead every centre has
    a sampled member at distance at least ``radius_budget``, those members
    form an escape witness.
    """
    if A.is_empty:
        return Inconclusive("empty set")
    if A.members is not None:
        pts = list(A.members)
    else:
        pts = list(dict.fromkeys(A.sample(sample_budget, seed)))
    if not pts:
        return Inconclusive("no members could be sampled")
    if centers is None:
        centers = list(A.anchors) if A.anchors else pts[:16]
    centers = [c for c in centers]
    if not centers:
        return Inconclusive("no centres")
    ladder = _radius_ladder(radius_budget)
    best = None
    escapes = []
    for c in centers:
        space.carrier.check(c)
        ds = [_value(space, c, p) for p in pts]
        k = max(range(len(ds)), key=ds.__getitem__)
        sup = ds[k]
        r = next((r for r in ladder if sup < r), None)
        if r is not None and (best is None or r < best.radius):
            best = BoundedWitness(c, r, sup, len(pts))
        if sup >= radius_budget:
            escapes.append((c, pts[k], sup))
    if best is not None:
        return best
    if len(escapes) == len(centers):
        return EscapeWitness(tuple(e[0] for e in escapes), tuple(e[1] for e in escapes),
                             tuple(e[2] for e in escapes), float(radius_budget))
    return Inconclusive("sampled sup exceeds the ladder for some centres only")


# -- refinement -------------------------------------------------------------


def _finish(base: BaseSequence, picks: list[int], label: str, inclusion=None) -> BaseSequence:
    picks = tuple(picks)

    def inc(i, j):
        return base.inclusion(picks[i], picks[j])

    return BaseSequence(lambda m: base.at(picks[m]), label, length=len(picks),
                        inclusion_fn=inclusion or inc, source=picks)


def refine_base(base: BaseSequence, max_index: int = 64) -> BaseSequence:
    """Strictly increasing refinement by the minimum-index rule.

    ``A_0 = C_0`` and ``n_{m+1} = min{n : A_m ∪ C_{m+1} ⊂ C_n}`` with strict
    inclusion.  On a monotone input the union is ``C_max(n_m, m+1)``.  The
    search stops at the first step where no index up to ``max_index``
    qualifies; fewer than two outputs means a maximal set or too small a
    budget.
    """
    picks = [0]
    m = 0
    while base.has(m + 1) and m + 1 <= max_index:
        u = max(picks[-1], m + 1)
        found = None
        for n in range(u + 1, max_index + 1):
            if not base.has(n):
                break
            if base.inclusion(u, n) is Inclusion.STRICT_SUBSET:
                found = n
                break
        if found is None:
            break
        picks.append(found)
        m += 1
    if len(picks) < 2:
        raise MaximalSetOrBudget(
            f"{base.label}: no strict superset of at(0) within index {max_index}")
    return _finish(base, picks, f"refine({base.label})")


def _probes(space: QPSpace, A: SetDescriptor, rng, n: int, delta: float) -> list:
    """Carrier samples together with points just around members of ``A``."""
    pts = space.sampler(rng, n // 2)
    members = list(A.members) if A.members is not None else A.cached_sample(64, 0)
    if A.anchors:
        members = list(A.anchors) + members
    if space.points is not None:
        return list(space.points)
    if members and space.neighbor is not None:
        for _ in range(n - len(pts)):
            a = members[int(rng.integers(0, len(members)))]
            pts.append(space.neighbor(rng, a, delta * float(2.0 ** rng.uniform(-8, 1))))
    return pts


def neighborhood_violation(space: QPSpace, A: SetDescriptor, delta: float,
                           B: SetDescriptor, probes: Sequence,
                           set_samples: int = DEFAULT_SET_SAMPLES):
    """A probe in ``[A]^delta`` but outside ``B``, or None."""
    for x in probes:
        if B.contains(x):
            continue
        if neighborhood_contains(space, A, delta, x, set_samples) is Membership.INSIDE:
            return x
    return None


def _greedy_uniform(space, base, delta, max_index, probes_n, seed, min_terms=2):
    rng = make_rng(seed)
    picks = [0]
    m = 0
    while True:
        nxt = m + 1
        if nxt > max_index or not base.has(nxt):
            return picks, None
        cur = picks[-1]
        A = base.at(cur)
        probes = _probes(space, A, rng, probes_n, delta)
        found, witness = None, None
        for n in range(cur + 1, max_index + 1):
            if not base.has(n):
                break
            if not base.inclusion(nxt, n).holds:
                continue
            w = neighborhood_violation(space, A, delta, base.at(n), probes)
            if w is None:
                found = n
                break
            witness = witness or (n, w)
        if found is None:
            return picks, witness
        picks.append(found)
        m += 1


def refine_base_uniform(space: QPSpace, base: BaseSequence,
                        delta_grid: Sequence[float] = DEFAULT_DELTA_GRID,
                        max_index: int = 32, samples: int = 400, seed=0):
    """Subsequence with ``[out(m)]^delta ⊆ out(m+1)`` on samples, for one delta.

    The selection rule mirrors :func:`refine_base`:
    ``n_{m+1} = min{n > n_m : C_{m+1} ⊆ C_n and [C_{n_m}]^delta ⊆ C_n}``.
    Deltas are tried largest first; the first that yields a chain of at
    least two sets is returned with it.
    """
    grid = sorted(set(delta_grid), reverse=True)
    if not grid:
        raise ValueError("delta grid is empty")
    last = None
    for delta in grid:
        picks, witness = _greedy_uniform(space, base, delta, max_index, samples, seed)
        if len(picks) >= 2:
            return _finish(base, picks, f"refine_δ({base.label})"), delta
        last = (delta, witness)
    raise NoUniformDelta(f"{base.label}: no delta in the grid works "
                         f"(smallest {last[0]:g}, witness {last[1]!r})")


# -- properness -------------------------------------------------------------


@dataclass(frozen=True)
class ProperPass:
    deltas: dict
    kind: str = "pass"


@dataclass(frozen=True)
class ProperCounterexample:
    n: int
    point: Any
    delta: float
    kind: str = "counterexample"


def properness_check(space: QPSpace, bornology: Bornology,
                     delta_grid: Sequence[float] = DEFAULT_DELTA_GRID,
                     samples: int = 400, seed=0, indices: int = 6,
                     set_samples: int = DEFAULT_SET_SAMPLES):
    """For ``n < indices`` find delta with ``[at(n)]^delta ⊆ at(n+1)`` on samples.

    Neighbourhoods shrink with delta, so a probe that defeats the grid's
    smallest delta defeats all of them; that probe is the counterexample.
    Otherwise the largest passing delta is recorded for each n.
    """
    grid = sorted(set(delta_grid))
    rng = make_rng(seed)
    base = bornology.base
    deltas = {}
    for n in range(indices):
        if not base.has(n + 1):
            break
        A, B = base.at(n), base.at(n + 1)
        if A.is_empty:
            deltas[n] = grid[-1]
            continue
        probes = _probes(space, A, rng, samples, grid[0])
        w = neighborhood_violation(space, A, grid[0], B, probes, set_samples)
        if w is not None:
            return ProperCounterexample(n, w, grid[0])
        ok = grid[0]
        for d in grid[1:]:
            wide = probes + _probes(space, A, rng, samples // 4, d)
            if neighborhood_violation(space, A, d, B, wide, set_samples) is not None:
                break
            ok = d
        deltas[n] = ok
    return ProperPass(deltas)


def replay_counterexample(space: QPSpace, bornology: Bornology, n: int, point,
                          delta: float) -> bool:
    """True iff ``point`` is in ``[at(n)]^delta`` and outside ``at(n+1)``."""
    base = bornology.base
    return (not base.at(n + 1).contains(point)
            and neighborhood_contains(space, base.at(n), delta, point) is Membership.INSIDE)


# -- band assignment --------------------------------------------------------


def band_index(base: BaseSequence, x, budget: int, start: int = 1) -> int:
    """Least ``n >= start`` with ``x`` in ``at(n)``; raises beyond ``budget``."""
    n = first_index(base, lambda d: d.contains(x), budget, start)
    if n is None:
        raise BandAssignmentError(f"{x!r} lies in no set of {base.label} up to index {budget}")
    return n


def finite(x) -> bool:
    return isinstance(x, (int, float)) and math.isfinite(x)
