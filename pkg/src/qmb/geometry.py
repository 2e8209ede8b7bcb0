"""Closed-form set shapes used by set descriptors.

A shape is a pure description of a subset of some carrier (an interval union
on the line, an explicit finite set, a prefix of spines, ...).  Shapes know
their own membership and how they compare under inclusion; distances to them
are a property of the ambient space and live in :mod:`qmb.core`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .points import Apex, Hand, Pair, Real, Spine, Tooth

INF = math.inf


class Inclusion(enum.Enum):
    SUBSET = "subset"
    STRICT_SUBSET = "strictSubset"
    NOT_SUBSET = "notSubset"
    UNKNOWN = "unknown"

    @property
    def holds(self) -> bool:
        return self in (Inclusion.SUBSET, Inclusion.STRICT_SUBSET)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        # infinite endpoints are never attained
        if math.isinf(self.lo):
            object.__setattr__(self, "lo_closed", False)
        if math.isinf(self.hi):
            object.__setattr__(self, "hi_closed", False)

    @classmethod
    def closed(cls, lo, hi):
        return cls(lo, hi, True, True)

    @classmethod
    def open(cls, lo, hi):
        return cls(lo, hi, False, False)

    @property
    def is_empty(self) -> bool:
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and not (self.lo_closed and self.hi_closed)

    def contains(self, x: float) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def contains_zero(self) -> bool:
        return self.contains(0.0)

    def within(self, other: Interval) -> bool:
        lo_ok = other.lo < self.lo or (
            other.lo == self.lo and (other.lo_closed or not self.lo_closed))
        hi_ok = other.hi > self.hi or (
            other.hi == self.hi and (other.hi_closed or not self.hi_closed))
        return lo_ok and hi_ok

    def __str__(self):
        lb = "[" if self.lo_closed else "("
        rb = "]" if self.hi_closed else ")"
        return f"{lb}{self.lo:g},{self.hi:g}{rb}"


def _merge(intervals: Iterable[Interval]) -> tuple[Interval, ...]:
    items = sorted((i for i in intervals if not i.is_empty),
                   key=lambda i: (i.lo, not i.lo_closed))
    out: list[Interval] = []
    for iv in items:
        if out:
            last = out[-1]
            touching = iv.lo < last.hi or (
                iv.lo == last.hi and (last.hi_closed or iv.lo_closed))
            if touching:
                if iv.hi > last.hi:
                    hi, hic = iv.hi, iv.hi_closed
                elif iv.hi == last.hi:
                    hi, hic = last.hi, last.hi_closed or iv.hi_closed
                else:
                    hi, hic = last.hi, last.hi_closed
                out[-1] = Interval(last.lo, hi, last.lo_closed, hic)
                continue
        out.append(iv)
    return tuple(out)


@dataclass(frozen=True)
class RealSet:
    """Finite union of intervals, kept merged and sorted."""

    intervals: tuple[Interval, ...]

    def __init__(self, intervals: Iterable[Interval]):
        object.__setattr__(self, "intervals", _merge(intervals))

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def contains(self, p) -> bool:
        if not isinstance(p, Real):
            return False
        return any(iv.contains(p.x) for iv in self.intervals)

    def union(self, other: RealSet) -> RealSet:
        return RealSet(self.intervals + other.intervals)

    def complement(self) -> RealSet:
        gaps = []
        lo, lo_closed = -INF, False
        for iv in self.intervals:
            gaps.append(Interval(lo, iv.lo, lo_closed, not iv.lo_closed))
            lo, lo_closed = iv.hi, not iv.hi_closed
        gaps.append(Interval(lo, INF, lo_closed, False))
        return RealSet(gaps)

    def within(self, other: RealSet) -> bool:
        return all(any(iv.within(jv) for jv in other.intervals)
                   for iv in self.intervals)

    @property
    def sup(self) -> float:
        return self.intervals[-1].hi if self.intervals else -INF

    @property
    def inf(self) -> float:
        return self.intervals[0].lo if self.intervals else INF

    def __str__(self):
        if not self.intervals:
            return "{}"
        return " u ".join(str(i) for i in self.intervals)


@dataclass(frozen=True)
class FiniteSet:
    points: frozenset

    def __init__(self, points: Iterable):
        object.__setattr__(self, "points", frozenset(points))

    @property
    def is_empty(self) -> bool:
        return not self.points

    def contains(self, p) -> bool:
        return p in self.points


@dataclass(frozen=True)
class SpineSet:
    """Apex together with spines ``0 .. count-1`` of a hedgehog."""

    count: int
    total: int | None = None

    @property
    def is_empty(self) -> bool:
        return False

    def effective(self) -> float:
        return self.count if self.total is None else min(self.count, self.total)

    def contains(self, p) -> bool:
        if isinstance(p, Apex):
            return True
        return isinstance(p, Spine) and p.spine < self.count


def earring_index(p) -> int | None:
    """Index ``m`` of the earring circle through ``p`` (0 for the origin)."""
    if not isinstance(p, Pair):
        return None
    x, y = p.first.x, p.second.x
    r2 = x * x + y * y
    if r2 == 0.0:
        return 0
    if x <= 0.0:
        return None
    m = 2.0 * x / r2
    k = round(m)
    if k < 1 or abs(m - k) > 1e-6 * max(1.0, m):
        return None
    return int(k)


@dataclass(frozen=True)
class CircleUnion:
    """Union of the earring circles ``H_1 .. H_count``."""

    count: int

    @property
    def is_empty(self) -> bool:
        return self.count < 1

    def contains(self, p) -> bool:
        if self.count < 1:
            return False
        k = earring_index(p)
        return k is not None and k <= self.count


@dataclass(frozen=True)
class TeethSet:
    """Hand of the comb together with its first ``count`` teeth."""

    count: int

    @property
    def is_empty(self) -> bool:
        return False

    def contains(self, p) -> bool:
        if isinstance(p, Hand):
            return True
        if not isinstance(p, Tooth):
            return False
        r = tooth_rank(p.q, limit=self.count)
        return r is not None and r < self.count


@dataclass(frozen=True)
class Ball:
    center: object
    radius: float


@dataclass(frozen=True)
class Everything:
    @property
    def is_empty(self) -> bool:
        return False


@dataclass(frozen=True)
class Nothing:
    @property
    def is_empty(self) -> bool:
        return True

    def contains(self, p) -> bool:
        return False


_COUNTED = (SpineSet, CircleUnion, TeethSet)


def compare(a, b) -> Inclusion | None:
    """Exact inclusion of shape ``a`` in shape ``b``, or None if undecidable here."""
    if a is None or b is None:
        return None
    if isinstance(a, Nothing) or getattr(a, "is_empty", False) is True:
        b_empty = isinstance(b, Nothing) or getattr(b, "is_empty", False) is True
        return Inclusion.SUBSET if b_empty else Inclusion.STRICT_SUBSET
    if isinstance(b, Nothing):
        return Inclusion.NOT_SUBSET
    if isinstance(b, Everything):
        return Inclusion.SUBSET if isinstance(a, Everything) else None
    if isinstance(a, RealSet) and isinstance(b, RealSet):
        if not a.within(b):
            return Inclusion.NOT_SUBSET
        return Inclusion.SUBSET if b.within(a) else Inclusion.STRICT_SUBSET
    if isinstance(a, FiniteSet) and isinstance(b, FiniteSet):
        if not a.points <= b.points:
            return Inclusion.NOT_SUBSET
        return Inclusion.SUBSET if a.points == b.points else Inclusion.STRICT_SUBSET
    if isinstance(a, SpineSet) and isinstance(b, SpineSet):
        ea, eb = a.effective(), b.effective()
        if ea > eb:
            return Inclusion.NOT_SUBSET
        return Inclusion.SUBSET if ea == eb else Inclusion.STRICT_SUBSET
    if isinstance(a, _COUNTED) and type(a) is type(b):
        if a.count > b.count:
            return Inclusion.NOT_SUBSET
        return Inclusion.SUBSET if a.count == b.count else Inclusion.STRICT_SUBSET
    return None


def union(a, b):
    """Closed-form union of two shapes of the same kind, else None."""
    if isinstance(a, Nothing):
        return b
    if isinstance(b, Nothing):
        return a
    if isinstance(a, RealSet) and isinstance(b, RealSet):
        return a.union(b)
    if isinstance(a, FiniteSet) and isinstance(b, FiniteSet):
        return FiniteSet(a.points | b.points)
    if isinstance(a, SpineSet) and isinstance(b, SpineSet):
        return SpineSet(max(a.count, b.count), a.total)
    if isinstance(a, _COUNTED) and type(a) is type(b):
        return type(a)(max(a.count, b.count))
    if isinstance(a, Everything) or isinstance(b, Everything):
        return Everything()
    return None


# -- rationals of [0, 1] in Stern-Brocot order --------------------------------


def tooth_rank(q: Fraction, limit: int | None = None) -> int | None:
    """Position of ``q`` in the enumeration 0, 1, 1/2, 1/3, 2/3, 1/4, 2/5, ...

    The enumeration lists Stern-Brocot levels left to right.  Returns None
    if ``q`` is not in [0, 1] or its rank is at least ``limit``.
    """
    q = Fraction(q)
    if q < 0 or q > 1:
        return None
    if q == 0:
        rank = 0
    elif q == 1:
        rank = 1
    else:
        max_depth = None if limit is None else max(1, limit.bit_length() + 1)
        ln, ld, rn, rd = 0, 1, 1, 1
        depth, pos = 1, 0
        while True:
            mn, md = ln + rn, ld + rd
            m = Fraction(mn, md)
            if q == m:
                break
            if max_depth is not None and depth >= max_depth:
                return None
            pos <<= 1
            if q < m:
                rn, rd = mn, md
            else:
                ln, ld = mn, md
                pos |= 1
            depth += 1
        rank = 1 + (1 << (depth - 1)) + pos
    if limit is not None and rank >= limit:
        return None
    return rank


def tooth_at(rank: int) -> Fraction:
    """Inverse of :func:`tooth_rank`."""
    if rank < 0:
        raise ValueError("rank must be >= 0")
    if rank < 2:
        return Fraction(rank)
    depth = (rank - 1).bit_length()
    pos = rank - 1 - (1 << (depth - 1))
    ln, ld, rn, rd = 0, 1, 1, 1
    for bit in range(depth - 2, -1, -1):
        mn, md = ln + rn, ld + rd
        if (pos >> bit) & 1:
            ln, ld = mn, md
        else:
            rn, rd = mn, md
    return Fraction(ln + rn, ld + rd)
