"""Carrier points.

Every space in the package works over one of a handful of point kinds.  They
are small frozen dataclasses so they hash, compare by value and can be used as
dictionary keys or set members.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union


@dataclass(frozen=True, slots=True)
class Real:
    x: float

    def __post_init__(self):
        if not math.isfinite(self.x):
            raise ValueError(f"real coordinate must be finite, got {self.x!r}")


@dataclass(frozen=True, slots=True)
class Nat:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"natural number must be >= 0, got {self.n}")


@dataclass(frozen=True, slots=True)
class Pair:
    first: Any
    second: Any


@dataclass(frozen=True, slots=True)
class Apex:
    """The common point of all spines of a hedgehog."""


@dataclass(frozen=True, slots=True)
class Spine:
    coord: float
    spine: int

    def __post_init__(self):
        if not math.isfinite(self.coord):
            raise ValueError("spine coordinate must be finite")
        if self.spine < 0:
            raise ValueError("spine index must be >= 0")


@dataclass(frozen=True, slots=True)
class Hand:
    x: float

    def __post_init__(self):
        if not math.isfinite(self.x):
            raise ValueError("hand coordinate must be finite")


@dataclass(frozen=True, slots=True)
class Tooth:
    q: Fraction
    y: float

    def __post_init__(self):
        if not isinstance(self.q, Fraction):
            object.__setattr__(self, "q", Fraction(self.q))
        if not math.isfinite(self.y):
            raise ValueError("tooth height must be finite")


@dataclass(frozen=True, slots=True)
class Node:
    index: int


Point = Union[Real, Nat, Pair, Apex, Spine, Hand, Tooth, Node]

APEX = Apex()


def comb_point(q, y: float) -> Hand | Tooth:
    """Point at height ``y`` on tooth ``q``; height 0 lies on the hand."""
    q = Fraction(q)
    if y == 0:
        return Hand(float(q))
    return Tooth(q, float(y))


def plane(x: float, y: float) -> Pair:
    return Pair(Real(float(x)), Real(float(y)))


def to_json(p: Point) -> Any:
    if isinstance(p, Real):
        return {"real": p.x}
    if isinstance(p, Nat):
        return {"nat": p.n}
    if isinstance(p, Pair):
        return {"pair": [to_json(p.first), to_json(p.second)]}
    if isinstance(p, Apex):
        return {"apex": True}
    if isinstance(p, Spine):
        return {"spine": p.spine, "coord": p.coord}
    if isinstance(p, Hand):
        return {"hand": p.x}
    if isinstance(p, Tooth):
        return {"tooth": f"{p.q.numerator}/{p.q.denominator}", "y": p.y}
    if isinstance(p, Node):
        return {"node": p.index}
    raise TypeError(f"not a point: {p!r}")


def from_json(obj: Any) -> Point:
    """Inverse of :func:`to_json`; bare numbers are read as reals."""
    if isinstance(obj, bool):
        raise ValueError(f"cannot decode point from {obj!r}")
    if isinstance(obj, (int, float)):
        return Real(float(obj))
    if not isinstance(obj, dict) or len(obj) == 0:
        raise ValueError(f"cannot decode point from {obj!r}")
    if "real" in obj:
        return Real(float(obj["real"]))
    if "nat" in obj:
        return Nat(int(obj["nat"]))
    if "pair" in obj:
        a, b = obj["pair"]
        return Pair(from_json(a), from_json(b))
    if "apex" in obj:
        return APEX
    if "spine" in obj:
        return Spine(float(obj["coord"]), int(obj["spine"]))
    if "hand" in obj:
        return Hand(float(obj["hand"]))
    if "tooth" in obj:
        return comb_point(Fraction(obj["tooth"]), float(obj["y"]))
    if "node" in obj:
        return Node(int(obj["node"]))
    raise ValueError(f"cannot decode point from {obj!r}")
