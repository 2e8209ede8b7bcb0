"""Finite ground truth: min-plus closure of small weighted digraphs and
exhaustive reference versions of the core operations."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bornology, core
from .errors import EmptySetError
from .points import Node

MAX_NODES = 64
UNREACHABLE_CAP = 2.0 ** 16


def _check_square(w: np.ndarray):
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ValueError("weight matrix must be square")
    if w.shape[0] > MAX_NODES:
        raise ValueError(f"at most {MAX_NODES} nodes")


@dataclass(frozen=True, eq=False)
class WeightedDigraph:
    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        _check_square(w)
        if np.isnan(w).any() or (w < 0).any():
            raise ValueError("weights must be nonnegative")
        if (np.diag(w) != 0).any():
            raise ValueError("diagonal must be zero")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def size(self) -> int:
        return self.weights.shape[0]


@dataclass(frozen=True, eq=False)
class FiniteQPSpace:
    d: np.ndarray
    capped: bool = False

    def __post_init__(self):
        d = np.array(self.d, dtype=float)
        _check_square(d)
        if not np.isfinite(d).all() or (d < 0).any() or (np.diag(d) != 0).any():
            raise ValueError("not a finite quasi-pseudometric matrix")
        d.setflags(write=False)
        object.__setattr__(self, "d", d)

    @property
    def size(self) -> int:
        return self.d.shape[0]


def closure(g: WeightedDigraph, cap: float = UNREACHABLE_CAP) -> FiniteQPSpace:
    """All-pairs shortest paths, then ``min(., cap)``.

    Floyd-Warshall passes repeat until nothing changes, so the float result
    satisfies the triangle inequality with zero tolerance.  Truncating at
    ``cap`` keeps the axioms and makes unreachable pairs finite.
    """
    d = np.array(g.weights, dtype=float)
    n = d.shape[0]
    while True:
        before = d.copy()
        for k in range(n):
            np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :], out=d)
        if np.array_equal(before, d):
            break
    capped = bool((d > cap).any())
    return FiniteQPSpace(np.minimum(d, cap), capped)


def triangle_violations(space: FiniteQPSpace, tol: float = 0.0) -> list:
    d = space.d
    lhs = d[:, None, :]                      # d[i, j] at [i, k, j]
    rhs = d[:, :, None] + d[None, :, :]      # d[i, k] + d[k, j]
    bad = np.argwhere(lhs > rhs + tol)
    return [tuple(int(v) for v in b) for b in bad]


def _idx(space: FiniteQPSpace, i: int):
    if not 0 <= i < space.size:
        raise IndexError(f"node {i} out of range")


def brute_ball(space: FiniteQPSpace, i: int, r: float) -> frozenset:
    _idx(space, i)
    if not r > 0:
        raise ValueError("radius must be positive")
    return frozenset(j for j in range(space.size) if space.d[i, j] < r)


def brute_set_dist(space: FiniteQPSpace, A, j: int) -> float:
    """``min_{a in A} d(a, j)``."""
    _idx(space, j)
    if not A:
        raise EmptySetError("empty set")
    return float(min(space.d[a, j] for a in A))


def brute_set_dist_to(space: FiniteQPSpace, j: int, A) -> float:
    """``min_{a in A} d(j, a)``."""
    _idx(space, j)
    if not A:
        raise EmptySetError("empty set")
    return float(min(space.d[j, a] for a in A))


def brute_neighborhood(space: FiniteQPSpace, A, delta: float) -> frozenset:
    """Union of the balls of radius ``delta`` about members of ``A``."""
    out = set()
    for a in A:
        out |= brute_ball(space, a, delta)
    return frozenset(out)


def random_digraph(size: int, density: float, seed=0) -> WeightedDigraph:
    """Each off-diagonal edge present with probability ``density``, weight
    uniform on (0, 10]; absent edges are +inf."""
    if not 0 <= size <= MAX_NODES:
        raise ValueError(f"size must be in [0, {MAX_NODES}]")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be in [0, 1]")
    rng = np.random.default_rng(seed)
    w = 10.0 - rng.uniform(0.0, 10.0, (size, size))
    present = rng.random((size, size)) < density
    w = np.where(present, w, math.inf)
    np.fill_diagonal(w, 0.0)
    return WeightedDigraph(w)


def to_text(w: np.ndarray) -> str:
    m = np.asarray(w, dtype=float)
    rows = [" ".join("inf" if math.isinf(v) else repr(float(v)) for v in row) for row in m]
    return "\n".join([str(m.shape[0])] + rows) + "\n"


def from_text(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    n = int(lines[0])
    rows = [[float(tok) for tok in ln.split()] for ln in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected {n} rows of {n} entries")
    return np.array(rows, dtype=float).reshape(n, n)


def as_qpspace(space: FiniteQPSpace, label: str = "finite") -> core.QPSpace:
    n = space.size
    d = space.d
    nodes = tuple(Node(i) for i in range(n))
    carrier = core.Carrier(f"nodes[{n}]",
                           lambda p: isinstance(p, Node) and 0 <= p.index < n)

    def sampler(rng, k):
        return [nodes[i] for i in rng.integers(0, n, k)] if n else []

    def neighbor(rng, p, scale):
        return nodes[int(rng.integers(0, n))]

    sym = bool(np.array_equal(d, d.T))
    return core.QPSpace(carrier, lambda a, b: float(d[a.index, b.index]), sampler, label,
                        quasi_metric=bool(np.all((d > 0) | np.eye(n, dtype=bool))),
                        symmetric=sym, neighbor=neighbor, points=nodes)


def cross_check(space: FiniteQPSpace, seed=0, subsets: int = 8) -> dict:
    """Compare library operations with brute force, exhaustively over the carrier.

    Returns counts and a list of disagreements (empty when all agree).
    """
    n = space.size
    qp = as_qpspace(space)
    rng = np.random.default_rng(seed)
    nodes = qp.points
    bad: list = []
    checks = 0

    for i in range(n):
        for j in range(n):
            checks += 1
            if core.dist(qp, nodes[i], nodes[j]) != space.d[i, j]:
                bad.append(("dist", i, j))

    vals = np.unique(space.d)
    radii = sorted({float(v) for v in vals if v > 0} | {float(v) + 0.5 for v in vals})
    for i in range(n):
        for r in radii:
            ball = brute_ball(space, i, r)
            for j in range(n):
                checks += 1
                if core.ball_contains(qp, nodes[i], r, nodes[j]) != (j in ball):
                    bad.append(("ball", i, r, j))

    deltas = radii[:6] + radii[-2:]
    for _ in range(subsets):
        k = int(rng.integers(1, n + 1)) if n else 0
        A = sorted(int(a) for a in rng.choice(n, size=k, replace=False)) if k else []
        if not A:
            continue
        desc = core.finite_set([nodes[a] for a in A])
        for j in range(n):
            checks += 2
            if core.set_dist_from(qp, desc, nodes[j]).value != brute_set_dist(space, A, j):
                bad.append(("set_dist_from", tuple(A), j))
            if core.set_dist_to(qp, nodes[j], desc).value != brute_set_dist_to(space, j, A):
                bad.append(("set_dist_to", j, tuple(A)))
        for dl in deltas:
            nb = brute_neighborhood(space, A, dl)
            for j in range(n):
                checks += 1
                lib = core.neighborhood_contains(qp, desc, dl, nodes[j])
                if (lib is core.Membership.INSIDE) != (j in nb):
                    bad.append(("neighborhood", tuple(A), dl, j))
        # boundedness: every finite set is bounded; compare minimal ladder radius
        checks += 1
        w = bornology.is_d_bounded(qp, desc, centers=list(desc.members))
        sups = [max(space.d[c, a] for a in A) for c in A]
        ladder = bornology._radius_ladder(2.0 ** 20)
        expect = min(next(r for r in ladder if s < r) for s in sups)
        if not isinstance(w, bornology.BoundedWitness) or w.radius != expect:
            bad.append(("is_d_bounded", tuple(A)))

    conj = core.conjugate(qp)
    sym = core.symmetrize(qp)
    for i in range(n):
        for j in range(n):
            checks += 2
            if core.dist(conj, nodes[i], nodes[j]) != space.d.T[i, j]:
                bad.append(("conjugate", i, j))
            if core.dist(sym, nodes[i], nodes[j]) != max(space.d[i, j], space.d[j, i]):
                bad.append(("symmetrize", i, j))
    return {"nodes": n, "checks": checks, "disagreements": bad, "capped": space.capped}
