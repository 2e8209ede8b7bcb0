"""Explicit metrization constructions and the epsilon-delta checks around them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Sequence

from . import geometry as geo
from .bornology import (
    BaseSequence,
    _probes,
    first_index,
    neighborhood_violation,
)
from .core import (
    QPSpace,
    SetDescriptor,
    _value,
    make_rng,
    neighborhood,
    real_set,
    sample_pairs,
    set_dist_from,
    set_dist_to,
)
from .errors import (
    AsymmetricInput,
    BandAssignmentError,
    CarrierMismatch,
    ContractViolation,
    CriterionViolation,
    MaximalSetOrBudget,
    ZeroDenominator,
)

DEFAULT_GRID = tuple(2.0 ** -k for k in range(0, 13))
BAND_BUDGET = 10 ** 7


@dataclass(frozen=True, eq=False)
class CharFunction:
    """A non-negative real function on a carrier."""

    eval_fn: Callable[[Any], float]
    label: str = "f"

    def __call__(self, x) -> float:
        v = self.eval_fn(x)
        if not isinstance(v, (int, float)) or not math.isfinite(v) or v < 0:
            raise ContractViolation(f"{self.label}({x!r}) = {v!r}")
        return float(v)

    def __repr__(self):
        return f"CharFunction({self.label!r})"


def constant(c: float = 0.0) -> CharFunction:
    return CharFunction(lambda x: c, f"const {c:g}")


def forcing_from_point(space: QPSpace, x0) -> CharFunction:
    space.carrier.check(x0)
    return CharFunction(lambda x: _value(space, x0, x), f"{space.label}({x0!r}, .)")


def _require_bounded(space: QPSpace):
    if space.bound is None:
        raise ValueError(f"{space.label} is not declared bounded; truncate it first")


def quasimetric_from_char(space: QPSpace, f: CharFunction) -> QPSpace:
    """``rho(x, y) = d(x, y) + max(f(y) - f(x), 0)``."""
    _require_bounded(space)
    d = space.dist_fn
    return QPSpace(space.carrier, lambda x, y: d(x, y) + max(f(y) - f(x), 0.0),
                   space.sampler, f"{space.label}+[{f.label}]^+",
                   quasi_metric=space.quasi_metric, neighbor=space.neighbor,
                   points=space.points)


def check_symmetric(space: QPSpace, samples: int = 256, seed=0, tol: float = 0.0):
    for x, y in sample_pairs(space, make_rng(seed), samples):
        a, b = _value(space, x, y), _value(space, y, x)
        if abs(a - b) > tol:
            raise AsymmetricInput(f"{space.label}: d({x!r},{y!r}) = {a} but d(y,x) = {b}")


def metric_from_char(space: QPSpace, f: CharFunction, samples: int = 256,
                     seed=0) -> QPSpace:
    """``rho(x, y) = d(x, y) + |f(y) - f(x)|`` for symmetric bounded ``d``."""
    _require_bounded(space)
    check_symmetric(space, samples, seed)
    d = space.dist_fn
    return QPSpace(space.carrier, lambda x, y: d(x, y) + abs(f(y) - f(x)),
                   space.sampler, f"{space.label}+|{f.label}|",
                   quasi_metric=space.quasi_metric, symmetric=True,
                   neighbor=space.neighbor, points=space.points)


def dg_from_char(space: QPSpace, g: CharFunction) -> QPSpace:
    """``d_g(x, y) = min(d(x, y), 1) + max(g(y) - g(x), 0)``."""
    d = space.dist_fn
    return QPSpace(space.carrier, lambda x, y: min(d(x, y), 1.0) + max(g(y) - g(x), 0.0),
                   space.sampler, f"{space.label}_[{g.label}]",
                   quasi_metric=space.quasi_metric, neighbor=space.neighbor,
                   points=space.points)


# -- psi ---------------------------------------------------------------------


def psi_from_base(space: QPSpace, closures: Callable[[int], SetDescriptor],
                  complements: Callable[[int], SetDescriptor],
                  budget: int = BAND_BUDGET) -> CharFunction:
    """``psi = h_n + n`` on the band ``int A_{n+1} \\ int A_n``.

    ``closures(n)`` describes ``cl A_n`` and ``complements(n)`` describes
    ``X \\ int A_{n+1}``; both are supplied by the caller since closures are
    topological data.  With ``A_0`` empty, band 0 is ``int A_1`` and there
    ``h_0 = 1``, so psi equals 1 on it.
    """
    comp = BaseSequence(complements, "X - int A_{n+1}")

    def band(x) -> int:
        n = first_index(comp, lambda c: not c.contains(x), budget)
        if n is None:
            raise BandAssignmentError(f"{x!r} lies in no band up to index {budget}")
        return n

    @lru_cache(maxsize=1 << 16)
    def psi(x) -> float:
        n = band(x)
        if n == 0:
            return 1.0
        f = set_dist_from(space, closures(n), x).value
        g = set_dist_to(space, x, comp.at(n)).value
        if f + g == 0:
            raise ZeroDenominator(f"f_{n} + g_{n} vanishes at {x!r}")
        return n + f / (f + g)

    return CharFunction(psi, "psi")


def euclidean_interval_oracles(base: Callable[[int], SetDescriptor]):
    """Closure and interior-complement descriptors for bases of real interval
    unions, with respect to the usual topology of the line."""

    def shape(n):
        s = base(n).shape
        if s is None or isinstance(s, geo.Nothing):
            return geo.RealSet([])
        if not isinstance(s, geo.RealSet):
            raise TypeError("euclidean oracles need interval-union base sets")
        return s

    def closures(n):
        return real_set(*[geo.Interval(i.lo, i.hi, True, True) for i in shape(n).intervals])

    def complements(n):
        interior = geo.RealSet([geo.Interval(i.lo, i.hi) for i in shape(n + 1).intervals])
        return real_set(*interior.complement().intervals)

    return closures, complements


# -- chi, rho ----------------------------------------------------------------


@dataclass(eq=False)
class ChiConstruction:
    space: QPSpace
    base: BaseSequence
    delta: float
    phi: Callable[[int], CharFunction]
    chi: CharFunction
    band: Callable[[Any], int]
    budget: int = BAND_BUDGET


def check_delta_criterion(space: QPSpace, base: BaseSequence, delta: float,
                          indices: int = 6, samples: int = 400, seed=0):
    """Raise :class:`CriterionViolation` on a sampled breach of the criterion."""
    rng = make_rng(seed)
    for n in range(indices):
        if not base.has(n + 1):
            break
        A = base.at(n)
        if A.is_empty:
            continue
        w = neighborhood_violation(space, A, delta, base.at(n + 1),
                                   _probes(space, A, rng, samples, delta))
        if w is not None:
            raise CriterionViolation(n, w, delta)


def chi_from_base(space: QPSpace, base: BaseSequence, delta: float,
                  budget: int = BAND_BUDGET, check_indices: int = 6,
                  samples: int = 400, seed=0) -> ChiConstruction:
    """``phi_0 = 1``, ``phi_n = min(1, d(B_n, x)/delta)`` and
    ``chi(x) = n - 2 + phi_{n-1}(x)`` for ``x`` in ``B_n \\ B_{n-1}``."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    if not base.at(0).is_empty:
        raise ValueError("base(0) must be empty")
    if base.at(1).is_empty:
        raise ValueError("base(1) must be nonempty")
    check_delta_criterion(space, base, delta, check_indices, samples, seed)

    def band(x) -> int:
        n = first_index(base, lambda b: b.contains(x), budget, start=1)
        if n is None:
            raise BandAssignmentError(f"{x!r} lies in no base set up to index {budget}")
        return n

    @lru_cache(maxsize=1 << 16)
    def phi_value(n: int, x) -> float:
        if n == 0:
            return 1.0
        return min(1.0, set_dist_from(space, base.at(n), x).value / delta)

    def phi(n: int) -> CharFunction:
        return CharFunction(lambda x: phi_value(n, x), f"phi_{n}")

    def chi(x) -> float:
        n = band(x)
        return n - 2 + phi_value(n - 1, x)

    return ChiConstruction(space, base, delta, phi, CharFunction(chi, "chi"), band, budget)


def rho_from_chi(c: ChiConstruction) -> QPSpace:
    """``rho(x, y) = max(min(d, 1), (delta/2) max(chi(y) - chi(x), 0))``.

    Below ``min(1, delta)`` the Lipschitz bound ``chi(y) - chi(x) <=
    (2/delta) d(x, y)`` makes the second branch at most ``d``, so ``d`` is
    returned as is; this keeps the exact agreement free of rounding noise.
    A second branch that exceeds ``d`` there by more than rounding is a
    broken construction and is reported as such.
    """
    d = c.space.dist_fn
    chi = c.chi
    half = c.delta / 2.0
    local = min(1.0, c.delta)

    def rho(x, y):
        v = d(x, y)
        w = half * max(chi(y) - chi(x), 0.0)
        if v < local:
            if w > v + 1e-9 * (1.0 + v):
                raise ContractViolation(f"Lipschitz bound fails at ({x!r}, {y!r})")
            return v
        return max(min(v, 1.0), w)

    s = c.space
    return QPSpace(s.carrier, rho, s.sampler, f"rho_chi({s.label}, {c.delta:g})",
                   quasi_metric=s.quasi_metric, neighbor=s.neighbor, points=s.points)


# -- epsilon-delta checks ---------------------------------------------------


@dataclass(frozen=True)
class UCPass:
    table: dict
    kind: str = "pass"


@dataclass(frozen=True)
class UCWitness:
    eps: float
    x: Any
    y: Any
    d: float
    gap: float
    kind: str = "witness"


def _largest_delta(pairs, eps, grid):
    """Largest grid delta under which no pair with src < delta has dst >= eps."""
    bad = min((s for s, t in pairs if t >= eps), default=math.inf)
    ok = [dl for dl in grid if dl <= bad]
    return max(ok) if ok else None


def uniform_continuity_check(f: CharFunction, space: QPSpace,
                             eps_grid: Sequence[float] = DEFAULT_GRID,
                             delta_grid: Sequence[float] = DEFAULT_GRID,
                             samples: int = 2000, seed=0, codomain: str = "upper"):
    """Grid search for ``d(x, y) < delta => e(f(x), f(y)) < eps``.

    ``codomain`` is ``"upper"`` for ``e = rho_u`` or ``"abs"`` for ``|.|``.
    """
    if not eps_grid or not delta_grid:
        raise ValueError("grids must be nonempty")
    pairs = sample_pairs(space, make_rng(seed), samples, near=0.8)
    rows = []
    for x, y in pairs:
        fx, fy = f(x), f(y)
        gap = max(fy - fx, 0.0) if codomain == "upper" else abs(fy - fx)
        rows.append((x, y, _value(space, x, y), gap))
    st = [(r[2], r[3]) for r in rows]
    table = {}
    dmin = min(delta_grid)
    for eps in sorted(eps_grid, reverse=True):
        dl = _largest_delta(st, eps, delta_grid)
        if dl is None:
            x, y, dv, gap = max((r for r in rows if r[2] < dmin and r[3] >= eps),
                                key=lambda r: r[2])
            return UCWitness(eps, x, y, dv, gap)
        table[eps] = dl
    return UCPass(table)


@dataclass(frozen=True)
class UEPass:
    table: dict
    kind: str = "pass"


@dataclass(frozen=True)
class UEWitness:
    direction: str
    eps: float
    x: Any
    y: Any
    d_small: float
    d_other: float
    kind: str = "witness"


def _same_carrier(s0: QPSpace, s1: QPSpace):
    if s0.carrier.name != s1.carrier.name:
        raise CarrierMismatch(f"{s0.label} lives on {s0.carrier.name!r}, "
                              f"{s1.label} on {s1.carrier.name!r}")


def _all_pairs(space: QPSpace, samples: int, seed, extra: QPSpace | None = None):
    if space.points is not None:
        return [(x, y) for x in space.points for y in space.points if x != y]
    rng = make_rng(seed)
    pairs = sample_pairs(space, rng, samples, near=0.8)
    if extra is not None:
        pairs += sample_pairs(extra, rng, samples, near=0.8)
    return pairs


def uniform_equivalence_check(s0: QPSpace, s1: QPSpace,
                              eps_grid: Sequence[float] = DEFAULT_GRID,
                              delta_grid: Sequence[float] = DEFAULT_GRID,
                              samples: int = 2000, seed=0):
    _same_carrier(s0, s1)
    pairs = _all_pairs(s0, samples, seed, s1)
    rows = [(x, y, _value(s0, x, y), _value(s1, x, y)) for x, y in pairs]
    table = {}
    dmin = min(delta_grid)
    for name, i, j in (("0->1", 2, 3), ("1->0", 3, 2)):
        st = [(r[i], r[j]) for r in rows]
        for eps in sorted(eps_grid, reverse=True):
            dl = _largest_delta(st, eps, delta_grid)
            if dl is None:
                # the largest qualifying source distance avoids underflowed zeros
                r = max((r for r in rows if r[i] < dmin and r[j] >= eps),
                        key=lambda r: r[i])
                return UEWitness(name, eps, r[0], r[1], r[i], r[j])
            table[(name, eps)] = dl
    return UEPass(table)


@dataclass(frozen=True)
class LIPass:
    delta: float
    table: dict
    kind: str = "pass"


@dataclass(frozen=True)
class LIWitness:
    delta: float | None
    x: Any
    y: Any
    d: float
    rho: float
    reason: str
    kind: str = "witness"


def locally_identical_check(d: QPSpace, rho: QPSpace,
                            delta_grid: Sequence[float] = DEFAULT_GRID,
                            samples: int = 2000, seed=0):
    """Largest grid delta with ``rho = d`` exactly on pairs where ``d < delta``,
    plus uniform equivalence.  Finite carriers are checked exhaustively."""
    _same_carrier(d, rho)
    rows = [(x, y, _value(d, x, y), _value(rho, x, y))
            for x, y in _all_pairs(d, samples, seed, rho)]
    bad = min((a for _, _, a, b in rows if a != b), default=math.inf)
    ok = [dl for dl in delta_grid if dl <= bad]
    if not ok:
        dmin = min(delta_grid)
        x, y, a, b = max((r for r in rows if r[2] < dmin and r[2] != r[3]),
                         key=lambda r: r[2])
        return LIWitness(None, x, y, a, b, "disagree below every delta")
    ue = uniform_equivalence_check(d, rho, samples=samples, seed=seed)
    if isinstance(ue, UEWitness):
        return LIWitness(max(ok), ue.x, ue.y, ue.d_small, ue.d_other,
                         f"not uniformly equivalent ({ue.direction}, eps {ue.eps:g})")
    return LIPass(max(ok), ue.table)


# -- compact-bornology base -------------------------------------------------


def cb_uniform_base(space: QPSpace, family: BaseSequence, delta: float,
                    max_index: int = 8, samples: int = 200, seed=0,
                    coverage_samples: int = 200, coverage_budget: int = BAND_BUDGET
                    ) -> BaseSequence:
    """Base of ``[A_n]^{delta/2}`` neighbourhoods, thinned greedily so that
    ``[B_m]^{delta/2} ⊆ B_{m+1}`` holds on samples."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    pts = space.points if space.points is not None else space.sample(coverage_samples, seed)
    for p in pts:
        if first_index(family, lambda a: a.contains(p), coverage_budget) is None:
            raise BandAssignmentError(f"family does not cover {p!r}")
    half = delta / 2.0
    nbhd = BaseSequence(lambda n: neighborhood(space, family.at(n), half),
                        f"[{family.label}]^{half:g}", family.length)
    rng = make_rng(seed)
    picks = [0]
    while True:
        cur = picks[-1]
        B = nbhd.at(cur)
        probes = _probes(space, B, rng, samples, half)
        found = None
        for n in range(cur + 1, max_index + 1):
            if not nbhd.has(n):
                break
            if neighborhood_violation(space, B, half, nbhd.at(n), probes) is None:
                found = n
                break
        if found is None:
            break
        picks.append(found)
    if len(picks) < 2:
        raise MaximalSetOrBudget(f"no subsequence step found within index {max_index}")
    seq = tuple(picks)
    return BaseSequence(lambda m: nbhd.at(seq[m]), f"cb({family.label})", len(seq),
                        source=seq)
