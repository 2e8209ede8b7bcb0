"""Seeded suite runner and the JSON space-composition language."""

from __future__ import annotations

import copy
import hashlib
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable

import numpy as np

from . import bornology as born
from . import core, metrization as met, oracle, zoo
from .errors import ConfigError, ContractViolation, QMBError
from .geometry import Interval
from .points import Real, from_json
from .report import Check, Report, emit_report, to_plain

SUITES = ("axioms", "conjugation", "metrization-4.7", "metrization-6.5", "bornology",
          "properness", "uniform-equivalence", "locally-identical", "cb-base-8.5",
          "oracle")

DEFAULTS = {
    "samples": 2000,
    "seed": 0,
    "tol": 1e-9,
    "epsGrid": [2.0 ** -k for k in range(13)],
    "deltaGrid": [2.0 ** -k for k in range(13)],
    "indexBudget": 32,
    "radiusBudget": 2.0 ** 20,
}

INF = math.inf


def derive_seed(master: int, check_id: str) -> int:
    h = hashlib.sha256(f"{int(master)}:{check_id}".encode()).digest()
    return int.from_bytes(h[:8], "little")


# -- expressions ------------------------------------------------------------


def _char(spec, space: core.QPSpace, path: str) -> met.CharFunction:
    if isinstance(spec, str):
        spec = {"kind": spec}
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError("charSpec must be a kind name or an object with 'kind'", path)
    kind = spec["kind"]
    if kind == "forcing":
        if "point" not in spec:
            raise ConfigError("forcing needs 'point'", path)
        return met.forcing_from_point(space, _point(spec["point"], f"{path}.point"))
    if kind == "zero":
        return met.constant(0.0)
    if kind == "const":
        return met.constant(float(spec.get("value", 0.0)))
    real = {"positive_part": (lambda p: max(p.x, 0.0), "max(x,0)"),
            "abs": (lambda p: abs(p.x), "|x|"),
            "square": (lambda p: p.x * p.x, "x^2")}
    if kind in real:
        fn, label = real[kind]
        return met.CharFunction(fn, label)
    raise ConfigError(f"unknown charSpec kind {kind!r}", path)


def _point(obj, path):
    try:
        return from_json(obj)
    except (ValueError, TypeError, KeyError) as e:
        raise ConfigError(str(e), path) from None


_NAMED_BASES = {
    "UB": zoo.upper_bounded, "LB": zoo.lower_bounded, "LB_closed": zoo.lower_bounded_closed,
    "CB": zoo.compact_bounded, "open": zoo.symmetric_open, "full": zoo.full_line,
    "finite_spines": zoo.spine_base, "earring": zoo.earring_base,
    "finite_teeth": zoo.teeth_base,
}

_BASE_KINDS = {
    "symmetric_intervals": "open", "lower_rays": "LB_closed", "open_lower_rays": "LB",
    "upper_rays": "UB", "closed_intervals": "CB", "spines": "finite_spines",
    "earring": "earring", "teeth": "finite_teeth", "full": "full",
}


def resolve_base(spec, space: core.QPSpace, entry: zoo.ZooEntry | None,
                 path: str = "base") -> born.Bornology:
    if isinstance(spec, str):
        if entry is not None and spec in entry.bornologies:
            return entry.bornologies[spec]()
        if spec in _NAMED_BASES:
            return _NAMED_BASES[spec]()
        raise ConfigError(f"unknown base {spec!r}", path)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError("baseSpec must be a name or an object with 'kind'", path)
    kind = spec["kind"]
    if kind in _BASE_KINDS:
        return _NAMED_BASES[_BASE_KINDS[kind]]()
    if kind == "balls":
        c = _point(spec["center"], f"{path}.center") if "center" in spec else (
            entry.base_point if entry else None)
        if c is None:
            raise ConfigError("balls need 'center'", path)
        return born.metric_bornology(space, c)
    if kind == "finite_prefix":
        return born.Bornology(zoo.index_prefix_base(int(spec.get("cutoff", zoo.INDEX_CUTOFF))),
                              "indices <= n")
    raise ConfigError(f"unknown baseSpec kind {kind!r}", path)


def compose_space(expr, path: str = "target", base_dir: Path | None = None):
    """Evaluate a space expression; returns ``(space, zoo entry or None)``."""
    if isinstance(expr, str):
        expr = {"op": "zoo", "id": expr}
    if not isinstance(expr, dict) or "op" not in expr:
        raise ConfigError("expression must be a zoo id or an object with 'op'", path)
    op = expr["op"]

    def arg():
        if "arg" not in expr:
            raise ConfigError(f"{op} needs 'arg'", path)
        return compose_space(expr["arg"], f"{path}.arg", base_dir)

    try:
        if op == "zoo":
            try:
                e = zoo.get(expr.get("id", ""))
            except KeyError as err:
                raise ConfigError(str(err.args[0]), f"{path}.id") from None
            return e.space, e
        if op == "conjugate":
            return core.conjugate(arg()[0]), None
        if op == "symmetrize":
            return core.symmetrize(arg()[0]), None
        if op == "truncate":
            s = arg()[0]
            if "cap" not in expr:
                raise ConfigError("truncate needs 'cap'", path)
            return core.truncate(s, float(expr["cap"])), None
        if op == "fromChar":
            s = arg()[0]
            f = _char(expr.get("char", "zero"), s, f"{path}.char")
            if expr.get("metric"):
                return met.metric_from_char(s, f), None
            return met.quasimetric_from_char(s, f), None
        if op == "dg":
            s = arg()[0]
            return met.dg_from_char(s, _char(expr.get("char", "zero"), s, f"{path}.char")), None
        if op == "rhoFromChi":
            s, e = arg()
            b = resolve_base(expr.get("base", "open"), s, e, f"{path}.base")
            c = met.chi_from_base(s, born.empty_start(b.base), float(expr.get("delta", 1.0)))
            return met.rho_from_chi(c), None
        if op == "finite":
            m = expr.get("matrix")
            if isinstance(m, str):
                p = Path(m)
                if base_dir is not None and not p.is_absolute():
                    p = base_dir / p
                m = oracle.from_text(p.read_text())
            w = np.array(m, dtype=float)
            space = oracle.closure(oracle.WeightedDigraph(w))
            return oracle.as_qpspace(space, "finite"), None
    except ConfigError:
        raise
    except (ValueError, TypeError, OSError) as err:
        raise ConfigError(str(err), path) from None
    raise ConfigError(f"unknown op {op!r}", path)


# -- config -----------------------------------------------------------------


def normalize(config: dict) -> dict:
    if not isinstance(config, dict):
        raise ConfigError("config must be an object")
    cfg = copy.deepcopy(DEFAULTS)
    cfg.update(copy.deepcopy(config))
    if cfg.get("suite") not in SUITES:
        raise ConfigError(f"unknown suite {cfg.get('suite')!r}", "suite")
    if cfg["suite"] != "oracle" and "target" not in cfg:
        raise ConfigError("missing target", "target")
    for k in ("samples", "indexBudget"):
        if not isinstance(cfg[k], int) or cfg[k] <= 0:
            raise ConfigError(f"{k} must be a positive integer", k)
    if not isinstance(cfg["seed"], int) or not 0 <= cfg["seed"] < 2 ** 64:
        raise ConfigError("seed must be a 64-bit unsigned integer", "seed")
    for k in ("epsGrid", "deltaGrid"):
        g = cfg[k]
        if not isinstance(g, list) or not g or not all(
                isinstance(v, (int, float)) and v > 0 for v in g):
            raise ConfigError(f"{k} must be a nonempty list of positive numbers", k)
        cfg[k] = [float(v) for v in g]
    cfg["tol"] = float(cfg["tol"])
    cfg["radiusBudget"] = float(cfg["radiusBudget"])
    return cfg


# -- checks -----------------------------------------------------------------

Thunk = Callable[[int], Check]


def _pairs(space, n, seed, near=0.5):
    return core.sample_pairs(space, core.make_rng(seed), n, near)


def _axiom_checks(prefix: str, space: core.QPSpace, cfg, separation=None) -> list:
    def run(seed):
        rep = core.check_axioms(space, cfg["samples"], seed, cfg["tol"], separation)
        return rep

    cache: dict = {}

    def get(seed):
        if "rep" not in cache:
            cache["rep"] = run(seed)
        return cache["rep"]

    def one(name, failures_attr, applies=True):
        cid = f"{prefix}:{name}"

        def thunk(seed):
            rep = get(derive_seed(cfg["seed"], prefix + ":axioms"))
            fails = getattr(rep, failures_attr)
            if name == "separation" and not applies:
                return Check(cid, "pass", None, {"skipped": True},
                             "pseudometric: separation not required")
            extra = rep.negativity_failures if name == "triangle" else []
            allf = fails + extra
            metrics = {"triples": rep.checked}
            if name == "separation":
                metrics = {"pairs": rep.pairs_checked}
            return Check(cid, "fail" if allf else "pass", allf[0] if allf else None,
                         dict(metrics, failures=len(allf)))

        return cid, thunk

    sep = space.quasi_metric if separation is None else separation
    return [one("reflexivity", "reflexivity_failures"),
            one("triangle", "triangle_failures"),
            one("separation", "separation_failures", sep)]


def _equal_on_pairs(cid, a: core.QPSpace, b: core.QPSpace, cfg, n: int, tol: float = 0.0):
    def thunk(seed):
        worst = None
        for x, y in _pairs(a, n, seed):
            u, v = core.dist(a, x, y), core.dist(b, x, y)
            if abs(u - v) > tol:
                worst = {"x": x, "y": y, "left": u, "right": v}
                break
        return Check(cid, "fail" if worst else "pass", worst, {"pairs": n, "tol": tol})

    return cid, thunk


def suite_axioms(cfg, space, entry):
    sep = None if entry is None else (not entry.pseudometric and space.quasi_metric)
    return _axiom_checks("axioms", space, cfg, sep)


def suite_conjugation(cfg, space, entry):
    n = max(1, cfg["samples"] // 2)
    checks = [_equal_on_pairs("conjugation:involution", core.conjugate(core.conjugate(space)),
                              space, cfg, n)]

    def sym(seed):
        s = core.symmetrize(space)
        for x, y in _pairs(space, n, seed):
            v = core.dist(s, x, y)
            if v != core.dist(s, y, x) or v < core.dist(space, x, y) or v < core.dist(space, y, x):
                return Check("conjugation:symmetrize", "fail", {"x": x, "y": y, "value": v})
        return Check("conjugation:symmetrize", "pass", None, {"pairs": n})

    checks.append(("conjugation:symmetrize", sym))
    partner = cfg.get("partner") or (entry.conjugate_of if entry else None)
    if partner:
        other, _ = compose_space(partner, "partner")
        checks.append(_equal_on_pairs("conjugation:partner", core.conjugate(space), other,
                                      cfg, n))
    if cfg.get("symmetrizeMatches"):
        other, _ = compose_space(cfg["symmetrizeMatches"], "symmetrizeMatches")
        checks.append(_equal_on_pairs("conjugation:symmetrize-matches",
                                      core.symmetrize(space), other, cfg, n,
                                      float(cfg.get("matchTol", 1e-12))))
    return checks


DEFAULT_PROBES = [
    [-INF, INF, False, False], [0, INF, True, False], [-INF, 0, False, True],
    [-5, 5, True, True], [3, INF, False, False], [-INF, -3, False, False],
]


def _probe_set(spec, path):
    try:
        lo, hi, lc, hc = spec
        return core.real_set(Interval(float(lo), float(hi), bool(lc), bool(hc)))
    except (TypeError, ValueError):
        raise ConfigError("probe must be [lo, hi, loClosed, hiClosed]", path) from None


def sup_class(f: met.CharFunction, A: core.SetDescriptor, cfg, seed) -> str:
    """'bounded' / 'unbounded' / 'inconclusive' from the sampled sup of f on A."""
    pts = A.members if A.members is not None else A.sample(cfg["samples"], seed)
    sup = max((f(p) for p in pts), default=0.0)
    if sup >= cfg["radiusBudget"]:
        return "unbounded"
    if sup < cfg["radiusBudget"] / 4:
        return "bounded"
    return "inconclusive"


def _bounded_kind(w) -> str:
    return {"bounded": "bounded", "escape": "unbounded"}.get(w.kind, "inconclusive")


def suite_metrization_47(cfg, space, entry):
    f = _char(cfg.get("char", {"kind": "forcing", "point": to_plain(
        entry.base_point if entry else Real(0.0))}), space, "char")
    try:
        rho = met.quasimetric_from_char(space, f)
    except ValueError as e:
        raise ConfigError(str(e), "target") from None
    checks = _axiom_checks("quasimetric", rho, cfg)
    checks.append(_equal_on_pairs("quasimetric:zero-char",
                                  met.quasimetric_from_char(space, met.constant(0.0)),
                                  space, cfg, cfg["samples"] // 2))

    def bounded(seed):
        rows, bad, unsure = [], [], 0
        for k, spec in enumerate(cfg.get("probes", DEFAULT_PROBES)):
            A = _probe_set(spec, f"probes[{k}]")
            want = sup_class(f, A, cfg, seed)
            got = _bounded_kind(born.is_d_bounded(rho, A, cfg["samples"],
                                                  cfg["radiusBudget"], seed=seed))
            rows.append([spec, want, got])
            if "inconclusive" in (want, got):
                unsure += 1
            elif want != got:
                bad.append([spec, want, got])
        status = "fail" if bad else ("inconclusive" if unsure else "pass")
        return Check("quasimetric:boundedness", status, bad[0] if bad else None,
                     {"probes": len(rows), "rows": rows})

    checks.append(("quasimetric:boundedness", bounded))
    if space.symmetric:
        def metric(seed):
            m = met.metric_from_char(space, f, seed=seed)
            rep = core.check_axioms(m, cfg["samples"], seed, cfg["tol"])
            for x, y in _pairs(m, cfg["samples"] // 2, seed):
                if core.dist(m, x, y) != core.dist(m, y, x):
                    return Check("metric:symmetric", "fail", {"x": x, "y": y})
            w = (rep.triangle_failures + rep.reflexivity_failures)[:1]
            return Check("metric:symmetric", "fail" if w else "pass", w[0] if w else None)

        checks.append(("metric:symmetric", metric))
        if cfg.get("metricMatches"):
            other, _ = compose_space(cfg["metricMatches"], "metricMatches")
            checks.append(_equal_on_pairs("metric:matches",
                                          met.metric_from_char(space, f), other, cfg,
                                          cfg["samples"] // 2))
    return checks


def _chi(cfg, space, entry):
    b = resolve_base(cfg.get("base", "open"), space, entry)
    return met.chi_from_base(space, born.empty_start(b.base), float(cfg.get("delta", 1.0)),
                             samples=min(cfg["samples"], 400),
                             seed=derive_seed(cfg["seed"], "chi"))


def suite_metrization_65(cfg, space, entry):
    state: dict = {}

    def get():
        if "c" not in state:
            state["c"] = _chi(cfg, space, entry)
        return state["c"]

    def construct(seed):
        try:
            c = get()
        except QMBError as e:
            state["err"] = e
            w = {"n": e.n, "point": e.point, "delta": e.delta} if hasattr(e, "n") else None
            return Check("chi:construct", "fail", w, {}, f"{type(e).__name__}: {e}")
        return Check("chi:construct", "pass", None, {"delta": c.delta})

    def needs(cid, body):
        def thunk(seed):
            try:
                c = get()
            except QMBError as e:
                return Check(cid, "aborted", None, {}, f"construction failed: {e}")
            return body(c, seed)

        return cid, thunk

    def lipschitz(c, seed):
        n = 0
        for x, y in _pairs(space, cfg["samples"], seed, near=0.9):
            dv = core.dist(space, x, y)
            if dv >= c.delta:
                continue
            n += 1
            gap = c.chi(y) - c.chi(x)
            if gap > 2.0 / c.delta * dv + cfg["tol"]:
                return Check("chi:lipschitz", "fail", {"x": x, "y": y, "d": dv, "gap": gap})
        return Check("chi:lipschitz", "pass", None, {"pairs": n})

    def growth(c, seed):
        pts = space.sample(cfg["samples"], seed)
        for n in range(1, 8):
            B = c.base.at(n)
            for p in pts:
                v = c.chi(p)
                if not B.contains(p) and v < n - 1 - cfg["tol"]:
                    return Check("chi:growth", "fail", {"n": n, "x": p, "chi": v})
                if B.contains(p) and v > n - 1 + cfg["tol"]:
                    return Check("chi:growth", "fail", {"n": n, "x": p, "chi": v})
        return Check("chi:growth", "pass", None, {"points": len(pts)})

    def ucont(c, seed):
        r = met.uniform_continuity_check(c.chi, space, cfg["epsGrid"], cfg["deltaGrid"],
                                         cfg["samples"], seed)
        return Check("chi:uniform-continuity", "pass" if r.kind == "pass" else "fail",
                     None if r.kind == "pass" else r)

    def local(c, seed):
        rho = met.rho_from_chi(c)
        lim = min(1.0, c.delta)
        n = 0
        for x, y in _pairs(space, cfg["samples"], seed, near=0.9):
            dv = core.dist(space, x, y)
            if dv < lim:
                n += 1
                if core.dist(rho, x, y) != dv:
                    return Check("rho:local-identity", "fail", {"x": x, "y": y})
        return Check("rho:local-identity", "pass", None, {"pairs": n})

    def bounded(c, seed):
        rho = met.rho_from_chi(c)
        out = []
        for n in range(1, 6):
            w = born.is_d_bounded(rho, c.base.at(n), cfg["samples"] // 4,
                                  cfg["radiusBudget"], seed=seed)
            if w.kind != "bounded":
                return Check("rho:bounded-base", "fail", {"n": n, "verdict": w})
            out.append([n, w.radius])
        return Check("rho:bounded-base", "pass", None, {"radii": out})

    def rho_axioms(c, seed):
        rho = met.rho_from_chi(c)
        rep = core.check_axioms(rho, cfg["samples"], seed, cfg["tol"])
        w = (rep.reflexivity_failures + rep.triangle_failures + rep.separation_failures)
        return Check("rho:axioms", "fail" if w else "pass", w[0] if w else None,
                     {"triples": rep.checked})

    def dg_axioms(c, seed):
        dg = met.dg_from_char(space, c.chi)
        rep = core.check_axioms(dg, cfg["samples"], seed, cfg["tol"])
        w = rep.reflexivity_failures + rep.triangle_failures
        return Check("dg:axioms", "fail" if w else "pass", w[0] if w else None)

    return [("chi:construct", construct), needs("chi:lipschitz", lipschitz),
            needs("chi:growth", growth), needs("chi:uniform-continuity", ucont),
            needs("rho:local-identity", local), needs("rho:bounded-base", bounded),
            needs("rho:axioms", rho_axioms), needs("dg:axioms", dg_axioms)]


def _transform(space, how):
    return {"id": space, "conjugate": core.conjugate(space),
            "symmetrize": core.symmetrize(space)}[how]


def suite_bornology(cfg, space, entry):
    checks = []
    claims = entry.claims if entry else []
    for cl in claims:
        cid = f"claim:{cl.name}"

        def thunk(seed, cl=cl, cid=cid):
            s = _transform(space, cl.transform)
            w = born.is_d_bounded(s, cl.make(space), cfg["samples"], cfg["radiusBudget"],
                                  centers=cl.centers, seed=seed)
            got = _bounded_kind(w)
            status = ("pass" if got == cl.expected else
                      "inconclusive" if got == "inconclusive" else "fail")
            return Check(cid, status, w, {"expected": cl.expected, "transform": cl.transform})

        checks.append((cid, thunk))
    x0 = entry.base_point if entry else cfg.get("basePoint")
    if x0 is not None:
        if not entry:
            x0 = _point(x0, "basePoint")

        def cover(seed):
            b = born.metric_bornology(space, x0)
            for p in space.sample(min(cfg["samples"], 500), seed):
                k = max(0, math.ceil(core.dist(space, x0, p)))
                if not b.base.at(k).contains(p):
                    return Check("metric-bornology:cover", "fail", {"x": p, "index": k})
            return Check("metric-bornology:cover", "pass")

        checks.append(("metric-bornology:cover", cover))
    return checks


def suite_properness(cfg, space, entry):
    def thunk(seed):
        b = resolve_base(cfg.get("base", "full"), space, entry)
        r = born.properness_check(space, b, cfg["deltaGrid"], min(cfg["samples"], 400),
                                  seed, int(cfg.get("indices", 6)))
        if r.kind == "pass":
            return Check("properness", "pass", None, {"deltas": r.deltas})
        replay = born.replay_counterexample(space, b, r.n, r.point, r.delta)
        return Check("properness", "fail", r, {"replayed": replay})

    return [("properness", thunk)]


def _other(cfg):
    if "other" not in cfg:
        raise ConfigError("missing 'other'", "other")
    return compose_space(cfg["other"], "other")[0]


def suite_uniform_equivalence(cfg, space, entry):
    other = _other(cfg)

    def thunk(seed):
        r = met.uniform_equivalence_check(space, other, cfg["epsGrid"], cfg["deltaGrid"],
                                          cfg["samples"], seed)
        if r.kind == "pass":
            return Check("uniform-equivalence", "pass", None, {"table": r.table})
        return Check("uniform-equivalence", "fail", r)

    return [("uniform-equivalence", thunk)]


def suite_locally_identical(cfg, space, entry):
    other = _other(cfg)

    def thunk(seed):
        r = met.locally_identical_check(other, space, cfg["deltaGrid"], cfg["samples"], seed)
        if r.kind == "pass":
            return Check("locally-identical", "pass", None, {"delta": r.delta})
        return Check("locally-identical", "fail", r)

    return [("locally-identical", thunk)]


def suite_cb_base(cfg, space, entry):
    def thunk(seed):
        fam = resolve_base(cfg.get("base", "CB"), space, entry)
        try:
            out = met.cb_uniform_base(space, fam.base, float(cfg.get("delta", 1.0)),
                                      int(cfg.get("maxIndex", 8)), 200, seed)
        except QMBError as e:
            return Check("cb:subsequence", "fail", None, {}, f"{type(e).__name__}: {e}")
        return Check("cb:subsequence", "pass", None, {"source": list(out.source)})

    return [("cb:subsequence", thunk)]


def suite_oracle(cfg, space, entry):
    count = int(cfg.get("graphs", 100))
    nodes = int(cfg.get("nodes", 8))
    density = float(cfg.get("density", 0.5))
    checks = []
    for g in range(count):
        cid = f"oracle:{g:04d}"

        def thunk(seed, g=g, cid=cid):
            n = 1 + g % nodes
            fs = oracle.closure(oracle.random_digraph(n, density, cfg["seed"] + g))
            tri = oracle.triangle_violations(fs)
            res = oracle.cross_check(fs, seed)
            bad = tri[:1] or res["disagreements"][:1]
            return Check(cid, "fail" if bad else "pass", bad[0] if bad else None,
                         {"nodes": n, "checks": res["checks"], "capped": res["capped"]})

        checks.append((cid, thunk))
    return checks


_SUITES = {
    "axioms": suite_axioms, "conjugation": suite_conjugation,
    "metrization-4.7": suite_metrization_47, "metrization-6.5": suite_metrization_65,
    "bornology": suite_bornology, "properness": suite_properness,
    "uniform-equivalence": suite_uniform_equivalence,
    "locally-identical": suite_locally_identical, "cb-base-8.5": suite_cb_base,
    "oracle": suite_oracle,
}


def _guard(cid, thunk, seed) -> Check:
    try:
        return thunk(seed)
    except ConfigError:
        raise
    except ContractViolation as e:
        return Check(cid, "aborted", None, {}, f"contract violation: {e}")
    except QMBError as e:
        return Check(cid, "fail", None, {}, f"{type(e).__name__}: {e}")
    except ValueError as e:
        # violated preconditions of a construction are configuration problems
        raise ConfigError(str(e), cid) from None


def run_suite(config: dict, workers: int = 1, base_dir: Path | None = None) -> Report:
    """Run one suite.  Each check draws from its own seed, derived from the
    master seed and the check id, so the report does not depend on order or
    on ``workers``."""
    cfg = normalize(config)
    if cfg["suite"] == "oracle":
        space, entry = None, None
    else:
        space, entry = compose_space(cfg["target"], "target", base_dir)
    checks = _SUITES[cfg["suite"]](cfg, space, entry)
    report = Report(config=cfg)
    jobs = [(cid, t, derive_seed(cfg["seed"], cid)) for cid, t in checks]
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            results = list(ex.map(lambda j: _guard(*j), jobs))
    else:
        results = [_guard(*j) for j in jobs]
    for r in results:
        report.add(r)
    return report


def list_zoo() -> list[dict]:
    out = []
    for zid in zoo.ids():
        e = zoo.get(zid)
        out.append({
            "id": zid, "label": e.space.label, "carrier": e.space.carrier.name,
            "provenance": e.notes, "pseudometric": e.pseudometric,
            "bornologies": sorted(e.bornologies),
            "claims": [{"name": c.name, "expected": c.expected, "transform": c.transform}
                       for c in e.claims],
            "verdicts": [{"claim": v.claim, "suite": v.suite, "expected": v.expected,
                          "params": v.params, "source": v.source} for v in e.verdicts],
        })
    return out


def verdict_config(zoo_id: str, verdict: zoo.Verdict, **overrides) -> dict:
    cfg = {"suite": verdict.suite, "target": zoo_id}
    cfg.update(verdict.params)
    cfg.update(overrides)
    return cfg


__all__ = ["run_suite", "compose_space", "list_zoo", "emit_report", "normalize",
           "derive_seed", "verdict_config", "SUITES"]
