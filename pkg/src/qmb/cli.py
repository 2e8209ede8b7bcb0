"""Command line entry point: ``qmb verify | construct | zoo | oracle``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import harness, metrization as met, oracle
from .errors import ConfigError, QMBError
from .report import to_plain

EXIT_CONFIG = 2


def _load_arg(text: str):
    """``@file`` reads JSON from a file; otherwise JSON if it parses, else a bare string."""
    if text.startswith("@"):
        p = Path(text[1:])
        try:
            return json.loads(p.read_text()), p.parent
        except OSError as e:
            raise ConfigError(str(e), text) from None
        except json.JSONDecodeError as e:
            raise ConfigError(f"invalid JSON: {e}", text) from None
    try:
        return json.loads(text), None
    except json.JSONDecodeError:
        return text, None


def _write(data: bytes, out: str | None):
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def cmd_verify(a) -> int:
    cfg: dict = {}
    base_dir = None
    if a.config:
        loaded, base_dir = _load_arg(a.config)
        if not isinstance(loaded, dict):
            raise ConfigError("config file must hold an object", a.config)
        cfg.update(loaded)
    if a.target is not None:
        target, tdir = _load_arg(a.target)
        base_dir = base_dir or tdir
        if isinstance(target, dict) and "suite" in target:
            cfg.update(target)
        else:
            cfg["target"] = target
    for key, val in (("suite", a.suite), ("samples", a.samples), ("seed", a.seed),
                     ("tol", a.tol)):
        if val is not None:
            cfg[key] = val
    report = harness.run_suite(cfg, workers=a.workers, base_dir=base_dir)
    _write(harness.emit_report(report, a.format), a.output)
    return report.exit_code(a.strict)


def cmd_construct(a) -> int:
    target, tdir = _load_arg(a.target)
    space, entry = harness.compose_space(target, "target", tdir)
    base_spec, _ = _load_arg(a.base)
    b = harness.resolve_base(base_spec, space, entry)
    c = met.chi_from_base(space, b.base, a.delta, samples=a.samples, seed=a.seed)
    if a.at:
        pts_json, _ = _load_arg(a.at)
        if not isinstance(pts_json, list):
            raise ConfigError("--at must be a list of points", "at")
        pts = [harness._point(p, f"at[{i}]") for i, p in enumerate(pts_json)]
    else:
        pts = space.sample(a.points, a.seed)
    rows = [{"point": p, "band": c.band(p), "chi": c.chi(p)} for p in pts]
    out = {"construction": "chi", "target": target, "base": base_spec, "delta": a.delta,
           "values": rows}
    _write((json.dumps(to_plain(out), sort_keys=True, indent=2) + "\n").encode(), None)
    return 0


def cmd_zoo(a) -> int:
    entries = harness.list_zoo()
    if a.format == "json":
        _write((json.dumps(entries, sort_keys=True, indent=2) + "\n").encode(), None)
    else:
        lines = [f"{e['id']:22s} {e['carrier']:10s} {e['provenance']}" for e in entries]
        _write(("\n".join(lines) + "\n").encode(), None)
    return 0


def cmd_oracle(a) -> int:
    g = oracle.random_digraph(a.nodes, a.density, a.seed)
    if a.export:
        Path(a.export).write_text(oracle.to_text(g.weights))
    fs = oracle.closure(g)
    res = oracle.cross_check(fs, a.seed)
    tri = oracle.triangle_violations(fs)
    out = {"nodes": a.nodes, "density": a.density, "seed": a.seed, "capped": fs.capped,
           "closure": fs.d, "triangleViolations": tri, "checks": res["checks"],
           "disagreements": res["disagreements"]}
    _write((json.dumps(to_plain(out), sort_keys=True, indent=2) + "\n").encode(), None)
    return 1 if tri or res["disagreements"] else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qmb", description="Quasi-metric bornology toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=harness.SUITES)
    v.add_argument("--target", help="zoo id, JSON expression, or @file")
    v.add_argument("--config", help="@file holding a full suite config")
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--tol", type=float)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--output", help="write the report here instead of stdout")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--strict", action="store_true",
                   help="exit with bit 4 set when any check is inconclusive")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="build a characteristic function")
    csub = c.add_subparsers(dest="construction", required=True)
    chi = csub.add_parser("chi", help="chi from a base sequence and delta")
    chi.add_argument("--target", required=True)
    chi.add_argument("--delta", type=float, required=True)
    chi.add_argument("--base", required=True, help="base name, JSON, or @file")
    chi.add_argument("--at", help="JSON list of points, or @file")
    chi.add_argument("--points", type=int, default=16, help="sampled points when --at is absent")
    chi.add_argument("--samples", type=int, default=400)
    chi.add_argument("--seed", type=int, default=0)
    chi.set_defaults(func=cmd_construct)

    z = sub.add_parser("zoo", help="list catalogued spaces")
    zsub = z.add_subparsers(dest="zoo_command", required=True)
    zl = zsub.add_parser("list")
    zl.add_argument("--format", choices=("json", "text"), default="text")
    zl.set_defaults(func=cmd_zoo)

    o = sub.add_parser("oracle", help="finite ground-truth spaces")
    osub = o.add_subparsers(dest="oracle_command", required=True)
    r = osub.add_parser("random", help="random digraph, closed and cross-checked")
    r.add_argument("--nodes", type=int, default=6)
    r.add_argument("--density", type=float, default=0.5)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--export", help="write the weight matrix in text form here")
    r.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        print(f"qmb: config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (QMBError, ValueError) as e:
        print(f"qmb: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
