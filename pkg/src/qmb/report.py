"""Verification reports and their byte-stable serializations."""

from __future__ import annotations

import dataclasses
import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from . import points as pts

SCHEMA = "qmb-report/1"
STATUSES = ("pass", "fail", "inconclusive", "aborted")


@dataclass
class Check:
    check_id: str
    status: str
    witness: Any = None
    metrics: dict = field(default_factory=dict)
    message: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class Report:
    config: dict
    checks: list = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    @property
    def status(self) -> str:
        ss = {c.status for c in self.checks}
        for s in ("aborted", "fail", "inconclusive"):
            if s in ss:
                return s
        return "pass"

    def counts(self) -> dict:
        return {s: sum(c.status == s for c in self.checks) for s in STATUSES}

    def exit_code(self, strict: bool = False) -> int:
        ss = {c.status for c in self.checks}
        code = 1 if ss & {"fail", "aborted"} else 0
        if strict and "inconclusive" in ss:
            code |= 4
        return code


def _point_like(v) -> bool:
    return isinstance(v, (pts.Real, pts.Nat, pts.Pair, pts.Apex, pts.Spine, pts.Hand,
                          pts.Tooth, pts.Node))


def to_plain(v: Any) -> Any:
    """JSON-ready form of reports, witnesses and configs."""
    if _point_like(v):
        return pts.to_json(v)
    if isinstance(v, enum.Enum):
        return v.value
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return v
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, np.ndarray):
        return to_plain(v.tolist())
    if dataclasses.is_dataclass(v) and not isinstance(v, type):
        return {f.name: to_plain(getattr(v, f.name)) for f in dataclasses.fields(v)
                if not f.name.startswith("_")}
    if isinstance(v, dict):
        return {str(k) if not isinstance(k, tuple) else ":".join(map(str, k)): to_plain(x)
                for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = [to_plain(x) for x in v]
        if isinstance(v, (set, frozenset)):
            items.sort(key=lambda x: json.dumps(x, sort_keys=True))
        return items
    return repr(v)


def report_dict(report: Report) -> dict:
    checks = sorted(report.checks, key=lambda c: c.check_id)
    return {
        "schema": SCHEMA,
        "config": to_plain(report.config),
        "status": report.status,
        "counts": report.counts(),
        "checks": [{"checkId": c.check_id, "status": c.status,
                    "witness": to_plain(c.witness), "metrics": to_plain(c.metrics),
                    "message": c.message} for c in checks],
    }


def emit_report(report: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report_dict(report), sort_keys=True, indent=2,
                           ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "text":
        d = report_dict(report)
        lines = [f"{SCHEMA} suite={d['config'].get('suite')} status={d['status']}"]
        for c in d["checks"]:
            tail = f"  {c['message']}" if c["message"] else ""
            lines.append(f"{c['status'].upper():12s} {c['checkId']}{tail}")
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")
