"""Machine-readable verification reports.

JSON output is byte-deterministic for a fixed config: keys are emitted in a
fixed order and wall-clock millis are normalized to 0 there (the text format
shows real timings).  The convention fingerprint ties every report and cache
file to the exact table and formula conventions that produced it.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import __version__
from .octonions import TABLE

REPORT_VERSION = 1

# tags for the adopted conventions; any change must change the fingerprint
_CONVENTIONS = (
    "cross: (2 XoY - tr(X)Y - tr(Y)X + (tr(X)tr(Y) - (X,Y))E)/2",
    "vee: [Lx, Ly] + L(XoY - (X,Y)E/3)",
    "e7 action: (phiX - nu/3 X + 2BxY + etaA, 2AxX - tphiY + nu/3 Y + xiB, (A,Y)+nu xi, (B,X)-nu eta)",
    "pq cross: phi=-1/2(XvW+ZvY), A=-1/4(2YxW-xiZ-zetaX), B=1/4(2XxZ-etaW-omegaY), nu=1/8((X,W)+(Z,Y)-3(xi omega+zeta eta))",
    "skew: (X,W)-(Z,Y)+xi omega-zeta eta",
    "lambda: (X,Y,xi,eta)->(Y,-X,eta,-xi)",
    "jordan basis: E1,E2,E3,F1(e0..e7),F2,F3",
)


def convention_fingerprint() -> str:
    """Hash of the octonion table and all adopted normalizations."""
    h = hashlib.sha256()
    h.update(TABLE.render().encode())
    for line in _CONVENTIONS:
        h.update(line.encode())
    return h.hexdigest()[:16]


@dataclass
class Check:
    id: str
    description: str
    paper_tag: str
    status: str  # pass | fail | skip
    expected: str
    actual: str
    millis: int


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    version: int = REPORT_VERSION
    engine: str = __version__
    fingerprint: str = ""
    seed: int = 0

    def totals(self):
        t = {"pass": 0, "fail": 0, "skip": 0}
        for c in self.checks:
            t[c.status] += 1
        return t

    @property
    def ok(self) -> bool:
        return self.totals()["fail"] == 0

    def exit_code(self) -> int:
        return 0 if self.ok else 1


def emit_json(report: Report) -> str:
    """Stable-key-order JSON; millis normalized so identical configs emit
    identical bytes."""
    doc = {
        "version": report.version,
        "engine": report.engine,
        "suite": report.suite,
        "fingerprint": report.fingerprint,
        "seed": report.seed,
        "checks": [
            {
                "id": c.id,
                "description": c.description,
                "paper_tag": c.paper_tag,
                "status": c.status,
                "expected": c.expected,
                "actual": c.actual,
                "millis": 0,
            }
            for c in report.checks
        ],
        "totals": report.totals(),
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def emit_text(report: Report) -> str:
    lines = []
    lines.append(f"suite: {report.suite}    engine: {report.engine}    fingerprint: {report.fingerprint}")
    lines.append(f"seed: {report.seed}")
    lines.append("")
    wid = max((len(c.id) for c in report.checks), default=10)
    wtag = max((len(c.paper_tag) for c in report.checks), default=4)
    for c in report.checks:
        mark = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[c.status]
        lines.append(
            f"[{mark}] {c.id:<{wid}}  {c.paper_tag:<{wtag}}  "
            f"expected={c.expected} actual={c.actual}  ({c.millis} ms)"
        )
        if c.status == "fail":
            lines.append(f"       {c.description}")
    t = report.totals()
    lines.append("")
    lines.append(f"totals: {t['pass']} pass, {t['fail']} fail, {t['skip']} skip")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: str) -> str:
    if fmt == "json":
        return emit_json(report)
    if fmt == "text":
        return emit_text(report)
    raise ValueError(f"unknown format {fmt!r}")
