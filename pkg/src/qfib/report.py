"""Three-valued verdicts and deterministic reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
_RANK = {PASS: 0, INCONCLUSIVE: 1, FAIL: 2}


@dataclass
class Verdict:
    name: str
    status: str
    claim: str = ""
    detail: str = ""
    witness: str | None = None
    cap: int | None = None
    data: dict = field(default_factory=dict)

    def __bool__(self):
        return self.status == PASS

    def to_json(self):
        out = {"name": self.name, "status": self.status, "claim": self.claim}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        if self.cap is not None:
            out["cap"] = self.cap
        if self.data:
            out["data"] = self.data
        return out


def combine(name, verdicts, claim=""):
    """Worst status wins; the first non-passing entry supplies the witness."""
    verdicts = list(verdicts)
    status = PASS
    for v in verdicts:
        if _RANK[v.status] > _RANK[status]:
            status = v.status
    bad = next((v for v in verdicts if v.status != PASS), None)
    return Verdict(name, status, claim,
                   detail=f"{sum(1 for v in verdicts if v)}/{len(verdicts)} sub-checks pass",
                   witness=None if bad is None else f"{bad.name}: {bad.witness or bad.detail}")


class Report:
    def __init__(self, title, meta=None):
        self.title = title
        self.meta = dict(meta or {})
        self.entries = []

    def add(self, v):
        if isinstance(v, Verdict):
            self.entries.append(v)
        else:
            self.entries.extend(v)
        return v

    @property
    def status(self):
        status = PASS
        for v in self.entries:
            if _RANK[v.status] > _RANK[status]:
                status = v.status
        return status

    def exit_code(self):
        return {PASS: 0, FAIL: 1, INCONCLUSIVE: 2}[self.status]

    def to_json(self):
        return json.dumps({"title": self.title, "meta": self.meta, "status": self.status,
                           "entries": [v.to_json() for v in self.entries]},
                          indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_markdown(self):
        lines = [f"# {self.title}", ""]
        for k in sorted(self.meta):
            lines.append(f"- {k}: {self.meta[k]}")
        lines += ["", f"Overall: **{self.status}**", "",
                  "| check | status | claim | detail |", "|---|---|---|---|"]
        for v in self.entries:
            det = v.detail if v.witness is None else f"{v.detail} (witness: {v.witness})"
            det = det.replace("|", "\\|")
            lines.append(f"| {v.name} | {v.status} | {v.claim.replace('|', chr(92) + '|')} | {det} |")
        return "\n".join(lines) + "\n"
