"""Identity-check records and verification reports with canonical JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def jsonable(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (set, frozenset)):
        return sorted(jsonable(v) for v in x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


@dataclass
class IdentityCheck:
    identity: str
    h: str
    params: dict
    lhs: object
    rhs: object
    passed: bool = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = self.lhs == self.rhs

    def to_json(self):
        return {
            "identity": self.identity,
            "h": self.h,
            "params": jsonable(self.params),
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
            "pass": bool(self.passed),
        }


@dataclass
class VerifyReport:
    suite: str
    entries: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def summary(self):
        passed = sum(1 for e in self.entries if e.passed)
        return {"total": len(self.entries), "passed": passed,
                "failed": len(self.entries) - passed}

    @property
    def ok(self):
        return all(e.passed for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.passed]

    def to_json(self, include_timing=False):
        out = {
            "format": 1,
            "suite": self.suite,
            "summary": self.summary,
            "entries": [e.to_json() for e in self.entries],
        }
        if include_timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, include_timing=False):
        return canonical_dumps(self.to_json(include_timing))


def canonical_dumps(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
