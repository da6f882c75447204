"""Machine-readable run reports with deterministic serialization.

Rationals are serialized as "p/q" strings; timing is segregated under its
own key so that reports are byte-identical across runs modulo that field.
Exit status convention: 0 all pass, 1 any fail, 2 inconclusive but no fail.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = ["Report", "Check", "TOOL_VERSION", "jsonable"]

TOOL_VERSION = "kmcat 0.1.0"

PASS = "pass"
FAIL = "fail"
UNTESTED = "untested"
INCONCLUSIVE = "inconclusive"


@dataclass
class Check:
    name: str
    status: str
    detail: object = None


@dataclass
class Report:
    command: str
    inputs: dict
    checks: list = field(default_factory=list)
    started: float = field(default_factory=time.time)

    def add(self, name, status, detail=None):
        self.checks.append(Check(name, status, detail))

    def add_bool(self, name, ok, detail=None):
        self.add(name, PASS if ok else FAIL, detail)

    def exit_code(self):
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return 1
        if INCONCLUSIVE in statuses:
            return 2
        return 0

    def to_dict(self):
        return {
            "tool": TOOL_VERSION,
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "checks": [
                {"name": c.name, "status": c.status,
                 **({"detail": jsonable(c.detail)} if c.detail is not None else {})}
                for c in self.checks
            ],
            "summary": {
                "pass": sum(1 for c in self.checks if c.status == PASS),
                "fail": sum(1 for c in self.checks if c.status == FAIL),
                "untested": sum(1 for c in self.checks if c.status == UNTESTED),
                "inconclusive": sum(
                    1 for c in self.checks if c.status == INCONCLUSIVE),
            },
            "timing": {"seconds": round(time.time() - self.started, 3)},
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def jsonable(obj):
    """Recursively convert to JSON-safe data; Fractions become strings."""
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}" if obj.denominator != 1 \
            else str(obj.numerator)
    if isinstance(obj, dict):
        return {_key(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set)):
        return [jsonable(v) for v in (sorted(obj) if isinstance(obj, set) else obj)]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return repr(obj)


def _key(k):
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)
