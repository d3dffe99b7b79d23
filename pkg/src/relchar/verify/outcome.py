"""Result types for theorem checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

SCHEMA_VERSION = 1


class Status(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    INAPPLICABLE = "Inapplicable"
    SKIPPED = "Skipped"

    def __str__(self) -> str:
        return self.value


@dataclass
class TheoremOutcome:
    theorem: str
    group: str
    normal: dict[str, Any] | None
    status: Status
    witness: dict[str, Any] = field(default_factory=dict)
    reason: str | None = None
    millis: float | None = None

    def to_json(self, timing: bool = False) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "theorem": self.theorem,
            "group": self.group,
            "normal": self.normal,
            "status": self.status.value,
            "witness": self.witness,
        }
        if self.reason is not None:
            doc["reason"] = self.reason
        if timing and self.millis is not None:
            doc["millis"] = round(self.millis, 3)
        return doc


@dataclass
class SuiteReport:
    outcomes: list[TheoremOutcome]
    environment: dict[str, Any] = field(default_factory=dict)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "inapplicable": 0, "skipped": 0}
        for o in self.outcomes:
            out[o.status.value.lower()] += 1
        return out

    @property
    def failed(self) -> list[TheoremOutcome]:
        return [o for o in self.outcomes if o.status is Status.FAIL]

    def by_theorem(self) -> dict[str, dict[str, int]]:
        table: dict[str, dict[str, int]] = {}
        for o in self.outcomes:
            row = table.setdefault(o.theorem, {"pass": 0, "fail": 0, "inapplicable": 0, "skipped": 0})
            row[o.status.value.lower()] += 1
        return table

    def to_json(self, timing: bool = False) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "environment": self.environment,
            "aggregate": self.counts(),
            "outcomes": [o.to_json(timing) for o in self.outcomes],
        }
