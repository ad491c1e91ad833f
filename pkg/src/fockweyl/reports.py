"""Deterministic verification reports with a stable JSON schema."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA = "fwl-report/1"
GENERATOR = "fockweyl 0.1.0"


@dataclass
class CaseResult:
    case_id: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self):
        return {"case": self.case_id, "passed": self.passed, "detail": self.detail}


@dataclass
class Report:
    family: str
    config: dict
    cases: list

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if not c.passed)

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def sorted_cases(self):
        return sorted(self.cases, key=lambda c: c.case_id)

    def to_json(self):
        return {
            "schema": SCHEMA,
            "generator": GENERATOR,
            "family": self.family,
            "config": self.config,
            "cases": [c.to_json() for c in self.sorted_cases()],
            "passed": self.passed,
            "failed": self.failed,
        }


def render_json(report: Report) -> str:
    return json.dumps(report.to_json(), indent=2, ensure_ascii=True) + "\n"


def render_text(report: Report) -> str:
    lines = [f"family: {report.family}"]
    for k, v in report.config.items():
        lines.append(f"  {k}: {v}")
    for c in report.sorted_cases():
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.case_id}")
        if not c.passed and c.detail:
            lines.append(f"      {json.dumps(c.detail, ensure_ascii=True)}")
    lines.append(f"passed: {report.passed}  failed: {report.failed}")
    return "\n".join(lines) + "\n"
