"""Text, JSON and CSV rendering of a command's RunReport.

Reports hold no timings or paths, so stdout is identical across runs and
worker counts for fixed inputs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from analysis import WeightEnumerator, enumerator_to_text
from verify_suites import CheckResult

FORMATS = ("text", "json", "csv")


@dataclass
class RunReport:
    command: str
    m: int
    b: Optional[int]
    modulus_hex: str
    enumerator: Optional[WeightEnumerator] = None
    result: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "m": self.m,
            "b": self.b,
            "modulus_hex": self.modulus_hex,
            "enumerator": [
                {"weight": w, "count": c} for w, c in self.enumerator.items()
            ]
            if self.enumerator is not None
            else [],
            "result": self.result,
            "checks": [
                {
                    "name": c.name,
                    "pass": c.passed,
                    "detail": c.detail,
                    "counterexample": list(c.counterexample)
                    if c.counterexample is not None
                    else None,
                }
                for c in self.checks
            ],
        }


def _value_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_value_text(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_value_text(v) for v in value) + "]"
    if value is None:
        return "undefined"
    return str(value)


def render_text(report: RunReport) -> str:
    lines: List[str] = []
    if report.enumerator is not None:
        lines.append(enumerator_to_text(report.enumerator))
    for key, value in report.result.items():
        lines.append(f"{key}: {_value_text(value)}")
    for check in report.checks:
        lines.append(check.line())
    if report.checks:
        failed = sum(1 for c in report.checks if not c.passed)
        lines.append(
            "ALL CHECKS PASSED" if not failed else f"{failed} of {len(report.checks)} CHECKS FAILED"
        )
    return "\n".join(lines)


def render_json(report: RunReport) -> str:
    return json.dumps(report.to_dict(), indent=2)


def render_csv(report: RunReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["section", "name", "value", "detail"])
    if report.enumerator is not None:
        for w, c in report.enumerator.items():
            writer.writerow(["enumerator", w, c, ""])
    for key, value in report.result.items():
        writer.writerow(["result", key, _value_text(value), ""])
    for check in report.checks:
        detail = check.detail
        if check.counterexample is not None:
            detail += f" counterexample={check.counterexample}"
        writer.writerow(["check", check.name, "pass" if check.passed else "fail", detail])
    return buf.getvalue().rstrip("\n")


def render(report: RunReport, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    if fmt == "csv":
        return render_csv(report)
    return render_text(report)
