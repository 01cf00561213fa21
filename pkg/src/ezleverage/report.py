"""Structured pass/fail records produced by the validation routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckResult:
    name: str
    passed: bool | None  # None marks a skipped check
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def skipped(self) -> bool:
        return self.passed is None

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": _plain(self.detail)}


@dataclass
class ValidationReport:
    """An ordered collection of named checks.

    A report passes when every non-skipped check passes. Reports can be
    merged with :meth:`extend` and serialised with :meth:`to_dict`.
    """

    title: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool | None, **detail: Any) -> CheckResult:
        result = CheckResult(name, None if passed is None else bool(passed), detail)
        self.checks.append(result)
        return result

    def skip(self, name: str, reason: str) -> CheckResult:
        return self.add(name, None, reason=reason)

    def extend(self, other: "ValidationReport", prefix: str | None = None) -> None:
        for c in other.checks:
            name = f"{prefix}.{c.name}" if prefix else c.name
            self.checks.append(CheckResult(name, c.passed, dict(c.detail)))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.passed is not None)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.passed is False]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "SKIP" if c.passed is None else ("PASS" if c.passed else "FAIL")
            out.append(f"[{status}] {c.name}")
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _plain(obj: Any) -> Any:
    """Convert numpy scalars/arrays and nested containers to JSON-able values."""
    import numpy as np

    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if v != v:
            return "nan"
        if v in (float("inf"), float("-inf")):
            return "inf" if v > 0 else "-inf"
        return float(f"{v:.12g}")
    return obj
