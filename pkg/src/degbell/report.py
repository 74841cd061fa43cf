"""Structured outcome of an identity check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .exact import LambdaPoly, format_rational


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, LambdaPoly):
        return value.to_strings()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


@dataclass
class IdentityReport:
    identity_id: str
    samples_run: int = 0
    status: str = "pass"
    counterexample: Optional[dict] = None
    elapsed: float = 0.0
    skipped: int = 0
    checks: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def record(self, lhs, rhs, **context) -> bool:
        """Compare one instance; keep the first failure. Returns True on equality."""
        self.checks += 1
        if lhs == rhs:
            return True
        if self.counterexample is None:
            self.status = "fail"
            self.counterexample = {"lhs": lhs, "rhs": rhs, **context}
        return False

    def merge(self, other: "IdentityReport") -> "IdentityReport":
        self.checks += other.checks
        self.skipped += other.skipped
        if other.status == "fail" and self.counterexample is None:
            self.status = "fail"
            self.counterexample = dict(other.counterexample or {})
            self.counterexample.setdefault("sub_identity", other.identity_id)
        return self

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "identity_id": self.identity_id,
            "status": self.status,
            "samples": self.samples_run,
            "checks": self.checks,
            "skipped": self.skipped,
            "counterexample": _jsonable(self.counterexample),
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out
