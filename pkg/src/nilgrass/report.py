"""Pass/fail bookkeeping shared by the verification drivers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Case:
    name: str
    params: dict[str, Any]
    passed: bool
    witness: str | None = None

    def line(self) -> str:
        params = " ".join(f"{k}={_fmt(v)}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}" + (f" {params}" if params else "")
        if not self.passed and self.witness:
            text += f" :: {self.witness}"
        return text

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "passed": self.passed,
            "witness": self.witness,
        }


@dataclass
class VerificationReport:
    title: str
    cases: list[Case] = field(default_factory=list)

    def check(self, name: str, passed: bool, witness: Any = None, **params: Any) -> bool:
        """Record one case; the witness is only kept on failure."""
        w = None
        if not passed:
            w = witness() if callable(witness) else witness
            w = "counterexample" if w is None else str(w)
        self.cases.append(Case(name, params, bool(passed), w))
        return bool(passed)

    def extend(self, other: VerificationReport) -> None:
        self.cases.extend(other.cases)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def summary(self) -> str:
        bad = len(self.failures)
        verdict = "PASS" if not bad else "FAIL"
        return f"{self.title}: {verdict} ({len(self.cases) - bad}/{len(self.cases)} cases)"

    def lines(self, failures_only: bool = False) -> list[str]:
        cases = self.failures if failures_only else self.cases
        return [c.line() for c in cases] + [self.summary()]

    def to_json(self) -> dict[str, Any]:
        return {"title": self.title, "passed": self.passed, "cases": [c.to_json() for c in self.cases]}


def _fmt(v: Any) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(map(str, v)) + ")"
    return str(v)


def _jsonable(v: Any) -> Any:
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)
