"""Machine-readable verdicts for batches of equivalence checks.

A CheckReport never claims an overall pass while any case is unknown:
fuel exhaustion is reported as inconclusive, not as failure or success.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .parser import pretty
from .reduction import (
    DEFAULT_FUEL,
    DISTINCT,
    EQUAL,
    EqVerdict,
    Fuel,
    OutOfFuel,
    beta_eta_normalize,
    unknown,
)
from .terms import Term, alpha_eq

REPORT_FORMAT = 1


@dataclass(frozen=True)
class CheckCase:
    label: str
    verdict: EqVerdict | bool
    steps: int | None = None
    witness: str | None = None

    @property
    def ok(self) -> bool:
        if isinstance(self.verdict, bool):
            return self.verdict
        return self.verdict.is_equal

    @property
    def unknown(self) -> bool:
        return isinstance(self.verdict, EqVerdict) and self.verdict.is_unknown

    def verdict_text(self) -> str:
        if isinstance(self.verdict, bool):
            return "pass" if self.verdict else "fail"
        return self.verdict.kind


@dataclass(frozen=True)
class CheckReport:
    subject: str
    cases: tuple[CheckCase, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.ok)

    @property
    def unknown(self) -> int:
        return sum(1 for c in self.cases if c.unknown)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed - self.unknown

    @property
    def overall(self) -> str:
        if self.failed:
            return "fail"
        if self.unknown:
            return "inconclusive"
        return "pass"

    def failures(self) -> list[CheckCase]:
        return [c for c in self.cases if not c.ok and not c.unknown]

    def to_dict(self) -> dict:
        return {
            "format": REPORT_FORMAT,
            "subject": self.subject,
            "overall": self.overall,
            "counts": {
                "passed": self.passed,
                "failed": self.failed,
                "unknown": self.unknown,
            },
            "cases": [
                {
                    "label": c.label,
                    "verdict": c.verdict_text(),
                    "steps": c.steps,
                    "witness": c.witness,
                }
                for c in self.cases
            ],
        }


def eq_case(label: str, lhs: Term, rhs: Term, fuel: Fuel = DEFAULT_FUEL) -> CheckCase:
    """Build one case by normalizing both sides and comparing up to alpha.
    On a definitive mismatch the witness records the left normal form."""
    left = beta_eta_normalize(lhs, fuel)
    right = beta_eta_normalize(rhs, fuel)
    stuck = []
    if isinstance(left, OutOfFuel):
        stuck.append(f"left side out of fuel after {left.steps} steps")
    if isinstance(right, OutOfFuel):
        stuck.append(f"right side out of fuel after {right.steps} steps")
    steps = left.steps + right.steps
    if stuck:
        return CheckCase(label, unknown("; ".join(stuck)), steps=steps)
    if alpha_eq(left.term, right.term):
        return CheckCase(label, EQUAL, steps=steps)
    return CheckCase(label, DISTINCT, steps=steps, witness=pretty(left.term))
