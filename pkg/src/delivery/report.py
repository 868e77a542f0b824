"""Plain-text verification reports."""

import logging
from dataclasses import dataclass, field

import pandas as pd

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return PASS if self.passed else FAIL


@dataclass
class VerificationReport:
    """Ordered list of named checks."""

    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))
        if not passed:
            logger.error(f"Check {name} failed: {detail}")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"check": c.name, "status": c.status, "detail": c.detail} for c in self.checks],
            columns=["check", "status", "detail"],
        )


def format_table(report: VerificationReport) -> str:
    """Aligned text table with a summary line."""
    if not report.checks:
        return "no checks run"
    frame = report.to_frame()
    table = frame.to_string(index=False, justify="left")
    ok = len(report.checks) - len(report.failures())
    return f"{table}\n\n{ok}/{len(report.checks)} checks passed"


def format_check_lines(report: VerificationReport) -> str:
    """`CHECK <name> PASS|FAIL`, one per line."""
    return "\n".join(f"CHECK {c.name} {c.status}" for c in report.checks)
