"""Verification outcomes shared by every check."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    # A claim that does not hold as literally written, but whose intended
    # reading is ambiguous. Never counted as a tool failure.
    FINDING = "finding"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Witness:
    input: str
    got: str
    expected: str

    def to_dict(self) -> dict:
        return {"input": self.input, "got": self.got, "expected": self.expected}


@dataclass(frozen=True)
class CheckResult:
    name: str
    paper_line: str
    status: Status
    witness: Witness | None = None

    def __post_init__(self):
        if self.status is not Status.PASS and self.witness is None:
            raise ValueError(f"{self.status} result {self.name!r} needs a witness")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "paper_ref": self.paper_line,
            "status": self.status.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def verdict(name, paper_line, witness=None, *, on_failure=Status.FAIL) -> CheckResult:
    """Build a result: pass when ``witness`` is None, else ``on_failure``."""
    if witness is None:
        return CheckResult(name, paper_line, Status.PASS)
    if not isinstance(witness, Witness):
        witness = Witness(*(str(w) for w in witness))
    return CheckResult(name, paper_line, on_failure, witness)
