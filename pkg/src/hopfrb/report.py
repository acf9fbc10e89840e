"""Pass/fail reports with concrete counterexample witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .tensor import SparseTensor


@dataclass(frozen=True)
class Witness:
    inputs: tuple  # basis indices of the inputs, in the order the check quantifies them
    lhs: SparseTensor
    rhs: SparseTensor

    def to_dict(self, fmt: Callable = str) -> dict:
        return {
            "inputs": list(self.inputs),
            "lhs": tensor_to_json(self.lhs, fmt),
            "rhs": tensor_to_json(self.rhs, fmt),
        }


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    witness: Witness | None = None
    cases: int = 0
    failures: int = 0
    formula: str = ""
    note: str = ""

    def __post_init__(self):
        if not self.passed and self.witness is None and not self.note:
            raise ValueError(f"failing check {self.label!r} must carry a witness or a note")

    def to_dict(self, fmt: Callable = str) -> dict:
        out = {"label": self.label, "passed": self.passed, "cases": self.cases, "failures": self.failures}
        if self.formula:
            out["formula"] = self.formula
        if self.note:
            out["note"] = self.note
        if self.witness is not None:
            out["witness"] = self.witness.to_dict(fmt)
        return out


@dataclass
class VerificationReport:
    subject: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for c in other.checks:
            if prefix:
                c = Check(prefix + c.label, c.passed, c.witness, c.cases, c.failures, c.formula, c.note)
            self.checks.append(c)
        return self

    def __getitem__(self, label: str) -> Check:
        for c in self.checks:
            if c.label == label:
                return c
        raise KeyError(label)

    def labels(self) -> list[str]:
        return [c.label for c in self.checks]

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def failed_labels(self) -> list[str]:
        return [c.label for c in self.checks if not c.passed]

    def to_dict(self, fmt: Callable = str) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "failed": self.failed_labels(),
            "checks": [c.to_dict(fmt) for c in self.checks],
        }

    def summary(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            extra = f" witness inputs={c.witness.inputs}" if c.witness is not None else ""
            lines.append(f"  [{mark}] {c.label} ({c.cases} cases){extra}")
        return "\n".join(lines)


def run_check(label: str, cases: Iterable[tuple], formula: str = "") -> Check:
    """Evaluate ``(inputs, lhs, rhs)`` triples; keep the first mismatch as witness."""
    n = bad = 0
    witness = None
    for inputs, lhs, rhs in cases:
        n += 1
        if lhs != rhs:
            bad += 1
            if witness is None:
                witness = Witness(tuple(inputs), lhs, rhs)
    return Check(label, bad == 0, witness, n, bad, formula)


def flag_check(label: str, ok: bool, note: str = "", formula: str = "") -> Check:
    """A check with no tensor witness, e.g. an aggregate of another report."""
    return Check(label, ok, None, 1, 0 if ok else 1, formula, note or ("" if ok else "failed"))


def tensor_to_json(t: SparseTensor, fmt: Callable = str) -> dict:
    return {
        "dims": list(t.dims),
        "entries": [{"index": list(k), "c": fmt(c)} for k, c in sorted(t.items())],
    }
