"""Report records produced by the checkers and sweeps, with JSON and CSV forms.

Every number in a report is an int or a reduced fraction serialised as
decimal strings; ``elapsed_ms`` is the only field that varies between runs
and is dropped when ``timing=False``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .formats import rational_to_json

STRICT = "strict"
EQUALITY = "equality"
VIOLATION = "violation"


def bound_status(lhs: int, rhs: int) -> str:
    if lhs < rhs:
        return STRICT
    if lhs == rhs:
        return EQUALITY
    return VIOLATION


@dataclass(frozen=True)
class BoundReport:
    n: int
    lhs: int
    rhs: int
    status: str
    avd: Fraction
    extremal_shape: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "status": self.status,
            "avd": rational_to_json(self.avd),
            "extremal_shape": self.extremal_shape,
        }


@dataclass
class SweepReport:
    family: str
    n: int
    total: int = 0
    equality_cases: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations and not self.mismatches

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "family": self.family,
            "n": self.n,
            "total": self.total,
            "violations": self.violations,
            "equality_cases": self.equality_cases,
            "mismatches": self.mismatches,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


@dataclass
class ConjectureReport:
    n: int
    mode: str
    tested: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "family": "labeled-graphs",
            "n": self.n,
            "mode": self.mode,
            "tested": self.tested,
            "counterexamples": self.counterexamples,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


@dataclass(frozen=True)
class SupportLemmaReport:
    t: int
    neighbors_are_supports: bool
    h_bound: bool
    h_equality: bool
    conclusion: bool
    equality: bool

    @property
    def hypotheses(self) -> bool:
        return self.neighbors_are_supports and self.h_bound

    @property
    def predicted_equality(self) -> bool:
        return self.t in (1, 2) and self.h_equality

    @property
    def consistent(self) -> bool:
        """Conclusion and the equality characterisation hold, or the gate is closed."""
        if not self.hypotheses:
            return True
        return self.conclusion and self.equality == self.predicted_equality


@dataclass(frozen=True)
class GraphRow:
    code: str
    n: int
    d1: int
    dp1: int
    status: str
    extremal_shape: bool
    # scope flags: the bound needs no isolated vertices, the characterisation a forest
    forest: bool = True
    isolated: bool = False

    @property
    def avd(self) -> Fraction:
        return Fraction(self.dp1, self.d1)


CSV_HEADER = ["canonical_code", "n", "D1", "Dp1", "avd_num", "avd_den", "status", "extremal_shape"]


def rows_to_csv(rows: list[GraphRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        q = r.avd
        w.writerow([r.code, r.n, r.d1, r.dp1, q.numerator, q.denominator, r.status, str(r.extremal_shape).lower()])
    return buf.getvalue()


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)
