"""Golden comparison of computed measures against the reference table."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Dict, List, Optional

from .errors import FermionOccupancyViolation
from .measures import full_report
from .parser import parse_state

TOL = 1e-9
COLUMNS = ("E_M", "S_b", "S_f", "E_P")


def load_expected(path: Optional[str] = None) -> List[dict]:
    if path is None:
        text = resources.files("fockent").joinpath("data/table1.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)["rows"]


def _value(x) -> Optional[float]:
    if x is None:
        return None
    return float(Fraction(str(x)))


@dataclass
class RowResult:
    state: str
    expected: Dict[str, Optional[float]]
    computed: Dict[str, Optional[float]]
    fermion_valid: bool
    mismatches: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "state": self.state,
            "expected": self.expected,
            "computed": self.computed,
            "fermion_valid": self.fermion_valid,
            "mismatches": self.mismatches,
            "pass": self.passed,
        }


def _same(a: Optional[float], b: Optional[float]) -> bool:
    if a is None or b is None:
        return a is None and b is None
    return abs(a - b) <= TOL


def evaluate_row(row: dict) -> RowResult:
    text = row["state"]
    expected = {c: _value(row.get(c)) for c in COLUMNS}
    boson = full_report(*parse_state(text, "boson"))
    computed = {"E_M": boson.e_m, "S_b": boson.s_single, "S_f": None, "E_P": boson.e_p}
    mismatches = []
    try:
        fermion = full_report(*parse_state(text, "fermion"))
    except FermionOccupancyViolation:
        fermion = None
    if fermion is not None:
        computed["S_f"] = fermion.s_single
        # mode and particle entanglement do not depend on the statistics
        if not _same(fermion.e_m, boson.e_m):
            mismatches.append("E_M(fermion)")
        if not _same(fermion.e_p, boson.e_p):
            mismatches.append("E_P(fermion)")
    for c in COLUMNS:
        if not _same(computed[c], expected[c]):
            mismatches.append(c)
    return RowResult(text, expected, computed, fermion is not None, mismatches)


def run_table1(path: Optional[str] = None) -> List[RowResult]:
    return [evaluate_row(r) for r in load_expected(path)]
