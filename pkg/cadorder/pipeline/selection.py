"""Picking one heuristic per problem from the three classifier margins."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from cadorder.errors import InvariantViolation, MissingMargin
from cadorder.heuristics.choice import Heuristic
from cadorder.ingest.labels import TIMEOUT, CellCountRecord
from cadorder.projection.ordering import VariableOrdering

# exact margin ties go to the earlier entry
PRECEDENCE = (Heuristic.BROWN, Heuristic.SOTD, Heuristic.NDRR)


def best_orderings(record: CellCountRecord) -> frozenset[VariableOrdering]:
    """
    All orderings reaching the smallest non-TIMEOUT count.

    Raises:
        AllTimeout: every ordering timed out.
    """
    best = record.minimum()
    return frozenset(o for o, c in record.counts.items() if c != TIMEOUT and c == best)


def select_heuristic(margins: Mapping[Heuristic, float]) -> Heuristic:
    """The heuristic with the most positive (or least negative) margin."""
    for h in PRECEDENCE:
        if h not in margins or not math.isfinite(margins[h]):
            raise MissingMargin(f"no finite margin for {h.value}")
    return max(PRECEDENCE, key=lambda h: (margins[h], -PRECEDENCE.index(h)))


@dataclass(frozen=True)
class SelectionResult:
    problem_id: str
    margins: Mapping[Heuristic, float]
    selected: Heuristic
    per_heuristic_success: Mapping[Heuristic, bool]

    def __post_init__(self):
        if self.selected != select_heuristic(self.margins):
            raise InvariantViolation(f"{self.problem_id}: {self.selected.value} does not attain the best margin")
        if set(self.per_heuristic_success) != set(PRECEDENCE):
            raise InvariantViolation(f"{self.problem_id}: success flags must cover all three heuristics")

    @property
    def ml_success(self) -> bool:
        return self.per_heuristic_success[self.selected]

    @classmethod
    def from_margins(
        cls,
        problem_id: str,
        margins: Mapping[Heuristic, float],
        per_heuristic_success: Mapping[Heuristic, bool],
    ) -> SelectionResult:
        return cls(problem_id, dict(margins), select_heuristic(margins), dict(per_heuristic_success))
