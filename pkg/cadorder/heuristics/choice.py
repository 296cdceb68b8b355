"""The result type shared by all ordering heuristics."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional

from cadorder.errors import InvariantViolation
from cadorder.projection.ordering import VariableOrdering


class Heuristic(str, Enum):
    BROWN = "brown"
    SOTD = "sotd"
    NDRR = "ndrr"

    @property
    def label(self) -> str:
        return "Brown" if self is Heuristic.BROWN else self.value


@dataclass(frozen=True)
class HeuristicChoice:
    heuristic: Heuristic
    chosen: VariableOrdering
    tied_candidates: tuple[VariableOrdering, ...]
    measure: Optional[int] = None

    def __post_init__(self):
        if not self.tied_candidates or self.chosen != min(self.tied_candidates):
            raise InvariantViolation(f"{self.heuristic.value}: chosen ordering is not the least tied candidate")

    def render(self) -> str:
        """Stable one-line form used by the CLI."""
        tied = ";".join(str(o) for o in self.tied_candidates)
        measure = "-" if self.measure is None else str(self.measure)
        return f"{self.heuristic.value} chosen={self.chosen} tied={tied} measure={measure}"


def choose_minimum(heuristic: Heuristic, scores: Mapping[VariableOrdering, int]) -> HeuristicChoice:
    """Minimize a measure over orderings; ties go to the lexicographically least."""
    best = min(scores.values())
    tied = tuple(sorted(o for o, s in scores.items() if s == best))
    return HeuristicChoice(heuristic=heuristic, chosen=tied[0], tied_candidates=tied, measure=best)
