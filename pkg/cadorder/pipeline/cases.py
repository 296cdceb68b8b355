"""
Case breakdown of test problems and the tables derived from it.

A case is the pattern of successes (ML, sotd, ndrr, Brown). Thirteen
patterns are possible: at least one fixed heuristic always succeeds, and
when all three do, the selection cannot fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from cadorder.errors import InconsistentCounts, NoWinner
from cadorder.heuristics.choice import Heuristic
from cadorder.pipeline.selection import PRECEDENCE, SelectionResult

Pattern = tuple[bool, bool, bool, bool]  # ML, sotd, ndrr, Brown

Y, N = True, False

CASE_TABLE: dict[int, Pattern] = {
    1: (Y, Y, Y, Y),
    2: (Y, Y, Y, N),
    3: (N, Y, Y, N),
    4: (Y, Y, N, Y),
    5: (N, Y, N, Y),
    6: (Y, N, Y, Y),
    7: (N, N, Y, Y),
    8: (Y, Y, N, N),
    9: (N, Y, N, N),
    10: (Y, N, Y, N),
    11: (N, N, Y, N),
    12: (Y, N, N, Y),
    13: (N, N, N, Y),
}

_CASE_OF_PATTERN = {pattern: case for case, pattern in CASE_TABLE.items()}

# cases that differ only in ML success
CASE_PAIRS = ((2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13))

TOTAL_COLUMNS = ("ml", "sotd", "ndrr", "brown")


def pattern_of(result: SelectionResult) -> Pattern:
    s = result.per_heuristic_success
    return (result.ml_success, s[Heuristic.SOTD], s[Heuristic.NDRR], s[Heuristic.BROWN])


def case_of(result: SelectionResult) -> int:
    """
    Raises:
        NoWinner: no fixed heuristic succeeded.
    """
    pattern = pattern_of(result)
    if not any(pattern[1:]):
        raise NoWinner(f"{result.problem_id}: no heuristic reached the minimal cell count")
    return _CASE_OF_PATTERN[pattern]


def fixed_successes(case: int) -> int:
    return sum(CASE_TABLE[case][1:])


@dataclass(frozen=True)
class CaseBreakdown:
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        unknown = set(self.counts) - set(CASE_TABLE)
        if unknown:
            raise InconsistentCounts(f"unknown case ids {sorted(unknown)}")
        if any(c < 0 for c in self.counts.values()):
            raise InconsistentCounts("case counts must be nonnegative")

    def count(self, case: int) -> int:
        return self.counts.get(case, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> CaseBreakdown:
        """Counts for cases 1..13 in order."""
        values = list(counts)
        if len(values) != len(CASE_TABLE):
            raise InconsistentCounts(f"expected {len(CASE_TABLE)} case counts, got {len(values)}")
        return cls(dict(zip(sorted(CASE_TABLE), values)))

    @classmethod
    def from_results(cls, results: Iterable[SelectionResult]) -> CaseBreakdown:
        counts = {case: 0 for case in CASE_TABLE}
        for r in results:
            counts[case_of(r)] += 1
        return cls(counts)


def random_baseline(breakdown: CaseBreakdown, total: int) -> float:
    """
    Expected success rate of picking one of the three heuristics uniformly.

    Raises:
        InconsistentCounts: total differs from the sum of the case counts.
    """
    if breakdown.total != total or total <= 0:
        raise InconsistentCounts(f"case counts sum to {breakdown.total}, expected {total}")
    expected = sum(Fraction(fixed_successes(case), 3) * breakdown.count(case) for case in CASE_TABLE)
    return float(expected / total)


def heuristic_totals(breakdown: CaseBreakdown) -> dict[str, int]:
    """Number of problems each column succeeded on, ML included."""
    return {
        name: sum(breakdown.count(case) for case, pattern in CASE_TABLE.items() if pattern[i])
        for i, name in enumerate(TOTAL_COLUMNS)
    }


@dataclass(frozen=True)
class ConditionalRow:
    sotd: bool
    ndrr: bool
    brown: bool
    ml_yes: int
    ml_no: int
    comparator: Fraction

    @property
    def proportion(self) -> Optional[float]:
        n = self.ml_yes + self.ml_no
        return self.ml_yes / n if n else None


def conditional_success(breakdown: CaseBreakdown) -> list[ConditionalRow]:
    """ML success among problems with the same fixed-heuristic pattern, against picking at random."""
    rows = []
    for yes, no in CASE_PAIRS:
        _, sotd, ndrr, brown = CASE_TABLE[yes]
        rows.append(
            ConditionalRow(
                sotd=sotd,
                ndrr=ndrr,
                brown=brown,
                ml_yes=breakdown.count(yes),
                ml_no=breakdown.count(no),
                comparator=Fraction(fixed_successes(yes), 3),
            )
        )
    return rows


def best_single_heuristic(breakdown: CaseBreakdown) -> tuple[Heuristic, float]:
    """The fixed heuristic with the most successes and its success rate."""
    if breakdown.total == 0:
        raise InconsistentCounts("no evaluated problems")
    totals = heuristic_totals(breakdown)
    best = max(PRECEDENCE, key=lambda h: (totals[h.value], -PRECEDENCE.index(h)))
    return best, totals[best.value] / breakdown.total
