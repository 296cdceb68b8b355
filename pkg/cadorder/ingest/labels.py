"""
Ground-truth cell counts per ordering.

One record per line:

    problem_id metric ordering=count;ordering=count;...

where an ordering is a comma-separated variable list in elimination order and
count is a positive integer or TIMEOUT. Orderings absent from a record count
as TIMEOUT.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Final, Literal, Mapping, Sequence, Union

from cadorder.errors import AllTimeout, DuplicateOrdering, ParseError
from cadorder.polys.polynomial import Variable
from cadorder.projection.ordering import VariableOrdering

logger = logging.getLogger(__name__)

TIMEOUT: Final = "TIMEOUT"

Count = Union[int, Literal["TIMEOUT"]]


class Metric(str, Enum):
    OUTPUT_CELLS = "output_cells"            # quantifier-free runs
    CONSTRUCTED_CELLS = "constructed_cells"  # quantified runs


@dataclass(frozen=True)
class CellCountRecord:
    problem_id: str
    metric: Metric
    counts: Mapping[VariableOrdering, Count] = field(default_factory=dict)

    def count_for(self, ordering: VariableOrdering) -> Count:
        return self.counts.get(ordering, TIMEOUT)

    @property
    def usable(self) -> bool:
        return any(c != TIMEOUT for c in self.counts.values())

    def minimum(self) -> int:
        """Smallest non-TIMEOUT count."""
        finite = [c for c in self.counts.values() if c != TIMEOUT]
        if not finite:
            raise AllTimeout(f"{self.problem_id}: every ordering timed out")
        return min(finite)


def parse_labels(
    text: str,
    variables_for: Mapping[str, Sequence[Variable]],
) -> list[CellCountRecord]:
    """
    Parse a label file.

    Args:
        text: label file contents
        variables_for: problem id -> that problem's variables, used to resolve
            ordering names

    Returns:
        Records in file order, one per (problem id, metric). Records for
        problems missing from variables_for are skipped.

    Raises:
        ParseError: malformed line or duplicate record.
        UnknownOrdering: ordering naming undeclared variables.
        DuplicateOrdering: the same ordering twice in one record.
    """
    records: list[CellCountRecord] = []
    seen: set[tuple[str, Metric]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("expected 'problem_id metric ordering=count;...'", lineno, 1)
        problem_id, metric_text, entries = parts
        try:
            metric = Metric(metric_text)
        except ValueError:
            raise ParseError(f"unknown metric {metric_text!r}", lineno, len(problem_id) + 2)
        if problem_id not in variables_for:
            logger.debug("line %d: skipping labels for unloaded problem %r", lineno, problem_id)
            continue
        if (problem_id, metric) in seen:
            raise ParseError(f"second {metric.value} record for {problem_id!r}", lineno, 1)
        seen.add((problem_id, metric))

        by_name = {v.display_name: v for v in variables_for[problem_id]}
        counts: dict[VariableOrdering, Count] = {}
        for entry in filter(None, entries.split(";")):
            ordering_text, sep, count_text = entry.partition("=")
            if not sep:
                raise ParseError(f"entry {entry!r} lacks '='", lineno, 1)
            ordering = VariableOrdering.parse(ordering_text, by_name)
            if ordering in counts:
                raise DuplicateOrdering(f"{problem_id}: ordering {ordering} listed twice")
            counts[ordering] = _parse_count(count_text, lineno)
        records.append(CellCountRecord(problem_id, metric, counts))
    logger.debug("parsed %d label records", len(records))
    return records


def _parse_count(text: str, lineno: int) -> Count:
    if text == TIMEOUT:
        return TIMEOUT
    if not text.isdigit() or int(text) <= 0:
        raise ParseError(f"count must be a positive integer or TIMEOUT, got {text!r}", lineno, 1)
    return int(text)


def render_labels(records: Sequence[CellCountRecord]) -> str:
    """Label-file text; orderings written in lexicographic order."""
    lines = []
    for record in records:
        entries = ";".join(f"{o}={record.counts[o]}" for o in sorted(record.counts))
        lines.append(f"{record.problem_id} {record.metric.value} {entries}")
    return "\n".join(lines) + "\n" if lines else ""
