"""Per-heuristic training labels from ground-truth cell counts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from cadorder.heuristics.choice import HeuristicChoice
from cadorder.features.extract import extract_features
from cadorder.features.normalize import NormalizationParams, apply_normalization
from cadorder.ingest.labels import TIMEOUT, CellCountRecord
from cadorder.ingest.problem import ProblemInstance
from cadorder.projection.ordering import VariableOrdering


@dataclass(frozen=True)
class LabeledExample:
    problem_id: str
    features: tuple[float, ...]
    label: int

    def __post_init__(self):
        if self.label not in (1, -1):
            raise ValueError(f"label must be +1 or -1, got {self.label}")


def is_best(ordering: VariableOrdering, record: CellCountRecord) -> bool:
    """True iff ordering reaches the minimal count (a TIMEOUT never does)."""
    best = record.minimum()
    count = record.count_for(ordering)
    return count != TIMEOUT and count == best


def label_example(
    problem: ProblemInstance,
    heuristic_choice: HeuristicChoice,
    record: CellCountRecord,
    params: Optional[NormalizationParams] = None,
) -> LabeledExample:
    """
    +1 if the heuristic's ordering gives the fewest cells, else -1.

    Features are normalized with params when given, raw otherwise.

    Raises:
        AllTimeout: the record has no usable count.
    """
    label = 1 if is_best(heuristic_choice.chosen, record) else -1
    fv = extract_features(problem)
    features = apply_normalization(params, fv) if params is not None else fv.as_floats()
    return LabeledExample(problem_id=problem.id, features=features, label=label)
