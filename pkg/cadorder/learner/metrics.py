"""Binary classification scores over labels in {-1, +1}."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from sklearn.metrics import confusion_matrix


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    tn: int
    fp: int
    fn: int

    def __post_init__(self):
        if min(self.tp, self.tn, self.fp, self.fn) < 0:
            raise ValueError("confusion counts must be nonnegative")

    @classmethod
    def from_labels(cls, y_true: Sequence[int], y_pred: Sequence[int]) -> ConfusionCounts:
        (tn, fp), (fn, tp) = confusion_matrix(list(y_true), list(y_pred), labels=[-1, 1])
        return cls(tp=int(tp), tn=int(tn), fp=int(fp), fn=int(fn))

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn


def mcc(c: ConfusionCounts) -> float:
    """Matthews correlation; the denominator is 1 when any of its sums is 0."""
    sums = (c.tp + c.fp, c.tp + c.fn, c.tn + c.fp, c.tn + c.fn)
    denominator = 1.0 if 0 in sums else math.sqrt(sums[0] * sums[1] * sums[2] * sums[3])
    return (c.tp * c.tn - c.fp * c.fn) / denominator


def f1(c: ConfusionCounts) -> float:
    denominator = 2 * c.tp + c.fp + c.fn
    return 2 * c.tp / denominator if denominator else 0.0


METRICS: dict[str, Callable[[ConfusionCounts], float]] = {"mcc": mcc, "f1": f1}
