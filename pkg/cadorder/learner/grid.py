"""
(gamma, C) grid search scored on a validation set.

Gammas run over 2^-15 .. 2^3 and C over 2^-5 .. 2^15. Cells that hit the
pass cap are still scored with their last iterate and listed as
non-converged.
"""

from __future__ import annotations

import logging
import multiprocessing
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from cadorder.errors import EmptySet, InputError
from cadorder.features.labelling import LabeledExample
from cadorder.learner.kernel import as_matrix, gram_matrix
from cadorder.learner.metrics import METRICS, ConfusionCounts
from cadorder.learner.smo import check_training_set, cost_factor, fit_from_gram, predict
from cadorder.settings import get_settings

logger = logging.getLogger(__name__)

GAMMA_EXPONENTS = tuple(range(-15, 4))
C_EXPONENTS = tuple(range(-5, 16))

Cell = tuple[float, float]


@dataclass(frozen=True)
class GridSearchResult:
    scores: dict[Cell, float]
    best: Cell
    metric: str
    cost_factor: float
    nonconverged: tuple[Cell, ...] = ()

    @property
    def best_score(self) -> float:
        return self.scores[self.best]


def best_cell(scores: dict[Cell, float]) -> Cell:
    """Highest score; ties go to the smallest C, then the smallest gamma."""
    return min(scores, key=lambda cell: (-scores[cell], cell[1], cell[0]))


def _score_row(task) -> list[tuple[float, float, bool]]:
    X, y, Xv, yv, gamma, costs, j, metric, tol, max_passes = task
    K = gram_matrix(X, gamma)
    score = METRICS[metric]
    row = []
    for C in costs:
        fit = fit_from_gram(X, y, K, gamma, C, j, tol, max_passes)
        counts = ConfusionCounts.from_labels(yv, predict(fit.model, Xv))
        row.append((C, score(counts), fit.converged))
    return row


def grid_search(
    train: Sequence[LabeledExample],
    validation: Sequence[LabeledExample],
    metric: str = "mcc",
    gamma_exponents: Sequence[int] = GAMMA_EXPONENTS,
    c_exponents: Sequence[int] = C_EXPONENTS,
    tol: Optional[float] = None,
    max_passes: Optional[int] = None,
    workers: int = 1,
) -> GridSearchResult:
    """
    Train one model per (gamma, C) cell and score it on validation.

    The cost factor is computed once from train. One Gram matrix is built
    per gamma and shared by every C in that row; rows run in parallel when
    workers > 1.

    Raises:
        SingleClass: train lacks one of the labels.
        EmptySet: validation is empty.
    """
    if metric not in METRICS:
        raise InputError(f"unknown metric {metric!r}; expected one of {sorted(METRICS)}")
    if not validation:
        raise EmptySet("grid search needs a nonempty validation set")
    settings = get_settings()
    tol = settings.KKT_TOL if tol is None else tol
    max_passes = settings.MAX_PASSES if max_passes is None else max_passes

    X, y = check_training_set(train, 1.0, 1.0, 1.0)
    j = cost_factor(train)
    Xv = as_matrix([e.features for e in validation])
    yv = [e.label for e in validation]
    costs = [2.0 ** e for e in c_exponents]
    tasks = [(X, y, Xv, yv, 2.0 ** g, costs, j, metric, tol, max_passes) for g in gamma_exponents]

    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            rows = pool.map(_score_row, tasks)
    else:
        rows = [_score_row(t) for t in tasks]

    scores: dict[Cell, float] = {}
    nonconverged = []
    for task, row in zip(tasks, rows):
        gamma = task[4]
        for C, value, converged in row:
            scores[(gamma, C)] = value
            if not converged:
                nonconverged.append((gamma, C))
    if nonconverged:
        logger.warning("%d of %d grid cells hit the pass cap", len(nonconverged), len(scores))

    best = best_cell(scores)
    logger.info("grid search best gamma=%g C=%g %s=%.4f", best[0], best[1], metric, scores[best])
    return GridSearchResult(scores, best, metric, j, tuple(nonconverged))
