"""
Soft-margin SVM training by sequential minimal optimization.

Solves the dual

    min  1/2 a^T Q a - e^T a
    s.t. y^T a = 0,  0 <= a_i <= C_i

with Q_ij = y_i y_j K(x_i, x_j). Working pairs are picked by maximal
violation with second-order selection of the partner; the pair update and
its clipping follow the usual two-variable analytic solution. Positive
examples get the box bound j*C, negative examples C.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from cadorder.errors import DimensionMismatch, InputError, NoPositives, NonConvergence, SingleClass
from cadorder.features.labelling import LabeledExample
from cadorder.learner.kernel import KernelParams, as_matrix, cross_gram, gram_matrix
from cadorder.settings import get_settings

logger = logging.getLogger(__name__)

TAU = 1e-12


@dataclass(frozen=True)
class SvmModel:
    support_vectors: tuple[tuple[float, ...], ...]
    dual_coefficients: tuple[float, ...]
    bias: float
    kernel: KernelParams

    def __post_init__(self):
        if len(self.support_vectors) != len(self.dual_coefficients):
            raise ValueError("one dual coefficient per support vector")

    @property
    def dimension(self) -> Optional[int]:
        return len(self.support_vectors[0]) if self.support_vectors else None

    def decision_values(self, rows: Sequence[Sequence[float]]) -> np.ndarray:
        X = as_matrix(rows)
        if not self.support_vectors:
            return np.full(len(X), self.bias)
        K = cross_gram(X, np.asarray(self.support_vectors, dtype=float), self.kernel.gamma)
        return K @ np.asarray(self.dual_coefficients) + self.bias


def decision_value(model: SvmModel, fv: Sequence[float]) -> float:
    """f(fv) = sum_i a_i y_i K(x_i, fv) + b. The sign is the predicted class."""
    if model.dimension is not None and len(fv) != model.dimension:
        raise DimensionMismatch(f"model expects {model.dimension} features, got {len(fv)}")
    return float(model.decision_values([fv])[0])


def predict(model: SvmModel, rows: Sequence[Sequence[float]]) -> np.ndarray:
    """+1 where the decision value is strictly positive, -1 elsewhere."""
    return np.where(model.decision_values(rows) > 0, 1, -1)


def cost_factor(examples: Sequence[LabeledExample]) -> float:
    """Ratio of negative to positive examples."""
    positives = sum(1 for e in examples if e.label == 1)
    if positives == 0:
        raise NoPositives("cost factor needs at least one positive example")
    return (len(examples) - positives) / positives


@dataclass
class SvmFit:
    """A trained model together with the dual state it came from."""

    model: SvmModel
    alpha: np.ndarray
    labels: np.ndarray
    upper: np.ndarray
    gram: np.ndarray
    iterations: int
    converged: bool


def box_bounds(labels: np.ndarray, C: float, j: float) -> np.ndarray:
    return np.where(labels > 0, j * C, C)


def _select_pair(alpha, G, y, upper, K, tol):
    minus_yG = -y * G
    up = ((y > 0) & (alpha < upper)) | ((y < 0) & (alpha > 0))
    low = ((y > 0) & (alpha > 0)) | ((y < 0) & (alpha < upper))
    if not up.any() or not low.any():
        return None
    i = int(np.argmax(np.where(up, minus_yG, -np.inf)))
    m = minus_yG[i]
    if m - np.min(np.where(low, minus_yG, np.inf)) < tol:
        return None
    candidates = low & (minus_yG < m)
    b = m - minus_yG
    a = K[i, i] + np.diag(K) - 2.0 * K[i]
    a = np.where(a > 0, a, TAU)
    j = int(np.argmin(np.where(candidates, -(b * b) / a, np.inf)))
    return i, j


def _update_pair(alpha, G, Q, upper, y, i, j):
    Ci, Cj = upper[i], upper[j]
    old_i, old_j = alpha[i], alpha[j]
    if y[i] != y[j]:
        quad = Q[i, i] + Q[j, j] + 2.0 * Q[i, j]
        delta = (-G[i] - G[j]) / (quad if quad > 0 else TAU)
        diff = alpha[i] - alpha[j]
        alpha[i] += delta
        alpha[j] += delta
        if diff > 0:
            if alpha[j] < 0:
                alpha[j] = 0.0
                alpha[i] = diff
        elif alpha[i] < 0:
            alpha[i] = 0.0
            alpha[j] = -diff
        if diff > Ci - Cj:
            if alpha[i] > Ci:
                alpha[i] = Ci
                alpha[j] = Ci - diff
        elif alpha[j] > Cj:
            alpha[j] = Cj
            alpha[i] = Cj + diff
    else:
        quad = Q[i, i] + Q[j, j] - 2.0 * Q[i, j]
        delta = (G[i] - G[j]) / (quad if quad > 0 else TAU)
        total = alpha[i] + alpha[j]
        alpha[i] -= delta
        alpha[j] += delta
        if total > Ci:
            if alpha[i] > Ci:
                alpha[i] = Ci
                alpha[j] = total - Ci
        elif alpha[j] < 0:
            alpha[j] = 0.0
            alpha[i] = total
        if total > Cj:
            if alpha[j] > Cj:
                alpha[j] = Cj
                alpha[i] = total - Cj
        elif alpha[i] < 0:
            alpha[i] = 0.0
            alpha[j] = total
    G += Q[:, i] * (alpha[i] - old_i) + Q[:, j] * (alpha[j] - old_j)


def _offset(alpha, G, y, upper) -> float:
    """The threshold rho; the bias is -rho."""
    yG = y * G
    at_upper = alpha >= upper
    at_lower = alpha <= 0
    free = ~at_upper & ~at_lower
    if free.any():
        return float(np.mean(yG[free]))
    # bounded-only: midpoint of the feasible interval for rho
    ub_mask = (at_upper & (y < 0)) | (at_lower & (y > 0))
    lb_mask = (at_upper & (y > 0)) | (at_lower & (y < 0))
    ub = np.min(yG[ub_mask]) if ub_mask.any() else np.inf
    lb = np.max(yG[lb_mask]) if lb_mask.any() else -np.inf
    if np.isinf(ub) or np.isinf(lb):
        return float(ub if np.isfinite(ub) else lb)
    return float((ub + lb) / 2)


def fit_from_gram(
    X: np.ndarray,
    y: np.ndarray,
    K: np.ndarray,
    gamma: float,
    C: float,
    j: float,
    tol: float,
    max_passes: int,
) -> SvmFit:
    """Run SMO on a precomputed Gram matrix. Never raises on the pass cap."""
    n = len(y)
    upper = box_bounds(y, C, j)
    Q = np.outer(y, y) * K
    alpha = np.zeros(n)
    G = -np.ones(n)
    converged = False
    iterations = 0
    while iterations < max_passes:
        pair = _select_pair(alpha, G, y, upper, K, tol)
        if pair is None:
            converged = True
            break
        _update_pair(alpha, G, Q, upper, y, *pair)
        iterations += 1
    else:
        converged = _select_pair(alpha, G, y, upper, K, tol) is None

    rho = _offset(alpha, G, y, upper)
    support = alpha > 0
    model = SvmModel(
        support_vectors=tuple(tuple(float(v) for v in row) for row in X[support]),
        dual_coefficients=tuple(float(c) for c in (alpha * y)[support]),
        bias=-rho,
        kernel=KernelParams(gamma),
    )
    logger.debug("SMO gamma=%g C=%g: %d iterations, %d support vectors", gamma, C, iterations, int(support.sum()))
    return SvmFit(model, alpha, y.astype(float), upper, K, iterations, converged)


def check_training_set(examples: Sequence[LabeledExample], gamma: float, C: float, j: float):
    labels = {e.label for e in examples}
    if len(examples) < 2 or labels != {1, -1}:
        raise SingleClass(f"training needs both labels, got {sorted(labels)} over {len(examples)} examples")
    if not gamma > 0 or not C > 0 or not j > 0:
        raise InputError(f"gamma, C and j must be positive (gamma={gamma}, C={C}, j={j})")
    X = as_matrix([e.features for e in examples])
    y = np.array([e.label for e in examples], dtype=float)
    return X, y


def solve_svm(
    examples: Sequence[LabeledExample],
    gamma: float,
    C: float,
    j: float = 1.0,
    tol: Optional[float] = None,
    max_passes: Optional[int] = None,
) -> SvmFit:
    """Like train_svm but returns the dual state and does not raise on the pass cap."""
    settings = get_settings()
    tol = settings.KKT_TOL if tol is None else tol
    max_passes = settings.MAX_PASSES if max_passes is None else max_passes
    X, y = check_training_set(examples, gamma, C, j)
    return fit_from_gram(X, y, gram_matrix(X, gamma), gamma, C, j, tol, max_passes)


def train_svm(
    examples: Sequence[LabeledExample],
    gamma: float,
    C: float,
    j: float = 1.0,
    tol: Optional[float] = None,
    max_passes: Optional[int] = None,
) -> SvmModel:
    """
    Train an RBF soft-margin SVM.

    Args:
        examples: Labelled, already normalized feature vectors.
        gamma: RBF width.
        C: Box bound for negative examples.
        j: Cost factor; positive examples are bounded by j*C.
        tol: KKT tolerance (settings default when None).
        max_passes: Cap on pair updates (settings default when None).

    Returns:
        SvmModel keeping only examples with a nonzero multiplier.

    Raises:
        SingleClass: fewer than two examples or only one label.
        NonConvergence: the cap was hit; the last iterate is on ``.model``.
    """
    fit = solve_svm(examples, gamma, C, j, tol, max_passes)
    if not fit.converged:
        raise NonConvergence(
            f"SMO did not converge after {fit.iterations} iterations (gamma={gamma}, C={C})",
            model=fit.model,
            iterations=fit.iterations,
        )
    return fit.model


def dual_objective(alpha: np.ndarray, labels: np.ndarray, gram: np.ndarray) -> float:
    """1/2 a^T Q a - sum(a), the quantity SMO minimizes."""
    ya = np.asarray(alpha) * np.asarray(labels)
    return float(0.5 * ya @ np.asarray(gram) @ ya - np.sum(alpha))


def kkt_violations(fit: SvmFit, tol: float) -> list[int]:
    """Indices whose KKT condition fails by more than tol."""
    f = fit.gram @ (fit.alpha * fit.labels) + fit.model.bias
    margin = fit.labels * f
    violations = []
    for i, (a, m) in enumerate(zip(fit.alpha, margin)):
        if a <= 0:
            ok = m >= 1 - tol
        elif a >= fit.upper[i]:
            ok = m <= 1 + tol
        else:
            ok = abs(m - 1) <= tol
        if not ok:
            violations.append(i)
    return violations
