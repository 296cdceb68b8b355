"""RBF kernel K(x, x') = exp(-gamma * ||x - x'||^2)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from sklearn.utils import check_array

from cadorder.errors import DimensionMismatch, InputError


@dataclass(frozen=True)
class KernelParams:
    gamma: float

    def __post_init__(self):
        if not self.gamma > 0:
            raise InputError(f"gamma must be positive, got {self.gamma}")


def rbf_kernel(x: Sequence[float], x2: Sequence[float], gamma: float) -> float:
    if not gamma > 0:
        raise InputError(f"gamma must be positive, got {gamma}")
    a = np.asarray(x, dtype=float)
    b = np.asarray(x2, dtype=float)
    if a.shape != b.shape:
        raise DimensionMismatch(f"kernel of vectors with shapes {a.shape} and {b.shape}")
    d = a - b
    return float(np.exp(-gamma * np.dot(d, d)))


def as_matrix(rows) -> np.ndarray:
    """Validated 2-D float array; ragged rows raise DimensionMismatch."""
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise DimensionMismatch(f"feature vectors of lengths {sorted(widths)}")
    return check_array(np.asarray(rows, dtype=float), ensure_2d=True)


def cross_gram(X: np.ndarray, Z: np.ndarray, gamma: float) -> np.ndarray:
    """K[i, j] = K(X[i], Z[j])."""
    if X.shape[1] != Z.shape[1]:
        raise DimensionMismatch(f"{X.shape[1]}-dimensional against {Z.shape[1]}-dimensional vectors")
    diff = X[:, None, :] - Z[None, :, :]
    return np.exp(-gamma * np.einsum("ijk,ijk->ij", diff, diff))


def gram_matrix(X: np.ndarray, gamma: float) -> np.ndarray:
    """Symmetric with unit diagonal: (a - b)^2 == (b - a)^2 exactly in floating point."""
    return cross_gram(X, X, gamma)
