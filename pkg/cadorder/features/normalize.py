"""Zero-mean, unit-variance scaling fitted on the training split only."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from sklearn.preprocessing import StandardScaler

from cadorder.errors import DimensionMismatch, EmptySet
from cadorder.features.extract import FeatureVector


@dataclass(frozen=True)
class NormalizationParams:
    means: tuple[float, ...]
    stds: tuple[float, ...]


def fit_normalization(train: Sequence[FeatureVector]) -> NormalizationParams:
    """Per-feature mean and population std; zero stds become 1."""
    if not train:
        raise EmptySet("cannot fit normalization on an empty training set")
    matrix = np.array([fv.as_floats() for fv in train], dtype=float)
    scaler = StandardScaler().fit(matrix)
    return NormalizationParams(
        means=tuple(float(m) for m in scaler.mean_),
        stds=tuple(float(s) for s in scaler.scale_),
    )


def apply_normalization(params: NormalizationParams, fv: FeatureVector) -> tuple[float, ...]:
    values = np.array(fv.as_floats(), dtype=float)
    if values.shape[0] != len(params.means):
        raise DimensionMismatch(f"{values.shape[0]} features against {len(params.means)} fitted")
    scaled = (values - np.array(params.means)) / np.array(params.stds)
    return tuple(float(x) for x in scaled)
