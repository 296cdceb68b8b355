"""Seeded train/validation/test split."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from cadorder.errors import BadFractions, InputError

# 3545 / 1735 / 1721 of 7001 problems
DEFAULT_FRACTIONS = (3545 / 7001, 1735 / 7001, 1721 / 7001)


@dataclass(frozen=True)
class DatasetSplit:
    train: tuple[str, ...]
    validation: tuple[str, ...]
    test: tuple[str, ...]
    seed: int

    def part_of(self, problem_id: str) -> str:
        for name in ("train", "validation", "test"):
            if problem_id in getattr(self, name):
                return name
        raise KeyError(problem_id)

    @property
    def sizes(self) -> tuple[int, int, int]:
        return len(self.train), len(self.validation), len(self.test)


def split_sizes(total: int, fractions: Sequence[float]) -> list[int]:
    """Largest-remainder rounding of total * fractions; ties go to the earlier part."""
    quotas = [total * f for f in fractions]
    sizes = [math.floor(q) for q in quotas]
    leftover = total - sum(sizes)
    order = sorted(range(len(quotas)), key=lambda i: (-(quotas[i] - sizes[i]), i))
    for i in order[:leftover]:
        sizes[i] += 1
    return sizes


def split_dataset(
    ids: Sequence[str],
    seed: int,
    fractions: Sequence[float] = DEFAULT_FRACTIONS,
) -> DatasetSplit:
    """
    Partition ids into train/validation/test.

    The ids are sorted before shuffling, so the result depends only on the id
    set, the seed and the fractions.

    Raises:
        BadFractions: not three positive fractions summing to 1 (within 1e-9).
    """
    if len(fractions) != 3 or any(f <= 0 for f in fractions) or abs(sum(fractions) - 1.0) > 1e-9:
        raise BadFractions(f"fractions must be three positive numbers summing to 1, got {tuple(fractions)}")
    ordered = sorted(ids)
    if len(set(ordered)) != len(ordered):
        raise InputError("duplicate problem ids in split input")

    rng = np.random.default_rng(seed)
    shuffled = [ordered[i] for i in rng.permutation(len(ordered))]
    n_train, n_validation, _ = split_sizes(len(shuffled), fractions)
    return DatasetSplit(
        train=tuple(shuffled[:n_train]),
        validation=tuple(shuffled[n_train:n_train + n_validation]),
        test=tuple(shuffled[n_train + n_validation:]),
        seed=seed,
    )
