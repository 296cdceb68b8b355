"""Variable orderings, written first-eliminated first."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from cadorder.errors import UnknownOrdering
from cadorder.polys.polynomial import Variable


@dataclass(frozen=True, order=True)
class VariableOrdering:
    """
    A permutation of a problem's variables in elimination order.

    Orderings compare lexicographically on variable indices, which is the
    tie-break every heuristic uses.
    """
    elimination_order: tuple[Variable, ...]

    def __post_init__(self):
        if len(set(self.elimination_order)) != len(self.elimination_order):
            raise UnknownOrdering(f"ordering repeats a variable: {self}")

    @classmethod
    def of(cls, variables: Sequence[Variable]) -> VariableOrdering:
        return cls(tuple(variables))

    @classmethod
    def parse(cls, text: str, variables: Mapping[str, Variable]) -> VariableOrdering:
        """Parse ``x2,x1,x0`` against the declared variables."""
        names = [name.strip() for name in text.split(",") if name.strip()]
        unknown = [name for name in names if name not in variables]
        if unknown:
            raise UnknownOrdering(f"ordering {text!r} names undeclared variable {unknown[0]!r}")
        ordering = cls(tuple(variables[name] for name in names))
        if set(ordering.elimination_order) != set(variables.values()):
            raise UnknownOrdering(f"ordering {text!r} is not a permutation of {', '.join(sorted(variables))}")
        return ordering

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(v.index for v in self.elimination_order)

    @property
    def last(self) -> Variable:
        return self.elimination_order[-1]

    def position(self, v: Variable) -> int:
        return self.elimination_order.index(v)

    def qepcad_tuple(self) -> tuple[Variable, ...]:
        """QEPCAD lists variables so that the last one is projected first."""
        return tuple(reversed(self.elimination_order))

    def relabel(self, mapping: Mapping[Variable, Variable]) -> VariableOrdering:
        return VariableOrdering(tuple(mapping.get(v, v) for v in self.elimination_order))

    def __str__(self) -> str:
        return ",".join(v.display_name for v in self.elimination_order)

    def __len__(self) -> int:
        return len(self.elimination_order)
