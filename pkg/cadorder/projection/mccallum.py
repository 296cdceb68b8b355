"""
McCallum projection on a canonical squarefree basis.

canonicalize_set turns any polynomial collection into the basis used at each
level: constants dropped, each polynomial split into its content and its
primitive squarefree part with respect to its main variable, duplicates merged.
The main variable of a polynomial is the earliest-eliminated variable of the
ordering occurring in it (lowest index when no ordering is given).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from cadorder.errors import EmptyInput, InadmissibleOrdering
from cadorder.ingest.problem import ProblemInstance, polynomials_of
from cadorder.polys.algebra import (
    coefficients_wrt,
    content_wrt,
    discriminant,
    exact_quotient,
    resultant,
    squarefree_part,
)
from cadorder.polys.polynomial import Polynomial, Variable, sorted_polys
from cadorder.projection.ordering import VariableOrdering

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjectionSet:
    """Levels S_n, ..., S_1 for one ordering; each level sorted by text."""
    ordering: VariableOrdering
    levels: tuple[tuple[Polynomial, ...], ...]

    @property
    def input_level(self) -> tuple[Polynomial, ...]:
        return self.levels[0]

    @property
    def univariate_level(self) -> tuple[Polynomial, ...]:
        return self.levels[-1]

    def level_variables(self, depth: int) -> tuple[Variable, ...]:
        """Variables allowed in levels[depth] (those not yet eliminated)."""
        return self.ordering.elimination_order[depth:]

    def render(self) -> str:
        """One block per level, headed ``S_i (vars):``, one polynomial per line."""
        blocks = []
        n = len(self.levels)
        for depth, level in enumerate(self.levels):
            names = ",".join(v.display_name for v in self.level_variables(depth))
            lines = [f"S_{n - depth} ({names}):"]
            lines.extend(f"  {p}" for p in level)
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"


def _main_variable(p: Polynomial, ordering: Optional[VariableOrdering]) -> Variable:
    present = p.variables
    if ordering is None:
        return present[0]
    rank = {v: i for i, v in enumerate(ordering.elimination_order)}
    return min(present, key=lambda v: (rank.get(v, len(rank)), v))


def canonicalize_set(
    polys: Iterable[Polynomial],
    ordering: Optional[VariableOrdering] = None,
) -> frozenset[Polynomial]:
    """
    The canonical basis of a polynomial collection.

    Args:
        polys: any polynomials, constants and duplicates allowed
        ordering: decides each polynomial's main variable

    Returns:
        Primitive, sign-normalized, squarefree parts plus the nonconstant
        contents they were divided by.
    """
    basis: set[Polynomial] = set()
    pending = list(polys)
    while pending:
        p = pending.pop()
        if p.is_constant:
            continue
        v = _main_variable(p, ordering)
        content = content_wrt(p, v)
        basis.add(squarefree_part(exact_quotient(p, content), v))
        if not content.is_constant:
            pending.append(content)
    return frozenset(basis)


def mccallum_step(
    polys: Iterable[Polynomial],
    v: Variable,
    ordering: Optional[VariableOrdering] = None,
) -> frozenset[Polynomial]:
    """
    Eliminate v: coefficients and discriminants of each polynomial containing v,
    resultants of each pair of them, and every polynomial free of v, canonicalized.
    """
    with_v, without_v = [], []
    for p in sorted_polys(polys):
        (with_v if p.contains(v) else without_v).append(p)

    projected: list[Polynomial] = list(without_v)
    for p in with_v:
        projected.extend(coefficients_wrt(p, v))
        if p.degree_in(v) >= 2:
            projected.append(discriminant(p, v))
    for p, q in combinations(with_v, 2):
        projected.append(resultant(p, q, v))
    return canonicalize_set(projected, ordering)


def full_projection(problem: ProblemInstance, ordering: VariableOrdering) -> ProjectionSet:
    """
    All projection levels of a problem under an ordering.

    Raises:
        EmptyInput: the problem has no nonconstant polynomial.
        InadmissibleOrdering: ordering is not a permutation of the problem variables.
    """
    if len(ordering) != len(problem.variables) or set(ordering.elimination_order) != set(problem.variables):
        raise InadmissibleOrdering(f"{problem.id}: {ordering} is not a permutation of the problem variables")
    polys = polynomials_of(problem)
    if not polys:
        raise EmptyInput(f"{problem.id}: no nonconstant polynomial")

    level = canonicalize_set(polys, ordering)
    levels = [tuple(sorted_polys(level))]
    for v in ordering.elimination_order[:-1]:
        level = mccallum_step(level, v, ordering)
        levels.append(tuple(sorted_polys(level)))
    logger.debug("%s under %s: level sizes %s", problem.id, ordering, [len(s) for s in levels])
    return ProjectionSet(ordering=ordering, levels=tuple(levels))
