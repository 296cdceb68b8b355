"""
Projection-based heuristics.

sotd: sum of total degrees of all monomials in the projection set.
ndrr: number of distinct real roots of the univariate projection polynomials.
Both build the full projection for every admissible ordering and take the
minimum, breaking ties lexicographically.
"""

from __future__ import annotations

from typing import Mapping, Optional

from cadorder.errors import EmptyInput
from cadorder.heuristics.admissible import admissible_orderings
from cadorder.heuristics.choice import Heuristic, HeuristicChoice, choose_minimum
from cadorder.ingest.problem import ProblemInstance, polynomials_of
from cadorder.polys.roots import count_distinct_real_roots
from cadorder.projection.mccallum import ProjectionSet, full_projection
from cadorder.projection.ordering import VariableOrdering

Projections = Mapping[VariableOrdering, ProjectionSet]


def projections_for(problem: ProblemInstance) -> dict[VariableOrdering, ProjectionSet]:
    """Full projections for every admissible ordering, keyed by ordering."""
    if not polynomials_of(problem):
        raise EmptyInput(f"{problem.id}: no nonconstant polynomial")
    return {o: full_projection(problem, o) for o in admissible_orderings(problem)}


def sotd_measure(ps: ProjectionSet, include_input: bool = True) -> int:
    levels = ps.levels if include_input else ps.levels[1:]
    return sum(t.total_degree for level in levels for p in level for t in p.terms)


def ndrr_measure(ps: ProjectionSet, all_levels: bool = False) -> int:
    if not all_levels:
        return sum(count_distinct_real_roots(p) for p in ps.univariate_level)
    univariate = {p for level in ps.levels for p in level if len(p.variables) == 1}
    return sum(count_distinct_real_roots(p) for p in univariate)


def sotd_choose(
    problem: ProblemInstance,
    include_input: bool = True,
    projections: Optional[Projections] = None,
) -> HeuristicChoice:
    """Ordering minimizing sotd_measure; reuses projections when given."""
    projections = projections if projections is not None else projections_for(problem)
    scores = {o: sotd_measure(ps, include_input) for o, ps in projections.items()}
    return choose_minimum(Heuristic.SOTD, scores)


def ndrr_choose(
    problem: ProblemInstance,
    all_levels: bool = False,
    projections: Optional[Projections] = None,
) -> HeuristicChoice:
    """Ordering minimizing ndrr_measure; reuses projections when given."""
    projections = projections if projections is not None else projections_for(problem)
    scores = {o: ndrr_measure(ps, all_levels) for o, ps in projections.items()}
    return choose_minimum(Heuristic.NDRR, scores)
