"""
Brown's heuristic: order variables by statistics of the input polynomials,
never looking at projections.

A variable goes first when it has (1) lower overall degree, then (2) lower
maximum total degree among terms containing it, then (3) fewer terms
containing it.
"""

from __future__ import annotations

from cadorder.errors import EmptyInput
from cadorder.heuristics.admissible import admissible_orderings
from cadorder.heuristics.choice import Heuristic, HeuristicChoice
from cadorder.ingest.problem import ProblemInstance, polynomials_of
from cadorder.polys.polynomial import Polynomial, Variable
from cadorder.projection.ordering import VariableOrdering


def brown_key(polys: frozenset[Polynomial], v: Variable) -> tuple[int, int, int]:
    """(overall degree, max total degree of terms with v, number of terms with v)."""
    terms = [t for p in polys for t in p.terms if t.contains(v)]
    return (
        max((p.degree_in(v) for p in polys), default=0),
        max((t.total_degree for t in terms), default=0),
        len(terms),
    )


def brown_choose(problem: ProblemInstance) -> HeuristicChoice:
    """
    Greedy Brown ordering over admissible next picks.

    At each round every admissible candidate with the smallest key is a valid
    pick; all resulting orderings are collected as tied candidates and the
    lexicographically least is chosen.

    Raises:
        EmptyInput: the problem has no nonconstant polynomial.
    """
    polys = polynomials_of(problem)
    if not polys:
        raise EmptyInput(f"{problem.id}: no nonconstant polynomial")
    keys = {v: brown_key(polys, v) for v in problem.variables}
    admissible = admissible_orderings(problem)

    frontier: list[tuple[Variable, ...]] = [()]
    for depth in range(len(problem.variables)):
        next_frontier = []
        for prefix in frontier:
            candidates = {
                o.elimination_order[depth]
                for o in admissible
                if o.elimination_order[:depth] == prefix
            }
            best = min(keys[v] for v in candidates)
            next_frontier.extend(prefix + (v,) for v in sorted(candidates) if keys[v] == best)
        frontier = next_frontier
    finished = sorted(VariableOrdering(order) for order in frontier)
    return HeuristicChoice(
        heuristic=Heuristic.BROWN,
        chosen=finished[0],
        tied_candidates=tuple(finished),
    )
