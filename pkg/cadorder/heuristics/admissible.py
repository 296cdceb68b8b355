"""
Admissible orderings: quantified variables are eliminated before free ones,
innermost quantifier first; variables within a run of like quantifiers, and
the free variables among themselves, may be permuted.
"""

from __future__ import annotations

from itertools import permutations, product

from cadorder.ingest.problem import ProblemInstance
from cadorder.polys.polynomial import Variable
from cadorder.projection.ordering import VariableOrdering


def elimination_blocks(problem: ProblemInstance) -> list[tuple[Variable, ...]]:
    """Groups of freely permutable variables, first-eliminated group first."""
    runs: list[list[Variable]] = []
    previous = None
    for quantifier, v in problem.quantifier_block:
        if quantifier is previous:
            runs[-1].append(v)
        else:
            runs.append([v])
            previous = quantifier
    blocks = [tuple(run) for run in reversed(runs)]
    if problem.free_variables:
        blocks.append(problem.free_variables)
    return blocks


def admissible_orderings(problem: ProblemInstance) -> list[VariableOrdering]:
    """All admissible orderings, sorted lexicographically by variable index."""
    per_block = [list(permutations(block)) for block in elimination_blocks(problem)]
    orderings = [
        VariableOrdering(tuple(v for part in choice for v in part))
        for choice in product(*per_block)
    ]
    return sorted(orderings)


def is_admissible(problem: ProblemInstance, ordering: VariableOrdering) -> bool:
    position = 0
    order = ordering.elimination_order
    if len(order) != len(problem.variables):
        return False
    for block in elimination_blocks(problem):
        if set(order[position:position + len(block)]) != set(block):
            return False
        position += len(block)
    return True
