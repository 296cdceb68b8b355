"""
QEPCAD session scripts.

QEPCAD projects the last variable of its tuple first, so the tuple line is
the elimination order reversed.
"""

from __future__ import annotations

from cadorder.errors import InadmissibleOrdering
from cadorder.ingest.problem import Connective, Constraint, FormulaNode, ProblemInstance, Relation
from cadorder.polys.polynomial import Monomial
from cadorder.projection.ordering import VariableOrdering

QUANTIFIED_COMMANDS = ("go", "go", "go", "d-stat", "go", "finish")
QUANTIFIER_FREE_COMMANDS = ("go", "go", "d-proj-factors", "d-proj-polynomials", "go", "d-fpc-stat", "go")

_RELATIONS = {
    Relation.EQ: "=",
    Relation.NE: "/=",
    Relation.LT: "<",
    Relation.LE: "<=",
    Relation.GT: ">",
    Relation.GE: ">=",
}


def _render_term(term: Monomial) -> str:
    factors = []
    if term.coefficient != 1 or not term.exponents:
        factors.append(str(term.coefficient))
    for v, e in term.exponents:
        factors.extend([v.display_name] * e)
    return factors[0] if len(factors) == 1 else "(" + " ".join(factors) + ")"


def _render_sum(terms: list[Monomial]) -> str:
    if len(terms) == 1:
        return _render_term(terms[0])
    return f"({_render_term(terms[0])} + {_render_sum(terms[1:])})"


def _render_constraint(c: Constraint) -> str:
    # constant term moves to the right-hand side
    nonconstant = [t for t in c.lhs.terms if t.exponents]
    lhs = _render_sum(nonconstant) if nonconstant else "0"
    return f"[{lhs} {_RELATIONS[c.relation]} {-c.lhs.constant_value}]"


def render_qepcad_formula(node: FormulaNode) -> str:
    if node.kind is Connective.ATOM:
        return _render_constraint(node.constraint)
    if node.kind is Connective.NOT:
        return f"[~ {render_qepcad_formula(node.children[0])}]"
    joiner = r" /\ " if node.kind is Connective.AND else r" \/ "
    return "[" + joiner.join(render_qepcad_formula(c) for c in node.children) + "]"


def emit_qepcad_script(problem: ProblemInstance, ordering: VariableOrdering, quantified: bool) -> str:
    """
    Build the QEPCAD input for one problem and ordering.

    Args:
        problem: the problem instance
        ordering: elimination order, first-eliminated first
        quantified: True for the quantified session (cells constructed),
            False for the quantifier-free session over all variables

    Returns:
        Script text ending in a newline.

    Raises:
        InadmissibleOrdering: ordering is not a permutation of the problem's
            variables, or (quantified) violates its quantifier structure.
    """
    if set(ordering.elimination_order) != set(problem.variables) or len(ordering) != len(problem.variables):
        raise InadmissibleOrdering(f"{problem.id}: {ordering} is not a permutation of the problem variables")

    variables = ordering.qepcad_tuple()
    lines = ["(" + ",".join(v.display_name for v in variables) + ")"]
    formula = "[" + render_qepcad_formula(problem.formula) + "]."

    if quantified:
        from cadorder.heuristics.admissible import is_admissible

        if not is_admissible(problem, ordering):
            raise InadmissibleOrdering(f"{problem.id}: {ordering} violates the quantifier block")
        quantifier_of = {v: q for q, v in problem.quantifier_block}
        prefix = "".join(f"({quantifier_of[v].value}{v.display_name})" for v in variables if v in quantifier_of)
        lines.append(str(len(problem.free_variables)))
        lines.append(prefix + formula)
        lines.extend(QUANTIFIED_COMMANDS)
    else:
        lines.append(str(len(problem.variables)))
        lines.append(formula)
        lines.extend(QUANTIFIER_FREE_COMMANDS)
    return "\n".join(lines) + "\n"
