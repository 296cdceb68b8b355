"""
Problem instances: variables, a quantifier block and a boolean formula over
polynomial sign conditions ``p rel 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterator, Optional, Sequence

from cadorder.errors import InvalidProblem
from cadorder.polys.algebra import normalize
from cadorder.polys.polynomial import Polynomial, Variable


class Relation(str, Enum):
    EQ = "="
    NE = "!="
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="


class Connective(str, Enum):
    ATOM = "atom"
    AND = "and"
    OR = "or"
    NOT = "not"


class Quantifier(str, Enum):
    EXISTS = "E"
    FORALL = "A"


@dataclass(frozen=True)
class Constraint:
    """``lhs relation 0``."""
    lhs: Polynomial
    relation: Relation

    def __str__(self) -> str:
        return f"{self.lhs} {self.relation.value} 0"


@dataclass(frozen=True)
class FormulaNode:
    """A constraint leaf or a connective over child nodes."""
    kind: Connective
    constraint: Optional[Constraint] = None
    children: tuple[FormulaNode, ...] = ()

    def __post_init__(self):
        if self.kind is Connective.ATOM:
            if self.constraint is None or self.children:
                raise InvalidProblem("an atom carries exactly one constraint and no children")
        elif self.constraint is not None:
            raise InvalidProblem(f"{self.kind.value} node cannot carry a constraint")
        elif self.kind is Connective.NOT and len(self.children) != 1:
            raise InvalidProblem("not takes exactly one child")
        elif self.kind in (Connective.AND, Connective.OR) and len(self.children) < 2:
            raise InvalidProblem(f"{self.kind.value} takes at least two children")

    @classmethod
    def atom(cls, lhs: Polynomial, relation: Relation) -> FormulaNode:
        return cls(Connective.ATOM, constraint=Constraint(lhs, relation))

    @classmethod
    def conjunction(cls, children: Sequence[FormulaNode]) -> FormulaNode:
        """AND of children, collapsing a single child to itself."""
        return children[0] if len(children) == 1 else cls(Connective.AND, children=tuple(children))

    @classmethod
    def disjunction(cls, children: Sequence[FormulaNode]) -> FormulaNode:
        return children[0] if len(children) == 1 else cls(Connective.OR, children=tuple(children))

    @classmethod
    def negation(cls, child: FormulaNode) -> FormulaNode:
        return cls(Connective.NOT, children=(child,))

    def constraints(self) -> Iterator[Constraint]:
        """Leaves in left-to-right order."""
        if self.constraint is not None:
            yield self.constraint
        for child in self.children:
            yield from child.constraints()

    def relabel(self, mapping) -> FormulaNode:
        if self.constraint is not None:
            return FormulaNode.atom(self.constraint.lhs.relabel(mapping), self.constraint.relation)
        return FormulaNode(self.kind, children=tuple(c.relabel(mapping) for c in self.children))


@dataclass(frozen=True)
class ProblemInstance:
    """
    Q_{k+1} x_{k+1} ... Q_n x_n . formula, with the quantified variables a
    suffix of ``variables`` listed outermost first.
    """
    id: str
    variables: tuple[Variable, ...]
    quantifier_block: tuple[tuple[Quantifier, Variable], ...]
    formula: FormulaNode

    def __post_init__(self):
        names = [v.display_name for v in self.variables]
        indices = [v.index for v in self.variables]
        if len(set(names)) != len(names) or len(set(indices)) != len(indices):
            raise InvalidProblem(f"{self.id}: variable names and indices must be unique")
        quantified = [v for _, v in self.quantifier_block]
        if len(set(quantified)) != len(quantified):
            raise InvalidProblem(f"{self.id}: a variable is quantified twice")
        suffix = list(self.variables[len(self.variables) - len(quantified):]) if quantified else []
        if quantified and sorted(quantified) != sorted(suffix):
            raise InvalidProblem(f"{self.id}: quantified variables must be a suffix of the variable list")
        known = set(self.variables)
        for c in self.formula.constraints():
            stray = [v for v in c.lhs.variables if v not in known]
            if stray:
                raise InvalidProblem(f"{self.id}: undeclared variable {stray[0]}")

    @property
    def quantified_variables(self) -> tuple[Variable, ...]:
        return tuple(v for _, v in self.quantifier_block)

    @property
    def free_variables(self) -> tuple[Variable, ...]:
        quantified = set(self.quantified_variables)
        return tuple(v for v in self.variables if v not in quantified)

    @property
    def is_quantified(self) -> bool:
        return bool(self.quantifier_block)

    def variables_by_name(self) -> dict[str, Variable]:
        return {v.display_name: v for v in self.variables}

    def relabel(self, mapping) -> ProblemInstance:
        """
        Apply a variable permutation to the formula, keeping the variable list
        and quantifier block as they are. Only meaningful for mappings that
        preserve quantifier structure (e.g. any permutation of a fully
        existential problem).
        """
        return replace(self, formula=self.formula.relabel(mapping))


def polynomials_of(problem: ProblemInstance) -> frozenset[Polynomial]:
    """Distinct nonconstant constraint left-hand sides, up to sign and integer content."""
    return frozenset(normalize(c.lhs) for c in problem.formula.constraints() if not c.lhs.is_constant)


def strip_quantifiers(problem: ProblemInstance) -> ProblemInstance:
    """The quantifier-free twin: same formula, every variable free, id suffixed ``-qf``."""
    return replace(problem, id=f"{problem.id}-qf", quantifier_block=())


def select_by_arity(
    problems: Sequence[ProblemInstance],
    n_vars: int = 3,
) -> tuple[list[ProblemInstance], list[str]]:
    """Keep problems with exactly n_vars variables; return (kept, rejected ids)."""
    kept, rejected = [], []
    for problem in problems:
        if len(problem.variables) == n_vars:
            kept.append(problem)
        else:
            rejected.append(problem.id)
    return kept, rejected
