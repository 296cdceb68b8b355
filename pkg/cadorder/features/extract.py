"""
The eleven problem features.

     1  number of polynomials
     2  maximum total degree
   3-5  maximum degree of x0, x1, x2
   6-8  proportion of polynomials containing x0, x1, x2
  9-11  proportion of monomials containing x0, x1, x2
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cadorder.errors import EmptyInput, WrongArity
from cadorder.ingest.problem import ProblemInstance, polynomials_of
from cadorder.polys.polynomial import sorted_polys

FEATURE_COUNT = 11

FEATURE_NAMES = (
    "polynomials",
    "max_total_degree",
    "max_degree_x0",
    "max_degree_x1",
    "max_degree_x2",
    "poly_share_x0",
    "poly_share_x1",
    "poly_share_x2",
    "monomial_share_x0",
    "monomial_share_x1",
    "monomial_share_x2",
)


@dataclass(frozen=True)
class FeatureVector:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != FEATURE_COUNT:
            raise ValueError(f"expected {FEATURE_COUNT} features, got {len(self.values)}")

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.values)

    def __str__(self) -> str:
        return "[" + ", ".join(str(v) for v in self.values) + "]"


def extract_features(problem: ProblemInstance) -> FeatureVector:
    """
    Compute the exact feature vector of a three-variable problem.

    Raises:
        WrongArity: the problem does not have exactly three variables.
        EmptyInput: the problem has no nonconstant polynomial.
    """
    if len(problem.variables) != 3:
        raise WrongArity(f"{problem.id}: features need 3 variables, got {len(problem.variables)}")
    polys = sorted_polys(polynomials_of(problem))
    if not polys:
        raise EmptyInput(f"{problem.id}: no nonconstant polynomial")
    variables = sorted(problem.variables)
    terms = [t for p in polys for t in p.terms]

    values = [Fraction(len(polys)), Fraction(max(p.total_degree() for p in polys))]
    values += [Fraction(max(p.degree_in(v) for p in polys)) for v in variables]
    values += [Fraction(sum(1 for p in polys if p.contains(v)), len(polys)) for v in variables]
    values += [Fraction(sum(1 for t in terms if t.contains(v)), len(terms)) for v in variables]
    return FeatureVector(tuple(values))
