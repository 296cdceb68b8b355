"""Distinct real root counting by Sturm sequences."""

from sympy import Poly

from cadorder.errors import Multivariate, ZeroPolynomial
from cadorder.polys.algebra import squarefree_part, to_sympy
from cadorder.polys.polynomial import Polynomial


def _sign_at_infinity(f: Poly, negative: bool) -> int:
    # Only the leading term matters at +/- infinity.
    sign = 1 if f.LC() > 0 else -1
    if negative and f.degree() % 2:
        sign = -sign
    return sign


def _variations(chain: list[Poly], negative: bool) -> int:
    signs = [_sign_at_infinity(f, negative) for f in chain if not f.is_zero]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_distinct_real_roots(p: Polynomial) -> int:
    """
    Number of distinct real roots of a univariate polynomial.

    Args:
        p: nonzero polynomial in at most one variable

    Returns:
        V(-inf) - V(+inf) for the Sturm chain of the squarefree part; 0 for constants.

    Raises:
        ZeroPolynomial: p = 0.
        Multivariate: more than one variable occurs in p.
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has infinitely many roots")
    variables = p.variables
    if len(variables) > 1:
        raise Multivariate(f"expected a univariate polynomial, got {p}")
    if not variables:
        return 0
    v = variables[0]
    chain = to_sympy(squarefree_part(p, v), [v]).sturm()
    return _variations(chain, negative=True) - _variations(chain, negative=False)
