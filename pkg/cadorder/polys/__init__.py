# Exact polynomial core
from cadorder.polys.polynomial import (
    Variable,
    Monomial,
    Polynomial,
    make_variables,
    parse_polynomial,
    total_degree,
    degree_in,
    sorted_polys,
)
from cadorder.polys.algebra import (
    coefficients_wrt,
    derivative_wrt,
    resultant,
    discriminant,
    gcd,
    content_wrt,
    squarefree_part,
    normalize,
    exact_quotient,
)
from cadorder.polys.roots import count_distinct_real_roots

__all__ = [
    "Variable",
    "Monomial",
    "Polynomial",
    "make_variables",
    "parse_polynomial",
    "total_degree",
    "degree_in",
    "sorted_polys",
    "coefficients_wrt",
    "derivative_wrt",
    "resultant",
    "discriminant",
    "gcd",
    "content_wrt",
    "squarefree_part",
    "normalize",
    "exact_quotient",
    "count_distinct_real_roots",
]
