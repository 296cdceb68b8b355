"""
Exact polynomial algebra on top of sympy.

Our Polynomial is converted to a sympy ``Poly`` over ZZ with positional
generators, handed to sympy's exact algorithms (subresultant PRS resultants,
multivariate GCD, exact division) and converted back.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Sequence

from sympy import Poly, ZZ, symbols
from sympy.polys.polyerrors import ExactQuotientFailed

from cadorder.errors import DegreeTooLow, DegreeZero, InvariantViolation
from cadorder.polys.polynomial import Polynomial, Variable


# --- sympy bridge ---

def generators(count: int):
    return symbols(f"g0:{count}") if count else ()


def to_sympy(p: Polynomial, gens: Sequence[Variable]) -> Poly:
    """p as a sympy Poly over ZZ in the given generator order (len(gens) >= 1)."""
    position = {v: i for i, v in enumerate(gens)}
    data: dict[tuple[int, ...], int] = {}
    for t in p.terms:
        key = [0] * len(gens)
        for v, e in t.exponents:
            if v not in position:
                raise InvariantViolation(f"variable {v} missing from generator list")
            key[position[v]] = e
        data[tuple(key)] = t.coefficient
    return Poly.from_dict(data, *generators(len(gens)), domain=ZZ)


def from_sympy(poly, gens: Sequence[Variable]) -> Polynomial:
    """Inverse of to_sympy. Accepts a bare sympy number for constant results."""
    if not isinstance(poly, Poly):
        return Polynomial.constant(_as_int(poly))
    items = []
    for monom, coeff in poly.terms():
        exponents = tuple((gens[i], e) for i, e in enumerate(monom) if e)
        items.append((exponents, _as_int(coeff)))
    return Polynomial.from_terms(items)


def _as_int(value) -> int:
    if getattr(value, "is_Integer", False) or isinstance(value, int):
        return int(value)
    raise InvariantViolation(f"non-integer coefficient {value} in an integer computation")


def _union_variables(*polys: Polynomial, first: Variable | None = None) -> list[Variable]:
    found = sorted({v for p in polys for v in p.variables})
    if first is None:
        return found
    return [first] + [v for v in found if v != first]


# --- coefficient views ---

def coefficients_wrt(p: Polynomial, v: Variable) -> list[Polynomial]:
    """Coefficients of p as a polynomial in v, indexed by power 0..degree_in(p, v)."""
    degree = p.degree_in(v)
    buckets: list[list] = [[] for _ in range(degree + 1)]
    for t in p.terms:
        power = t.degree_in(v)
        rest = tuple((u, e) for u, e in t.exponents if u != v)
        buckets[power].append((rest, t.coefficient))
    return [Polynomial.from_terms(bucket) for bucket in buckets]


def leading_coefficient_wrt(p: Polynomial, v: Variable) -> Polynomial:
    return coefficients_wrt(p, v)[-1]


def derivative_wrt(p: Polynomial, v: Variable) -> Polynomial:
    """Formal partial derivative."""
    items = []
    for t in p.terms:
        power = t.degree_in(v)
        if power == 0:
            continue
        exponents = tuple((u, e - 1 if u == v else e) for u, e in t.exponents)
        items.append((exponents, t.coefficient * power))
    return Polynomial.from_terms(items)


# --- normalization ---

def integer_content(p: Polynomial) -> int:
    return reduce(math.gcd, (abs(t.coefficient) for t in p.terms), 0)


def normalize(p: Polynomial) -> Polynomial:
    """Primitive (integer content removed) with positive leading coefficient."""
    if p.is_zero:
        return p
    content = integer_content(p)
    if p.leading_coefficient < 0:
        content = -content
    return Polynomial.from_terms((t.exponents, t.coefficient // content) for t in p.terms)


def exact_quotient(a: Polynomial, b: Polynomial) -> Polynomial:
    """a / b, which must divide exactly."""
    if b.is_zero:
        raise InvariantViolation("division by the zero polynomial")
    if a.is_zero:
        return a
    if b.is_constant:
        c = b.constant_value
        if any(t.coefficient % c for t in a.terms):
            raise InvariantViolation(f"{a} is not divisible by {c}")
        return Polynomial.from_terms((t.exponents, t.coefficient // c) for t in a.terms)
    gens = _union_variables(a, b)
    try:
        quotient = to_sympy(a, gens).exquo(to_sympy(b, gens))
    except ExactQuotientFailed as e:
        raise InvariantViolation(f"{a} is not divisible by {b}") from e
    return from_sympy(quotient, gens)


# --- resultants ---

def resultant(p: Polynomial, q: Polynomial, v: Variable) -> Polynomial:
    """
    Resultant of p and q with respect to v (subresultant PRS, exact).

    Raises:
        DegreeZero: if either polynomial does not involve v.
    """
    if p.degree_in(v) < 1 or q.degree_in(v) < 1:
        raise DegreeZero(f"resultant w.r.t. {v} needs both polynomials to involve {v}")
    gens = _union_variables(p, q, first=v)
    result = to_sympy(p, gens).resultant(to_sympy(q, gens))
    return from_sympy(result, gens[1:])


def discriminant(p: Polynomial, v: Variable) -> Polynomial:
    """(-1)^(d(d-1)/2) * res(p, dp/dv, v) / lc(p, v)."""
    d = p.degree_in(v)
    if d < 2:
        raise DegreeTooLow(f"discriminant w.r.t. {v} needs degree >= 2, got {d}")
    res = resultant(p, derivative_wrt(p, v), v)
    quotient = exact_quotient(res, leading_coefficient_wrt(p, v))
    return -quotient if (d * (d - 1) // 2) % 2 else quotient


# --- gcd and squarefree parts ---

def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Primitive, sign-normalized gcd; gcd(0, q) = normalize(q)."""
    if p.is_zero:
        return normalize(q)
    if q.is_zero:
        return normalize(p)
    gens = _union_variables(p, q)
    if not gens:
        return Polynomial.constant(1)
    g = to_sympy(p, gens).gcd(to_sympy(q, gens))
    return normalize(from_sympy(g, gens))


def content_wrt(p: Polynomial, v: Variable) -> Polynomial:
    """Normalized gcd of the coefficients of p viewed as a polynomial in v."""
    return reduce(gcd, (c for c in coefficients_wrt(p, v) if not c.is_zero), Polynomial.zero())


def squarefree_part(p: Polynomial, v: Variable) -> Polynomial:
    """p / gcd(p, dp/dv), primitive and sign-normalized."""
    if p.degree_in(v) < 1:
        raise DegreeZero(f"squarefree part w.r.t. {v} of a polynomial free of {v}")
    g = gcd(p, derivative_wrt(p, v))
    return normalize(exact_quotient(p, g))
