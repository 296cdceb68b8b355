"""
Sparse multivariate polynomials with exact integer coefficients.

A Polynomial is an immutable tuple of Monomials kept in canonical order:
descending graded-lexicographic, with x0 > x1 > x2 > ... by variable index.
Equal polynomials therefore have identical term tuples and identical text.

Text form (used everywhere for fixtures and debug output):
    x0^4*x2 + 9*x1 - 6*x0^2 - 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from cadorder.errors import ParseError


@dataclass(frozen=True, order=True)
class Variable:
    """A problem variable: position in the problem plus its printed name."""
    index: int
    display_name: str

    def __str__(self) -> str:
        return self.display_name


def make_variables(count: int, prefix: str = "x") -> tuple[Variable, ...]:
    """The variables x0, x1, ... used by most problems."""
    return tuple(Variable(i, f"{prefix}{i}") for i in range(count))


# Sorted by variable, every exponent positive.
Exponents = tuple[tuple[Variable, int], ...]


def _exponent_key(exponents: Exponents) -> tuple:
    total = sum(e for _, e in exponents)
    # (-index, e) pairs compare lexicographically with lower indices dominating.
    lex = tuple((-v.index, e) for v, e in exponents)
    names = tuple(v.display_name for v, _ in exponents)
    return (total, lex, names)


def _normalize_exponents(pairs: Iterable[tuple[Variable, int]]) -> Exponents:
    merged: dict[Variable, int] = {}
    for v, e in pairs:
        if e < 0:
            raise ValueError(f"negative exponent for {v}")
        if e:
            merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


@dataclass(frozen=True)
class Monomial:
    """coefficient * product of v^e over exponents."""
    exponents: Exponents
    coefficient: int

    def __post_init__(self):
        if self.coefficient == 0:
            raise ValueError("monomial coefficient must be nonzero")
        if any(e <= 0 for _, e in self.exponents):
            raise ValueError("monomial exponents must be positive")

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self.exponents)

    @property
    def variables(self) -> tuple[Variable, ...]:
        return tuple(v for v, _ in self.exponents)

    def degree_in(self, v: Variable) -> int:
        for u, e in self.exponents:
            if u == v:
                return e
        return 0

    def contains(self, v: Variable) -> bool:
        return self.degree_in(v) > 0

    def monomial_text(self) -> str:
        """The power product without the coefficient, e.g. ``x0^4*x2``."""
        return "*".join(v.display_name if e == 1 else f"{v.display_name}^{e}" for v, e in self.exponents)

    def __str__(self) -> str:
        if not self.exponents:
            return str(self.coefficient)
        if self.coefficient == 1:
            return self.monomial_text()
        if self.coefficient == -1:
            return "-" + self.monomial_text()
        return f"{self.coefficient}*{self.monomial_text()}"


Scalar = Union[int, "Polynomial"]


@dataclass(frozen=True)
class Polynomial:
    """Immutable sparse polynomial; build with from_terms, constant or variable."""
    terms: tuple[Monomial, ...] = ()

    # --- construction ---

    @classmethod
    def from_terms(cls, items: Union[Mapping[Exponents, int], Iterable[tuple[Exponents, int]]]) -> Polynomial:
        """Canonicalize (exponents, coefficient) pairs: merge, drop zeros, sort."""
        pairs = items.items() if isinstance(items, Mapping) else items
        collected: dict[Exponents, int] = {}
        for exponents, coefficient in pairs:
            key = _normalize_exponents(exponents)
            collected[key] = collected.get(key, 0) + int(coefficient)
        ordered = sorted(
            ((k, c) for k, c in collected.items() if c != 0),
            key=lambda kc: _exponent_key(kc[0]),
            reverse=True,
        )
        return cls(tuple(Monomial(k, c) for k, c in ordered))

    @classmethod
    def constant(cls, value: int) -> Polynomial:
        return cls.from_terms({(): value})

    @classmethod
    def variable(cls, v: Variable) -> Polynomial:
        return cls.from_terms({((v, 1),): 1})

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(())

    def _items(self) -> list[tuple[Exponents, int]]:
        return [(t.exponents, t.coefficient) for t in self.terms]

    # --- queries ---

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not t.exponents for t in self.terms)

    @property
    def constant_value(self) -> int:
        """The constant term (0 if absent)."""
        for t in self.terms:
            if not t.exponents:
                return t.coefficient
        return 0

    @property
    def variables(self) -> tuple[Variable, ...]:
        found = {v for t in self.terms for v in t.variables}
        return tuple(sorted(found))

    @property
    def leading_coefficient(self) -> int:
        """Coefficient of the leading term under the canonical order (0 for zero)."""
        return self.terms[0].coefficient if self.terms else 0

    def total_degree(self) -> int:
        return max((t.total_degree for t in self.terms), default=0)

    def degree_in(self, v: Variable) -> int:
        return max((t.degree_in(v) for t in self.terms), default=0)

    def contains(self, v: Variable) -> bool:
        return any(t.contains(v) for t in self.terms)

    # --- arithmetic ---

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(Monomial(t.exponents, -t.coefficient) for t in self.terms))

    def __add__(self, other: Scalar) -> Polynomial:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial.from_terms(self._items() + other._items())

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> Polynomial:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: Scalar) -> Polynomial:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        products = []
        for a in self.terms:
            for b in other.terms:
                products.append((a.exponents + b.exponents, a.coefficient * b.coefficient))
        return Polynomial.from_terms(products)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def relabel(self, mapping: Mapping[Variable, Variable]) -> Polynomial:
        """Rename variables; variables missing from the mapping are kept."""
        return Polynomial.from_terms(
            (tuple((mapping.get(v, v), e) for v, e in t.exponents), t.coefficient) for t in self.terms
        )

    # --- text ---

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, t in enumerate(self.terms):
            text = str(t)
            if i == 0:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f" - {text[1:]}")
            else:
                parts.append(f" + {text}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _lift(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Polynomial.constant(value)
    return NotImplemented


def total_degree(p: Polynomial) -> int:
    """Max total degree over terms; 0 for constants and for the zero polynomial."""
    return p.total_degree()


def degree_in(p: Polynomial, v: Variable) -> int:
    """Max exponent of v over terms; 0 if v is absent."""
    return p.degree_in(v)


def sort_key(p: Polynomial) -> str:
    """Deterministic iteration order for polynomial sets."""
    return str(p)


def sorted_polys(polys: Iterable[Polynomial]) -> list[Polynomial]:
    return sorted(polys, key=sort_key)


# --- parsing ---

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^]))")


def parse_polynomial(
    text: str,
    variables: Mapping[str, Variable],
    line: Optional[int] = None,
) -> Polynomial:
    """
    Parse the canonical text form back into a Polynomial.

    Accepts any sum of products of integers and (possibly powered) variables,
    so hand-written fixtures need not be in canonical order.

    Args:
        text: e.g. ``"x0^4*x2 + 9*x1"``
        variables: name -> Variable for every name allowed in text
        line: line number to report in ParseError

    Returns:
        The canonical Polynomial.
    """
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {stripped[pos]!r} in polynomial", line, pos + 1)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial", line, 1)

    index = 0

    def peek() -> Optional[tuple[str, str, int]]:
        return tokens[index] if index < len(tokens) else None

    def take() -> tuple[str, str, int]:
        nonlocal index
        tok = peek()
        if tok is None:
            raise ParseError("unexpected end of polynomial", line, len(stripped) + 1)
        index += 1
        return tok

    def factor() -> Polynomial:
        kind, value, col = take()
        if kind == "int":
            return Polynomial.constant(int(value))
        if kind == "name":
            if value not in variables:
                raise ParseError(f"undeclared variable {value!r}", line, col)
            base = Polynomial.variable(variables[value])
            nxt = peek()
            if nxt and nxt[1] == "^":
                take()
                ekind, evalue, ecol = take()
                if ekind != "int":
                    raise ParseError("exponent must be a nonnegative integer", line, ecol)
                return base ** int(evalue)
            return base
        raise ParseError(f"unexpected {value!r}", line, col)

    def term() -> Polynomial:
        result = factor()
        while peek() and peek()[1] == "*":
            take()
            result = result * factor()
        return result

    sign = 1
    if peek()[1] in "+-":
        sign = -1 if take()[1] == "-" else 1
    total = term() * sign
    while peek() is not None:
        kind, value, col = take()
        if value not in "+-" or kind != "op":
            raise ParseError(f"expected '+' or '-', found {value!r}", line, col)
        rhs = term()
        total = total + rhs if value == "+" else total - rhs
    return total
