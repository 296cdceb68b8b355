"""
Reader for the small SMT-LIB real-arithmetic subset used by nlsat-style
benchmarks: declarations of real constants, asserts over and/or/not of
polynomial comparisons. Every declared constant becomes an existentially
quantified variable.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import Poly, QQ, Rational

from cadorder.errors import ParseError, UnsupportedConstruct
from cadorder.ingest.problem import FormulaNode, ProblemInstance, Quantifier, Relation
from cadorder.polys.algebra import from_sympy, generators
from cadorder.polys.polynomial import Variable

logger = logging.getLogger(__name__)

_RELATIONS = {
    "=": Relation.EQ,
    "<": Relation.LT,
    "<=": Relation.LE,
    ">": Relation.GT,
    ">=": Relation.GE,
}

_IGNORED_COMMANDS = {"set-logic", "set-info", "set-option", "check-sat", "exit", "get-model"}


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


SExpr = Union[Token, list]


def tokenize(text: str) -> list[Token]:
    """Split into parentheses, symbols, numerals, strings and |quoted| symbols."""
    tokens: list[Token] = []
    line, column = 1, 1
    i = 0
    n = len(text)

    def advance(count: int):
        nonlocal i, line, column
        for _ in range(count):
            if text[i] == "\n":
                line, column = line + 1, 1
            else:
                column += 1
            i += 1

    while i < n:
        ch = text[i]
        if ch.isspace():
            advance(1)
        elif ch == ";":
            while i < n and text[i] != "\n":
                advance(1)
        elif ch in "()":
            tokens.append(Token(ch, line, column))
            advance(1)
        elif ch in "|\"":
            start_line, start_col = line, column
            end = text.find(ch, i + 1)
            if end < 0:
                raise ParseError(f"unterminated {ch}", start_line, start_col)
            tokens.append(Token(text[i:end + 1], start_line, start_col))
            advance(end + 1 - i)
        else:
            start_line, start_col = line, column
            j = i
            while j < n and not text[j].isspace() and text[j] not in "();|\"":
                j += 1
            tokens.append(Token(text[i:j], start_line, start_col))
            advance(j - i)
    return tokens


def read_sexprs(tokens: list[Token]) -> list[SExpr]:
    """Group tokens into nested lists."""
    stack: list[list] = [[]]
    openers: list[Token] = []
    for tok in tokens:
        if tok.text == "(":
            stack.append([])
            openers.append(tok)
        elif tok.text == ")":
            if len(stack) == 1:
                raise ParseError("unbalanced ')'", tok.line, tok.column)
            done = stack.pop()
            openers.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(tok)
    if openers:
        raise ParseError("unclosed '('", openers[-1].line, openers[-1].column)
    return stack[0]


def _head(expr: SExpr) -> Token:
    if isinstance(expr, Token):
        return expr
    if not expr:
        raise ParseError("empty expression")
    first = expr[0]
    if not isinstance(first, Token):
        return _head(first)
    return first


class _Translator:
    """Turns assert bodies into FormulaNodes over the declared variables."""

    def __init__(self):
        self.variables: list[Variable] = []
        self.by_name: dict[str, Variable] = {}
        self._gens = None

    def declare(self, name: Token):
        if name.text in self.by_name:
            raise ParseError(f"{name.text} declared twice", name.line, name.column)
        v = Variable(len(self.variables), name.text.strip("|"))
        self.variables.append(v)
        self.by_name[name.text] = v
        self._gens = None

    @property
    def gens(self):
        if self._gens is None:
            self._gens = generators(len(self.variables))
        return self._gens

    def _constant(self, value: Fraction) -> Poly:
        return Poly(Rational(value.numerator, value.denominator), *self.gens, domain=QQ)

    def arith(self, expr: SExpr) -> Poly:
        if isinstance(expr, Token):
            text = expr.text
            if text in self.by_name:
                return Poly(self.gens[self.by_name[text].index], *self.gens, domain=QQ)
            try:
                return self._constant(Fraction(text))
            except ValueError:
                raise ParseError(f"undeclared symbol {text!r}", expr.line, expr.column)
        head = _head(expr)
        args = expr[1:]
        op = head.text
        if op == "+" and args:
            result = self.arith(args[0])
            for a in args[1:]:
                result = result + self.arith(a)
            return result
        if op == "-" and args:
            first = self.arith(args[0])
            if len(args) == 1:
                return -first
            for a in args[1:]:
                first = first - self.arith(a)
            return first
        if op == "*" and args:
            result = self.arith(args[0])
            for a in args[1:]:
                result = result * self.arith(a)
            return result
        if op == "/" and len(args) == 2:
            numerator = self.arith(args[0])
            denominator = self.arith(args[1])
            if not denominator.is_ground:
                raise UnsupportedConstruct("/", head.line, head.column)
            value = denominator.LC() if not denominator.is_zero else 0
            if value == 0:
                raise ParseError("division by zero", head.line, head.column)
            return numerator * Poly(1 / value, *self.gens, domain=QQ)
        raise UnsupportedConstruct(op, head.line, head.column)

    def formula(self, expr: SExpr) -> FormulaNode:
        head = _head(expr)
        if isinstance(expr, Token):
            raise UnsupportedConstruct(head.text, head.line, head.column)
        op = head.text
        args = expr[1:]
        if op in ("and", "or") and args:
            children = [self.formula(a) for a in args]
            return FormulaNode.conjunction(children) if op == "and" else FormulaNode.disjunction(children)
        if op == "not" and len(args) == 1:
            return FormulaNode.negation(self.formula(args[0]))
        if op in _RELATIONS and len(args) == 2:
            difference = self.arith(args[0]) - self.arith(args[1])
            _, cleared = difference.clear_denoms(convert=True)
            return FormulaNode.atom(from_sympy(cleared, self.variables), _RELATIONS[op])
        raise UnsupportedConstruct(op, head.line, head.column)


def parse_smtlib(text: str, problem_id: str = "problem") -> ProblemInstance:
    """
    Parse an SMT-LIB script in the supported subset.

    Args:
        text: script text
        problem_id: id for the resulting problem (scripts carry none)

    Returns:
        A fully existential ProblemInstance; several asserts are conjoined.
    """
    translator = _Translator()
    asserts: list[FormulaNode] = []
    for command in read_sexprs(tokenize(text)):
        if isinstance(command, Token):
            raise ParseError(f"expected a command, found {command.text!r}", command.line, command.column)
        head = _head(command)
        name = head.text
        if name in _IGNORED_COMMANDS:
            continue
        if name == "declare-fun":
            if len(command) != 4 or command[2] != [] or not _is_real(command[3]):
                raise UnsupportedConstruct("declare-fun", head.line, head.column)
            translator.declare(command[1])
        elif name == "declare-const":
            if len(command) != 3 or not _is_real(command[2]):
                raise UnsupportedConstruct("declare-const", head.line, head.column)
            translator.declare(command[1])
        elif name == "assert":
            if len(command) != 2:
                raise ParseError("assert takes one term", head.line, head.column)
            if not translator.variables:
                raise ParseError("assert before any variable declaration", head.line, head.column)
            asserts.append(translator.formula(command[1]))
        else:
            raise UnsupportedConstruct(name, head.line, head.column)

    if not asserts:
        raise ParseError("no assert found")
    variables = tuple(translator.variables)
    logger.debug("parsed %s: %d variables, %d asserts", problem_id, len(variables), len(asserts))
    return ProblemInstance(
        id=problem_id,
        variables=variables,
        quantifier_block=tuple((Quantifier.EXISTS, v) for v in variables),
        formula=FormulaNode.conjunction(asserts),
    )


def _is_real(sort: SExpr) -> bool:
    return isinstance(sort, Token) and sort.text == "Real"
