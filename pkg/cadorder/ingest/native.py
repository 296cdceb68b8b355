"""
Native problem format.

    # comments and blank lines are ignored
    id: sphere
    vars: x0, x1, x2
    quantifiers: E x0, E x1, E x2
    formula: (and (= x0^2 + x1^2 + x2^2 - 1) (> x0))

Atoms are ``(rel polynomial)`` meaning ``polynomial rel 0``; connectives are
``and``, ``or`` (two or more children) and ``not`` (one child). Indented
lines continue the previous field.
"""

from __future__ import annotations

from typing import Optional

from cadorder.errors import ParseError
from cadorder.ingest.problem import (
    Connective,
    FormulaNode,
    ProblemInstance,
    Quantifier,
    Relation,
)
from cadorder.polys.polynomial import Variable, parse_polynomial

FIELDS = ("id", "vars", "quantifiers", "formula")

_RELATIONS = {r.value: r for r in Relation}


def _read_fields(text: str) -> dict[str, tuple[str, int]]:
    fields: dict[str, tuple[str, int]] = {}
    current: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        if raw[0].isspace():
            if current is None:
                raise ParseError("continuation line before any field", lineno, 1)
            value, start = fields[current]
            fields[current] = (f"{value} {raw.strip()}", start)
            continue
        key, sep, value = raw.partition(":")
        key = key.strip()
        if not sep or key not in FIELDS:
            raise ParseError(f"expected one of {', '.join(FIELDS)}", lineno, 1)
        if key in fields:
            raise ParseError(f"field {key!r} given twice", lineno, 1)
        fields[key] = (value.strip(), lineno)
        current = key
    missing = [f for f in FIELDS if f not in fields and f != "quantifiers"]
    if missing:
        raise ParseError(f"missing field {missing[0]!r}")
    return fields


class _FormulaReader:
    def __init__(self, text: str, variables: dict[str, Variable], line: int):
        self.text = text
        self.variables = variables
        self.line = line
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.pos + 1)

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def word(self) -> str:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and not self.text[self.pos].isspace() and self.text[self.pos] not in "()":
            self.pos += 1
        return self.text[start:self.pos]

    def expect(self, ch: str):
        self.skip_space()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def node(self) -> FormulaNode:
        self.expect("(")
        op = self.word()
        if op in _RELATIONS:
            end = self.text.find(")", self.pos)
            if end < 0:
                raise self.error("unclosed atom")
            lhs = parse_polynomial(self.text[self.pos:end].strip(), self.variables, self.line)
            self.pos = end + 1
            return FormulaNode.atom(lhs, _RELATIONS[op])
        if op in ("and", "or", "not"):
            children = []
            self.skip_space()
            while self.pos < len(self.text) and self.text[self.pos] == "(":
                children.append(self.node())
                self.skip_space()
            self.expect(")")
            kind = Connective(op)
            try:
                return FormulaNode(kind, children=tuple(children))
            except ValueError as e:
                raise self.error(str(e))
        raise self.error(f"unknown operator {op!r}")

    def read(self) -> FormulaNode:
        root = self.node()
        self.skip_space()
        if self.pos != len(self.text):
            raise self.error("trailing text after formula")
        return root


def parse_native(text: str) -> ProblemInstance:
    """Parse the native problem format."""
    fields = _read_fields(text)
    problem_id = fields["id"][0]
    if not problem_id:
        raise ParseError("empty id", fields["id"][1], 1)

    names = [n.strip() for n in fields["vars"][0].split(",") if n.strip()]
    variables = tuple(Variable(i, name) for i, name in enumerate(names))
    by_name = {v.display_name: v for v in variables}

    block = []
    q_text, q_line = fields.get("quantifiers", ("", 0))
    for entry in (e.strip() for e in q_text.split(",") if e.strip()):
        parts = entry.split()
        if len(parts) != 2 or parts[0] not in ("E", "A"):
            raise ParseError(f"bad quantifier {entry!r}, expected 'E x' or 'A x'", q_line, 1)
        if parts[1] not in by_name:
            raise ParseError(f"quantified variable {parts[1]!r} not declared", q_line, 1)
        block.append((Quantifier(parts[0]), by_name[parts[1]]))

    f_text, f_line = fields["formula"]
    formula = _FormulaReader(f_text, by_name, f_line).read()
    return ProblemInstance(
        id=problem_id,
        variables=variables,
        quantifier_block=tuple(block),
        formula=formula,
    )


def render_formula(node: FormulaNode) -> str:
    if node.constraint is not None:
        return f"({node.constraint.relation.value} {node.constraint.lhs})"
    inner = " ".join(render_formula(c) for c in node.children)
    return f"({node.kind.value} {inner})"


def render_problem(problem: ProblemInstance) -> str:
    """Native text for a problem; parse_native(render_problem(p)) == p."""
    quantifiers = ", ".join(f"{q.value} {v.display_name}" for q, v in problem.quantifier_block)
    lines = [
        f"id: {problem.id}",
        "vars: " + ", ".join(v.display_name for v in problem.variables),
        f"quantifiers: {quantifiers}".rstrip(),
        f"formula: {render_formula(problem.formula)}",
    ]
    return "\n".join(lines) + "\n"
