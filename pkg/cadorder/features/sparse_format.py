"""
Sparse example files, one example per line:

    <label> 1:<v1> 2:<v2> ... 11:<v11> # <problem_id>

Indices are 1-based and ascending; omitted indices read as 0.
"""

from __future__ import annotations

from typing import Sequence

from cadorder.errors import ParseError
from cadorder.features.extract import FEATURE_COUNT
from cadorder.features.labelling import LabeledExample


def format_values(values: Sequence[float]) -> str:
    return " ".join(f"{i}:{float(v)!r}" for i, v in enumerate(values, start=1))


def parse_values(fields: Sequence[str], lineno: int, width: int = FEATURE_COUNT) -> tuple[float, ...]:
    values = [0.0] * width
    last = 0
    for field in fields:
        index_text, sep, value_text = field.partition(":")
        if not sep or not index_text.isdigit():
            raise ParseError(f"bad feature entry {field!r}", lineno, 1)
        index = int(index_text)
        if index <= last or index > width:
            raise ParseError(f"feature index {index} out of order or range", lineno, 1)
        try:
            values[index - 1] = float(value_text)
        except ValueError:
            raise ParseError(f"bad feature value {value_text!r}", lineno, 1)
        last = index
    return tuple(values)


def write_examples(examples: Sequence[LabeledExample]) -> str:
    lines = [f"{e.label:+d} {format_values(e.features)} # {e.problem_id}" for e in examples]
    return "\n".join(lines) + "\n" if lines else ""


def read_examples(text: str) -> list[LabeledExample]:
    examples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        fields = body.split()
        if not fields:
            continue
        try:
            label = int(fields[0])
        except ValueError:
            raise ParseError(f"bad label {fields[0]!r}", lineno, 1)
        if label not in (1, -1):
            raise ParseError(f"label must be +1 or -1, got {label}", lineno, 1)
        problem_id = comment.strip() or f"example-{lineno}"
        examples.append(LabeledExample(problem_id, parse_values(fields[1:], lineno), label))
    return examples
