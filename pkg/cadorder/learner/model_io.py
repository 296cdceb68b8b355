"""
Model files:

    cadorder-svm 1
    kernel rbf
    gamma <g>
    bias <b>
    dimensions <d>
    support_vectors <n>
    <coefficient> 1:<v1> ... d:<vd>      (n lines)
"""

from __future__ import annotations

from cadorder.errors import ParseError
from cadorder.features.sparse_format import format_values, parse_values
from cadorder.learner.kernel import KernelParams
from cadorder.learner.smo import SvmModel

MAGIC = "cadorder-svm"
VERSION = 1


def save_model(model: SvmModel) -> str:
    lines = [
        f"{MAGIC} {VERSION}",
        "kernel rbf",
        f"gamma {model.kernel.gamma!r}",
        f"bias {model.bias!r}",
        f"dimensions {model.dimension or 0}",
        f"support_vectors {len(model.support_vectors)}",
    ]
    for coefficient, sv in zip(model.dual_coefficients, model.support_vectors):
        lines.append(f"{coefficient!r} {format_values(sv)}".rstrip())
    return "\n".join(lines) + "\n"


def _header(lines: list[str], lineno: int, key: str) -> str:
    if lineno > len(lines):
        raise ParseError(f"missing {key!r} line", lineno, 1)
    name, _, value = lines[lineno - 1].partition(" ")
    if name != key or not value:
        raise ParseError(f"expected {key!r}, got {lines[lineno - 1]!r}", lineno, 1)
    return value.strip()


def _number(lines: list[str], lineno: int, key: str, kind):
    value = _header(lines, lineno, key)
    try:
        return kind(value)
    except ValueError:
        raise ParseError(f"bad {key} value {value!r}", lineno, 1)


def load_model(text: str) -> SvmModel:
    """
    Raises:
        ParseError: wrong magic, unsupported version or malformed lines.
    """
    lines = text.splitlines()
    version = _number(lines, 1, MAGIC, int)
    if version != VERSION:
        raise ParseError(f"unsupported model version {version}", 1, 1)
    if _header(lines, 2, "kernel") != "rbf":
        raise ParseError("only rbf models are supported", 2, 1)
    gamma = _number(lines, 3, "gamma", float)
    bias = _number(lines, 4, "bias", float)
    width = _number(lines, 5, "dimensions", int)
    count = _number(lines, 6, "support_vectors", int)

    body = lines[6:]
    if len(body) != count:
        raise ParseError(f"expected {count} support vectors, found {len(body)}", 7, 1)
    coefficients, vectors = [], []
    for lineno, raw in enumerate(body, start=7):
        fields = raw.split()
        if not fields:
            raise ParseError("empty support vector line", lineno, 1)
        try:
            coefficients.append(float(fields[0]))
        except ValueError:
            raise ParseError(f"bad coefficient {fields[0]!r}", lineno, 1)
        vectors.append(parse_values(fields[1:], lineno, width=width))
    return SvmModel(tuple(vectors), tuple(coefficients), bias, KernelParams(gamma))
