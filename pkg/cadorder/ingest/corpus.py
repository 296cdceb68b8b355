"""Loading problem files and label files from disk."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Sequence, Union

from cadorder.errors import InputError
from cadorder.ingest.labels import CellCountRecord, parse_labels
from cadorder.ingest.native import parse_native
from cadorder.ingest.problem import ProblemInstance
from cadorder.ingest.smtlib import parse_smtlib

logger = logging.getLogger(__name__)

PROBLEM_SUFFIXES = (".smt2", ".problem")


def parse_problem(text: str, format: str, problem_id: str = "problem") -> ProblemInstance:
    """
    Parse problem text.

    Args:
        text: file contents
        format: "smt_subset" or "native"
        problem_id: id for SMT-LIB input (native files carry their own)
    """
    if format == "smt_subset":
        return parse_smtlib(text, problem_id)
    if format == "native":
        return parse_native(text)
    raise InputError(f"unknown problem format {format!r}")


def load_problem(path: Union[str, Path]) -> ProblemInstance:
    """Read one .smt2 or .problem file; SMT-LIB ids come from the file stem."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".smt2":
        return parse_problem(text, "smt_subset", problem_id=path.stem)
    if path.suffix == ".problem":
        return parse_problem(text, "native")
    raise InputError(f"{path}: expected one of {', '.join(PROBLEM_SUFFIXES)}")


def load_corpus(directory: Union[str, Path]) -> list[ProblemInstance]:
    """All problem files of a directory, in sorted file-name order."""
    directory = Path(directory)
    if not directory.is_dir():
        raise InputError(f"corpus directory not found: {directory}")
    files = sorted(p for p in directory.iterdir() if p.suffix in PROBLEM_SUFFIXES)
    problems = [load_problem(p) for p in files]
    ids = [p.id for p in problems]
    duplicates = sorted({i for i in ids if ids.count(i) > 1})
    if duplicates:
        raise InputError(f"duplicate problem ids in {directory}: {', '.join(duplicates)}")
    logger.info("loaded %d problems from %s", len(problems), directory)
    return problems


def load_labels(path: Union[str, Path], problems: Sequence[ProblemInstance]) -> list[CellCountRecord]:
    """Parse a label file against the given problems' variables."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_labels(text, {p.id: p.variables for p in problems})
