# Problem, label and script I/O
from cadorder.ingest.problem import (
    Relation,
    Connective,
    Quantifier,
    Constraint,
    FormulaNode,
    ProblemInstance,
    polynomials_of,
    strip_quantifiers,
    select_by_arity,
)
from cadorder.ingest.smtlib import parse_smtlib
from cadorder.ingest.native import parse_native, render_problem
from cadorder.ingest.labels import TIMEOUT, Metric, CellCountRecord, parse_labels, render_labels
from cadorder.ingest.split import DatasetSplit, split_dataset
from cadorder.ingest.qepcad import emit_qepcad_script
from cadorder.ingest.corpus import parse_problem, load_problem, load_corpus, load_labels

__all__ = [
    "Relation",
    "Connective",
    "Quantifier",
    "Constraint",
    "FormulaNode",
    "ProblemInstance",
    "polynomials_of",
    "strip_quantifiers",
    "select_by_arity",
    "parse_smtlib",
    "parse_native",
    "render_problem",
    "TIMEOUT",
    "Metric",
    "CellCountRecord",
    "parse_labels",
    "render_labels",
    "DatasetSplit",
    "split_dataset",
    "emit_qepcad_script",
    "parse_problem",
    "load_problem",
    "load_corpus",
    "load_labels",
]
