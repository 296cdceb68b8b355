"""Shared fixtures: variables, problem builders and the bundled mini-corpus."""

from pathlib import Path

import pytest

from cadorder.ingest import FormulaNode, ProblemInstance, Quantifier, Relation, load_corpus, load_problem
from cadorder.polys import make_variables, parse_polynomial

REPO_ROOT = Path(__file__).resolve().parent.parent
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"
CORPUS_DIR = REPO_ROOT / "data" / "corpus"
LABELS_DIR = REPO_ROOT / "data" / "labels"


@pytest.fixture
def xs():
    return make_variables(3)


@pytest.fixture
def poly(xs):
    """poly("x0^2 - x1") parsed over x0, x1, x2."""
    names = {v.display_name: v for v in xs}
    return lambda text: parse_polynomial(text, names)


@pytest.fixture
def make_problem(xs, poly):
    """
    Build a conjunction of ``p = 0`` constraints.

    quantifiers: "EEE" (default), "" for none, or e.g. "AE" for a block over
    the last len(quantifiers) variables.
    """

    def build(texts, quantifiers="EEE", problem_id="test", relation=Relation.EQ):
        atoms = [FormulaNode.atom(poly(t), relation) for t in texts]
        quantified = xs[len(xs) - len(quantifiers):] if quantifiers else ()
        block = tuple((Quantifier(q), v) for q, v in zip(quantifiers, quantified))
        return ProblemInstance(problem_id, xs, block, FormulaNode.conjunction(atoms))

    return build


@pytest.fixture
def sphere():
    return load_problem(CORPUS_DIR / "p25.smt2")


@pytest.fixture(scope="session")
def corpus():
    return load_corpus(CORPUS_DIR)


@pytest.fixture
def golden():
    return lambda name: (GOLDEN_DIR / name).read_text(encoding="utf-8")
