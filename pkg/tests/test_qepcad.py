import pytest

from cadorder.errors import InadmissibleOrdering
from cadorder.ingest import Relation, emit_qepcad_script, strip_quantifiers
from cadorder.projection.ordering import VariableOrdering


def parse_ordering(problem, text):
    return VariableOrdering.parse(text, problem.variables_by_name())


class TestGolden:
    def test_quantified_session(self, sphere, golden):
        script = emit_qepcad_script(sphere, parse_ordering(sphere, "x2,x1,x0"), quantified=True)
        assert script == golden("sphere_quantified.txt")

    def test_quantifier_free_session(self, sphere, golden):
        script = emit_qepcad_script(sphere, parse_ordering(sphere, "x2,x1,x0"), quantified=False)
        assert script == golden("sphere_quantifier_free.txt")

    def test_stripped_problem_matches(self, sphere, golden):
        stripped = strip_quantifiers(sphere)
        script = emit_qepcad_script(stripped, parse_ordering(stripped, "x2,x1,x0"), quantified=False)
        assert script == golden("sphere_quantifier_free.txt")


class TestRendering:
    def test_tuple_is_reversed_elimination_order(self, sphere):
        script = emit_qepcad_script(sphere, parse_ordering(sphere, "x1,x0,x2"), quantified=False)
        assert script.splitlines()[0] == "(x2,x0,x1)"

    def test_free_variables_and_prefix(self, make_problem):
        problem = make_problem(["x0^2 - x1", "x2 - 3"], quantifiers="EE")
        lines = emit_qepcad_script(problem, parse_ordering(problem, "x2,x1,x0"), quantified=True).splitlines()
        assert lines[:3] == [
            "(x0,x1,x2)",
            "1",
            "(Ex1)(Ex2)[[[((x0 x0) + (-1 x1)) = 0] /\\ [x2 = 3]]].",
        ]

    def test_relations(self, make_problem):
        problem = make_problem(["x0 - 1"], quantifiers="", relation=Relation.NE)
        script = emit_qepcad_script(problem, parse_ordering(problem, "x0,x1,x2"), quantified=False)
        assert "[[x0 /= 1]]." in script


class TestAdmissibility:
    def test_free_variable_first_is_rejected(self, make_problem):
        problem = make_problem(["x0 + x1 + x2"], quantifiers="EE")
        with pytest.raises(InadmissibleOrdering):
            emit_qepcad_script(problem, parse_ordering(problem, "x0,x1,x2"), quantified=True)

    def test_quantifier_free_session_accepts_any_order(self, make_problem):
        problem = make_problem(["x0 + x1 + x2"], quantifiers="EE")
        emit_qepcad_script(problem, parse_ordering(problem, "x0,x1,x2"), quantified=False)

    def test_alternation_fixes_order(self, make_problem):
        problem = make_problem(["x0 + x1 + x2"], quantifiers="AE")
        emit_qepcad_script(problem, parse_ordering(problem, "x2,x1,x0"), quantified=True)
        with pytest.raises(InadmissibleOrdering):
            emit_qepcad_script(problem, parse_ordering(problem, "x1,x2,x0"), quantified=True)
