import random
from fractions import Fraction as F

import numpy as np
import pytest

from cadorder.errors import AllTimeout, DimensionMismatch, EmptyInput, EmptySet, ParseError, WrongArity
from cadorder.features import (
    FeatureVector,
    LabeledExample,
    apply_normalization,
    extract_features,
    fit_normalization,
    is_best,
    label_example,
    read_examples,
    write_examples,
)
from cadorder.heuristics import Heuristic, HeuristicChoice
from cadorder.ingest import Metric, parse_labels, parse_native
from cadorder.projection import VariableOrdering

from test_projection import random_problem


def vector(*values):
    return FeatureVector(tuple(F(v) for v in values))


class TestExtract:
    def test_worked_example(self, make_problem):
        problem = make_problem(["-6*x0^2 - x2^3 - 1", "x0^4*x2 + 9*x1", "x0 + x0^2 - x2*x0 - 5"])
        assert extract_features(problem).values == (
            3, 5, 4, 1, 3, 1, F(1, 3), 1, F(5, 9), F(1, 9), F(1, 3),
        )

    def test_single_product(self, make_problem):
        assert extract_features(make_problem(["x0*x1*x2"])).values == (1, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1)

    def test_univariate(self, make_problem):
        assert extract_features(make_problem(["x0^2 - 1"])).values == (1, 2, 2, 0, 0, 1, 0, 0, F(1, 2), 0, 0)

    def test_wrong_arity(self):
        problem = parse_native("id: t\nvars: x0, x1\nquantifiers:\nformula: (= x0 + x1)\n")
        with pytest.raises(WrongArity):
            extract_features(problem)

    def test_empty(self, make_problem):
        with pytest.raises(EmptyInput):
            extract_features(make_problem(["4"]))

    def test_scaling_and_reordering(self, make_problem, poly, xs):
        rng = random.Random(4)
        for _ in range(100):
            problem = random_problem(rng, make_problem, xs)
            texts = [str(c.lhs) for c in problem.formula.constraints()]
            scaled = make_problem([str(poly(t) * -7) for t in reversed(texts)])
            assert extract_features(problem) == extract_features(scaled)

    def test_shares_are_proportions(self, corpus):
        for problem in corpus:
            values = extract_features(problem).values
            assert all(0 <= v <= 1 for v in values[5:])
            assert all(v.denominator == 1 for v in values[:5])


class TestNormalization:
    def test_population_std(self):
        params = fit_normalization([vector(x, *[0] * 10) for x in (1, 2, 3)])
        assert params.means[0] == pytest.approx(2.0)
        assert params.stds[0] == pytest.approx((2 / 3) ** 0.5)

    def test_constant_column(self):
        params = fit_normalization([vector(5, *[0] * 10)] * 3)
        assert params.means[0] == pytest.approx(5.0)
        assert params.stds[0] == 1.0

    def test_single_sample(self):
        fv = vector(*range(11))
        params = fit_normalization([fv])
        assert params.stds == (1.0,) * 11
        assert apply_normalization(params, fv) == pytest.approx((0.0,) * 11)

    def test_apply(self):
        train = [vector(x, *[0] * 10) for x in (1, 2, 3)]
        params = fit_normalization(train)
        column = [apply_normalization(params, fv)[0] for fv in train]
        assert column == pytest.approx([-1.2247, 0.0, 1.2247], abs=1e-4)
        assert apply_normalization(params, vector(9, *[0] * 10))[0] > 1

    def test_training_columns_are_standardized(self, corpus):
        train = [extract_features(p) for p in corpus]
        params = fit_normalization(train)
        matrix = np.array([apply_normalization(params, fv) for fv in train])
        raw = np.array([fv.as_floats() for fv in train])
        for j in range(matrix.shape[1]):
            assert abs(matrix[:, j].mean()) < 1e-9
            if raw[:, j].std() > 0:
                assert abs(matrix[:, j].var() - 1) < 1e-9
            else:
                assert np.all(matrix[:, j] == 0)

    def test_empty(self):
        with pytest.raises(EmptySet):
            fit_normalization([])

    def test_dimension_mismatch(self):
        params = fit_normalization([vector(*range(11))])
        short = type(params)(params.means[:5], params.stds[:5])
        with pytest.raises(DimensionMismatch):
            apply_normalization(short, vector(*range(11)))


class TestLabels:
    @pytest.fixture
    def record(self, xs):
        text = "test output_cells x0,x1,x2=10;x0,x2,x1=10;x1,x0,x2=57;x1,x2,x0=12;x2,x0,x1=TIMEOUT\n"
        [record] = parse_labels(text, {"test": xs})
        return record

    @pytest.fixture
    def choice(self, xs):
        def build(text):
            ordering = VariableOrdering.parse(text, {v.display_name: v for v in xs})
            return HeuristicChoice(Heuristic.BROWN, ordering, (ordering,))

        return build

    def test_tied_best_orderings(self, make_problem, record, choice):
        problem = make_problem(["x0*x1 - x2"])
        assert label_example(problem, choice("x0,x1,x2"), record).label == 1
        assert label_example(problem, choice("x0,x2,x1"), record).label == 1

    def test_worse_ordering(self, make_problem, record, choice):
        assert label_example(make_problem(["x0*x1 - x2"]), choice("x1,x2,x0"), record).label == -1

    def test_timeouts(self, record, choice):
        assert not is_best(choice("x2,x0,x1").chosen, record)
        assert not is_best(choice("x2,x1,x0").chosen, record)

    def test_all_timeout(self, make_problem, xs, choice):
        [record] = parse_labels("test constructed_cells x0,x1,x2=TIMEOUT\n", {"test": xs})
        assert record.metric is Metric.CONSTRUCTED_CELLS
        with pytest.raises(AllTimeout):
            label_example(make_problem(["x0"]), choice("x0,x1,x2"), record)

    def test_normalized_features(self, make_problem, record, choice):
        problem = make_problem(["x0*x1 - x2"])
        params = fit_normalization([extract_features(problem)])
        example = label_example(problem, choice("x0,x1,x2"), record, params)
        assert example.features == pytest.approx((0.0,) * 11)
        assert example.problem_id == "test"


class TestSparseFormat:
    def test_write(self):
        example = LabeledExample("p1", (1.0, 0.5) + (0.0,) * 9, 1)
        line = write_examples([example])
        assert line.startswith("+1 1:1.0 2:0.5 3:0.0 ")
        assert line.endswith(" 11:0.0 # p1\n")

    def test_read_back(self):
        examples = [
            LabeledExample("a", tuple(float(i) / 3 for i in range(11)), -1),
            LabeledExample("b", (0.1,) * 11, 1),
        ]
        assert read_examples(write_examples(examples)) == examples

    def test_omitted_indices_are_zero(self):
        [example] = read_examples("-1 2:4.5 11:1\n")
        assert example.features == (0.0, 4.5) + (0.0,) * 8 + (1.0,)
        assert example.problem_id == "example-1"

    @pytest.mark.parametrize("line", ["0 1:1", "+1 3:1 2:1", "+1 12:1", "+1 1=2", "x 1:1", "+1 1:abc"])
    def test_malformed(self, line):
        with pytest.raises(ParseError):
            read_examples(line + "\n")
