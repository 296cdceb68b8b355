import math
import random
from itertools import product

import numpy as np
import pytest

from cadorder.errors import (
    DimensionMismatch,
    EmptySet,
    InputError,
    NoPositives,
    NonConvergence,
    ParseError,
    SingleClass,
)
from cadorder.features import LabeledExample
from cadorder.learner import (
    ConfusionCounts,
    KernelParams,
    SvmModel,
    cost_factor,
    decision_value,
    dual_objective,
    f1,
    gram_matrix,
    grid_search,
    kkt_violations,
    load_model,
    mcc,
    predict,
    rbf_kernel,
    save_model,
    solve_svm,
    train_svm,
)
from cadorder.learner.grid import best_cell
from cadorder.learner.kernel import as_matrix


def examples(points, labels):
    return [LabeledExample(f"e{i}", tuple(map(float, p)), y) for i, (p, y) in enumerate(zip(points, labels))]


TWO_POINTS = examples([[1], [-1]], [1, -1])
XOR = examples([[1, 1], [-1, -1], [1, -1], [-1, 1]], [1, 1, -1, -1])


def separable(rng, n):
    points, labels = [], []
    for i in range(n):
        y = 1 if i % 2 == 0 else -1
        points.append([y * 1.5 + rng.uniform(-1, 1), rng.uniform(-1, 1)])
        labels.append(y)
    return examples(points, labels)


def brute_force_dual(K, y, upper):
    """Exact optimum by trying every split of the multipliers into zero, upper-bounded and free."""
    n = len(y)
    Q = np.outer(y, y) * K
    best = math.inf
    for status in product((0, 1, 2), repeat=n):
        alpha = np.array([0.0 if s == 0 else upper[i] for i, s in enumerate(status)])
        free = [i for i, s in enumerate(status) if s == 2]
        bound = [i for i, s in enumerate(status) if s != 2]
        if free:
            A = np.zeros((len(free) + 1, len(free) + 1))
            A[:-1, :-1] = Q[np.ix_(free, free)]
            A[:-1, -1] = y[free]
            A[-1, :-1] = y[free]
            rhs = np.concatenate([1.0 - Q[np.ix_(free, bound)] @ alpha[bound], [-y[bound] @ alpha[bound]]])
            try:
                solution = np.linalg.solve(A, rhs)
            except np.linalg.LinAlgError:
                continue
            alpha[free] = solution[:-1]
        if np.any(alpha < -1e-9) or np.any(alpha > upper + 1e-9) or abs(y @ alpha) > 1e-9:
            continue
        best = min(best, 0.5 * alpha @ Q @ alpha - alpha.sum())
    return best


class TestKernel:
    def test_identity(self):
        assert rbf_kernel([0.3, -2.0], [0.3, -2.0], 5.0) == 1.0

    def test_half(self):
        assert rbf_kernel([0.0], [1.0], math.log(2)) == pytest.approx(0.5)

    def test_symmetry(self):
        rng = random.Random(1)
        for _ in range(100):
            a = [rng.uniform(-3, 3) for _ in range(11)]
            b = [rng.uniform(-3, 3) for _ in range(11)]
            assert rbf_kernel(a, b, 0.25) == rbf_kernel(b, a, 0.25)

    def test_gram_matrix(self):
        X = np.random.default_rng(0).normal(size=(20, 11))
        K = gram_matrix(X, 0.5)
        assert np.array_equal(K, K.T)
        assert np.all(np.diag(K) == 1.0)
        assert np.all((K > 0) & (K <= 1))

    def test_errors(self):
        with pytest.raises(DimensionMismatch):
            rbf_kernel([1.0], [1.0, 2.0], 1.0)
        with pytest.raises(InputError):
            rbf_kernel([1.0], [1.0], 0.0)
        with pytest.raises(InputError):
            KernelParams(-1.0)
        with pytest.raises(DimensionMismatch):
            as_matrix([[1.0], [1.0, 2.0]])


class TestMetrics:
    def test_mcc_endpoints(self):
        assert mcc(ConfusionCounts(tp=5, tn=5, fp=0, fn=0)) == 1
        assert mcc(ConfusionCounts(tp=0, tn=0, fp=5, fn=5)) == -1
        assert mcc(ConfusionCounts(tp=1, tn=0, fp=0, fn=0)) == 0

    def test_f1(self):
        assert f1(ConfusionCounts(tp=5, tn=0, fp=0, fn=0)) == 1
        assert f1(ConfusionCounts(tp=0, tn=0, fp=3, fn=0)) == 0
        assert f1(ConfusionCounts(tp=2, tn=0, fp=1, fn=1)) == pytest.approx(2 / 3)
        assert f1(ConfusionCounts(0, 7, 0, 0)) == 0

    def test_ranges(self):
        rng = random.Random(2)
        for _ in range(10_000):
            counts = ConfusionCounts(*(rng.randint(0, 50) for _ in range(4)))
            assert -1 <= mcc(counts) <= 1
            assert 0 <= f1(counts) <= 1

    def test_from_labels(self):
        counts = ConfusionCounts.from_labels([1, 1, -1, -1, 1], [1, -1, -1, 1, 1])
        assert counts == ConfusionCounts(tp=2, tn=1, fp=1, fn=1)
        assert counts.total == 5


class TestCostFactor:
    def test_ratios(self):
        assert cost_factor(examples([[0]] * 15, [1] * 5 + [-1] * 10)) == 2.0
        assert cost_factor(TWO_POINTS) == 1.0
        assert cost_factor(examples([[0]] * 5, [1] * 5)) == 0.0

    def test_no_positives(self):
        with pytest.raises(NoPositives):
            cost_factor(examples([[0]] * 3, [-1] * 3))


class TestTraining:
    def test_two_points_are_antisymmetric(self):
        fit = solve_svm(TWO_POINTS, gamma=1.0, C=100.0)
        assert fit.converged and kkt_violations(fit, 1e-3) == []
        optimum = brute_force_dual(fit.gram, fit.labels, fit.upper)
        assert dual_objective(fit.alpha, fit.labels, fit.gram) == pytest.approx(optimum, abs=1e-4)
        model = fit.model
        plus, minus = decision_value(model, [1.0]), decision_value(model, [-1.0])
        assert plus > 0 > minus
        assert abs(plus + minus) < 1e-9
        assert abs(decision_value(model, [0.0])) < 1e-9
        assert abs(plus) >= 1 - 1e-3

    def test_xor(self):
        fit = solve_svm(XOR, gamma=1.0, C=100.0, tol=1e-6)
        assert fit.converged and kkt_violations(fit, 1e-3) == []
        optimum = brute_force_dual(fit.gram, fit.labels, fit.upper)
        assert dual_objective(fit.alpha, fit.labels, fit.gram) == pytest.approx(optimum, abs=1e-4)
        predicted = predict(fit.model, [e.features for e in XOR])
        assert list(predicted) == [e.label for e in XOR]

    def test_certificates(self):
        rng = random.Random(3)
        for trial in range(10):
            data = separable(rng, 10) if trial % 2 else examples(
                [[rng.uniform(-2, 2), rng.uniform(-2, 2)] for _ in range(10)], [1, -1] * 5
            )
            fit = solve_svm(data, gamma=0.5, C=4.0, j=cost_factor(data), tol=1e-4)
            assert fit.converged
            assert kkt_violations(fit, 1e-3) == []
            assert np.all(fit.alpha >= 0) and np.all(fit.alpha <= fit.upper + 1e-12)
            assert abs(fit.alpha @ fit.labels) < 1e-3
            assert len(fit.model.support_vectors) == int(np.sum(fit.alpha > 0))

    def test_positive_box_is_scaled(self):
        data = examples([[0.0], [0.1], [0.2], [1.0]], [1, -1, 1, -1])
        fit = solve_svm(data, gamma=1.0, C=0.5, j=3.0)
        assert list(fit.upper) == [1.5, 0.5, 1.5, 0.5]

    def test_matches_brute_force_dual(self):
        rng = random.Random(4)
        for _ in range(20):
            n = rng.randint(3, 6)
            labels = [1, -1] + [rng.choice([1, -1]) for _ in range(n - 2)]
            data = examples([[rng.uniform(-2, 2), rng.uniform(-2, 2)] for _ in range(n)], labels)
            gamma, C = rng.choice([0.5, 1.0, 2.0]), rng.choice([0.5, 1.0, 10.0])
            fit = solve_svm(data, gamma=gamma, C=C, j=cost_factor(data), tol=1e-6)
            optimum = brute_force_dual(fit.gram, fit.labels, fit.upper)
            assert dual_objective(fit.alpha, fit.labels, fit.gram) == pytest.approx(optimum, abs=1e-4)

    def test_larger_C_fits_training_data_at_least_as_well(self):
        data = separable(random.Random(5), 16)
        X = [e.features for e in data]
        y = np.array([e.label for e in data])
        errors = {}
        for C in (2.0 ** -5, 2.0 ** 15):
            errors[C] = int(np.sum(predict(train_svm(data, 1.0, C), X) != y))
        assert errors[2.0 ** 15] <= errors[2.0 ** -5]

    def test_non_convergence_keeps_last_iterate(self):
        with pytest.raises(NonConvergence) as exc:
            train_svm(separable(random.Random(6), 12), gamma=1.0, C=100.0, tol=1e-12, max_passes=1)
        assert exc.value.iterations == 1
        assert isinstance(exc.value.model, SvmModel)

    def test_single_class(self):
        with pytest.raises(SingleClass):
            train_svm(examples([[0], [1]], [1, 1]), 1.0, 1.0)
        with pytest.raises(SingleClass):
            train_svm(examples([[0]], [1]), 1.0, 1.0)

    def test_bad_parameters(self):
        with pytest.raises(InputError):
            train_svm(TWO_POINTS, gamma=1.0, C=0.0)

    def test_dimension_mismatch(self):
        model = train_svm(TWO_POINTS, gamma=1.0, C=1.0)
        with pytest.raises(DimensionMismatch):
            decision_value(model, [1.0, 2.0])

    def test_constant_model(self):
        model = SvmModel((), (), -1.0, KernelParams(1.0))
        assert decision_value(model, [3.0] * 11) == -1.0
        assert list(predict(model, [[0.0] * 11, [1.0] * 11])) == [-1, -1]


class TestGridSearch:
    @pytest.fixture(scope="class")
    def data(self):
        rng = random.Random(7)
        return separable(rng, 12), separable(rng, 8)

    @pytest.fixture(scope="class")
    def full_grid(self, data):
        train, validation = data
        return grid_search(train, validation, max_passes=500)

    def test_every_cell_scored(self, full_grid):
        assert len(full_grid.scores) == 399
        gammas = sorted({g for g, _ in full_grid.scores})
        costs = sorted({c for _, c in full_grid.scores})
        assert gammas[0] == 2.0 ** -15 and gammas[-1] == 2.0 ** 3 and len(gammas) == 19
        assert costs[0] == 2.0 ** -5 and costs[-1] == 2.0 ** 15 and len(costs) == 21

    def test_best_attains_the_maximum(self, full_grid):
        assert full_grid.best_score == max(full_grid.scores.values())
        assert full_grid.metric == "mcc"
        assert full_grid.cost_factor == 1.0

    def test_scores_match_recomputation(self, data, full_grid):
        train, validation = data
        X = [e.features for e in validation]
        truth = [e.label for e in validation]
        for gamma, C in sorted(full_grid.scores):
            fit = solve_svm(train, gamma, C, j=1.0, max_passes=500)
            counts = ConfusionCounts.from_labels(truth, predict(fit.model, X))
            assert mcc(counts) == pytest.approx(full_grid.scores[(gamma, C)])

    def test_only_unit_gamma_separates_validation(self):
        # hard-margin boundary sits near 1.05, 0.94 and 0.80 for gamma 1/2, 1 and 2
        train = examples([[0.0], [2.0], [-2.0]], [1, -1, -1])
        validation = examples([[0.9], [-0.9], [1.0], [-1.0]], [1, 1, -1, -1])
        result = grid_search(train, validation, gamma_exponents=range(-3, 4), c_exponents=range(5, 16))
        assert result.best[0] == 1.0
        assert result.best_score == 1.0
        assert all(score < 1.0 for (gamma, _), score in result.scores.items() if gamma != 1.0)
        assert all(score == 1.0 for (gamma, _), score in result.scores.items() if gamma == 1.0)

    def test_parallel_rows_match_serial(self, data):
        train, validation = data
        kwargs = dict(gamma_exponents=range(-3, 2), c_exponents=range(-1, 3), max_passes=500)
        assert grid_search(train, validation, workers=2, **kwargs) == grid_search(train, validation, **kwargs)

    def test_deterministic(self, data):
        train, validation = data
        first = grid_search(train, validation, metric="f1", gamma_exponents=(-1, 0, 1), c_exponents=(0, 2))
        second = grid_search(train, validation, metric="f1", gamma_exponents=(-1, 0, 1), c_exponents=(0, 2))
        assert first == second
        assert len(first.scores) == 6

    def test_tie_break(self):
        scores = {(1.0, 2.0): 0.5, (0.5, 4.0): 0.5, (2.0, 1.0): 0.5, (4.0, 1.0): 0.2, (0.25, 1.0): 0.5}
        assert best_cell(scores) == (0.25, 1.0)

    def test_errors(self, data):
        train, validation = data
        with pytest.raises(InputError):
            grid_search(train, validation, metric="accuracy")
        with pytest.raises(EmptySet):
            grid_search(train, [])
        with pytest.raises(SingleClass):
            grid_search([e for e in train if e.label == 1], validation)


class TestModelFiles:
    def test_save_and_load(self):
        model = train_svm(XOR, gamma=1.0, C=100.0)
        text = save_model(model)
        assert text.startswith("cadorder-svm 1\nkernel rbf\ngamma 1.0\n")
        loaded = load_model(text)
        assert loaded == model

    def test_constant_model(self):
        model = SvmModel((), (), 1.0, KernelParams(0.5))
        assert load_model(save_model(model)) == model

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "cadorder-svm 2\n",
            "other 1\n",
            "cadorder-svm 1\nkernel linear\n",
            "cadorder-svm 1\nkernel rbf\ngamma x\n",
            "cadorder-svm 1\nkernel rbf\ngamma 1.0\nbias 0.0\ndimensions 1\nsupport_vectors 2\n1.0 1:0.5\n",
            "cadorder-svm 1\nkernel rbf\ngamma 1.0\nbias 0.0\ndimensions 1\nsupport_vectors 1\nabc 1:0.5\n",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            load_model(text)
