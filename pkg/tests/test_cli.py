import json

import pytest

from cadorder.cli.main import run
from cadorder.features import read_examples
from cadorder.heuristics import Heuristic
from cadorder.ingest import load_labels, load_problem
from cadorder.pipeline import evaluate_problem

from conftest import CORPUS_DIR, LABELS_DIR

SPHERE = str(CORPUS_DIR / "p25.smt2")

SMALL_CONFIG = {
    "seed": 7,
    "fractions": [0.5, 0.25, 0.25],
    "gamma_exponents": [-1, 0],
    "c_exponents": [0, 1],
    "max_passes": 2000,
}


@pytest.fixture
def config_file(tmp_path):
    def write(**overrides):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({**SMALL_CONFIG, **overrides}), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def example_files(tmp_path):
    """Brown-labelled examples for the whole corpus, split in two files."""
    path = tmp_path / "all.txt"
    assert run(["features", "--labels", str(LABELS_DIR / "output_cells.txt"), "-o", str(path), str(CORPUS_DIR)]) == 0
    lines = path.read_text(encoding="utf-8").splitlines()
    train, validation = tmp_path / "train.txt", tmp_path / "validation.txt"
    train.write_text("\n".join(lines[::2]) + "\n", encoding="utf-8")
    validation.write_text("\n".join(lines[1::2]) + "\n", encoding="utf-8")
    return str(train), str(validation)


class TestProblemCommands:
    def test_parse(self, capsys):
        assert run(["parse", SPHERE]) == 0
        out = capsys.readouterr().out
        assert "id: p25" in out
        assert "formula: (= x0^2 + x1^2 + x2^2 - 1)" in out

    def test_parse_structured(self, capsys):
        assert run(["--format", "structured", "parse", SPHERE]) == 0
        [entry] = json.loads(capsys.readouterr().out)
        assert entry["polynomials"] == ["x0^2 + x1^2 + x2^2 - 1"]

    def test_choose(self, capsys):
        assert run(["choose", "--heuristic", "sotd", SPHERE]) == 0
        out = capsys.readouterr().out.strip()
        assert out.startswith("p25: sotd chosen=x0,x1,x2 tied=")
        assert out.endswith("measure=12")

    def test_choose_all(self, capsys):
        assert run(["choose", str(CORPUS_DIR / "p01.problem")]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert [line.split()[1] for line in lines] == ["brown", "sotd", "ndrr"]
        assert "chosen=x0,x1,x2" in lines[0]

    def test_project(self, capsys):
        assert run(["project", "--ordering", "x2,x1,x0", SPHERE]) == 0
        assert capsys.readouterr().out.startswith("S_3 (x2,x1,x0):\n  x0^2 + x1^2 + x2^2 - 1\n")

    def test_qepcad_gen(self, capsys, golden):
        assert run(["qepcad-gen", "--ordering", "x2,x1,x0", SPHERE]) == 0
        assert capsys.readouterr().out == golden("sphere_quantified.txt")

    def test_qepcad_gen_quantifier_free(self, tmp_path, golden):
        out = tmp_path / "script.txt"
        assert run(["qepcad-gen", "--ordering", "x2,x1,x0", "--quantifier-free", "-o", str(out), SPHERE]) == 0
        assert out.read_text(encoding="utf-8") == golden("sphere_quantifier_free.txt")

    def test_split(self, capsys):
        assert run(["--seed", "3", "--format", "structured", "split", str(CORPUS_DIR)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["seed"] == 3
        assert len(payload["train"]) + len(payload["validation"]) + len(payload["test"]) == 30

    def test_features_without_labels(self, capsys):
        assert run(["features", SPHERE]) == 0
        assert capsys.readouterr().out.strip() == "p25 [1, 2, 2, 2, 2, 1, 1, 1, 1/4, 1/4, 1/4]"


class TestLearningCommands:
    def test_features_with_labels(self, example_files):
        train, validation = example_files
        with open(train, encoding="utf-8") as fh:
            examples = read_examples(fh.read())
        assert len(examples) == 15
        assert {e.label for e in examples} <= {1, -1}

    def test_train_classify_evaluate(self, tmp_path, capsys, example_files):
        train, validation = example_files
        model = tmp_path / "brown.model"
        assert run(["train", train, "--gamma", "0.5", "--C", "8", "-o", str(model)]) == 0
        assert model.read_text(encoding="utf-8").startswith("cadorder-svm 1\n")
        capsys.readouterr()

        assert run(["classify", str(model), validation]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 15
        assert all(line.split()[2] in ("+1", "-1") for line in lines)

        assert run(["--format", "structured", "evaluate", str(model), validation]) == 0
        scores = json.loads(capsys.readouterr().out)
        assert scores["tp"] + scores["tn"] + scores["fp"] + scores["fn"] == 15
        assert -1 <= scores["mcc"] <= 1

    def test_grid_search(self, capsys, config_file, example_files):
        train, validation = example_files
        assert run(["--config", config_file(), "grid-search", "--metric", "f1", train, validation]) == 0
        out = capsys.readouterr().out
        assert out.startswith("best gamma=")
        assert "f1=" in out and "cells=4" in out

    def test_non_convergence_exits_2(self, tmp_path, config_file, example_files):
        train, _ = example_files
        model = tmp_path / "partial.model"
        config = config_file(max_passes=1, kkt_tol=1e-12)
        assert run(["--config", config, "train", train, "--gamma", "1", "--C", "100", "-o", str(model)]) == 2
        assert model.exists()

    def test_report(self, capsys, config_file):
        argv = ["--config", config_file(), "report", "--labels", str(LABELS_DIR / "output_cells.txt")]
        assert run(argv) == 0
        out = capsys.readouterr().out
        assert "Experiment: quantifier free (output_cells), seed 7" in out
        assert "Best single heuristic:" in out


class TestLabellingMatchesExperiment:
    QUANTIFIED = (
        "id: q1\nvars: x0, x1, x2\nquantifiers: E x2\n"
        "formula: (and (= x2^3 + x0 + x1^2) (= x1^2 - x0))\n"
    )
    COUNTS = "x0,x1,x2=5;x0,x2,x1=11;x1,x0,x2=12;x1,x2,x0=13;x2,x0,x1=9;x2,x1,x0=14"

    @pytest.mark.parametrize("metric, label", [("output_cells", "+1"), ("constructed_cells", "-1")])
    def test_brown_label(self, tmp_path, capsys, metric, label):
        problem_file = tmp_path / "q1.problem"
        problem_file.write_text(self.QUANTIFIED, encoding="utf-8")
        labels = tmp_path / "labels.txt"
        labels.write_text(f"q1 {metric} {self.COUNTS}\n", encoding="utf-8")

        assert run(["features", "--labels", str(labels), str(problem_file)]) == 0
        [line] = capsys.readouterr().out.splitlines()
        assert line.split()[0] == label

        problem = load_problem(problem_file)
        [record] = load_labels(labels, [problem])
        success = evaluate_problem(problem, record).heuristic_success[Heuristic.BROWN]
        assert success is (label == "+1")

    def test_measure_switches_are_accepted(self, capsys):
        argv = ["features", "--heuristic", "ndrr", "--ndrr-all-levels", "--sotd-skip-input"]
        argv += ["--labels", str(LABELS_DIR / "output_cells.txt"), str(CORPUS_DIR / "p01.problem")]
        assert run(argv) == 0
        assert capsys.readouterr().out.rstrip().endswith("# p01")


class TestExitCodes:
    def test_missing_file(self, tmp_path):
        assert run(["parse", str(tmp_path / "absent.smt2")]) == 1

    def test_unknown_ordering(self):
        assert run(["project", "--ordering", "x0,x9,x2", SPHERE]) == 1

    def test_bad_config(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"metric": "accuracy"}', encoding="utf-8")
        assert run(["--config", str(path), "split", str(CORPUS_DIR)]) == 1

    def test_no_command(self, capsys):
        assert run([]) == 1

    def test_parse_error(self, tmp_path, capsys):
        path = tmp_path / "broken.smt2"
        path.write_text("(declare-fun x () Real)\n(assert (> x y))\n", encoding="utf-8")
        assert run(["parse", str(path)]) == 1
        assert "line 2" in capsys.readouterr().err

    def test_check_config(self, capsys):
        assert run(["--check-config"]) == 0
        assert "Configuration OK!" in capsys.readouterr().out
