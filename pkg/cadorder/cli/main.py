#!/usr/bin/env python3
"""
Command line for the variable-ordering toolkit.

Usage:
    python -m cadorder.cli parse data/corpus/p01.problem
    python -m cadorder.cli choose --heuristic sotd data/corpus
    python -m cadorder.cli project --ordering x2,x1,x0 data/corpus/p25.smt2
    python -m cadorder.cli qepcad-gen --ordering x2,x1,x0 data/corpus/p25.smt2
    python -m cadorder.cli features --labels data/labels/output_cells.txt --heuristic brown data/corpus
    python -m cadorder.cli split data/corpus
    python -m cadorder.cli train train.txt --gamma 0.5 --C 8 -o brown.model
    python -m cadorder.cli grid-search train.txt validation.txt
    python -m cadorder.cli classify brown.model test.txt
    python -m cadorder.cli evaluate brown.model test.txt
    python -m cadorder.cli --config data/experiment.json report

Exit codes: 0 success, 1 bad input, 2 internal invariant violation,
130 interrupted.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from cadorder.errors import InputError, InvariantViolation, NonConvergence
from cadorder.settings import get_settings

HEURISTIC_NAMES = ("brown", "sotd", "ndrr")


@dataclass
class BatchStats:
    """Statistics for a command run over many problems."""
    total: int = 0
    successful: int = 0
    failed: int = 0
    errors: list[tuple[str, str]] = field(default_factory=list)

    def print_summary(self):
        """Print a summary of the run to stderr."""
        out = sys.stderr
        print("\n" + "=" * 60, file=out)
        print("SUMMARY", file=out)
        print("=" * 60, file=out)
        print(f"Total problems:          {self.total}", file=out)
        print(f"  Successful:            {self.successful}", file=out)
        print(f"  Failed:                {self.failed}", file=out)
        if self.errors:
            print("\nErrors:", file=out)
            for problem_id, error in self.errors:
                print(f"  {problem_id}: {error}", file=out)


# --- helpers ---

def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else get_settings().LOG_LEVEL
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def load_config(args):
    from cadorder.schemas import ExperimentConfig

    if not args.config:
        config = ExperimentConfig()
    else:
        path = Path(args.config)
        try:
            config = ExperimentConfig.model_validate_json(path.read_text(encoding="utf-8"))
        except ValidationError as e:
            raise InputError(f"{path}: invalid experiment config\n{e}")
    if args.seed is not None:
        config = config.model_copy(update={"seed": args.seed})
    return config


def load_problems(paths: list[str]):
    """Problem files and directories, directories expanded in sorted order."""
    from cadorder.ingest import load_corpus, load_problem

    problems = []
    for raw in paths:
        path = Path(raw)
        problems.extend(load_corpus(path) if path.is_dir() else [load_problem(path)])
    return problems


def load_records(paths: list[str], problems):
    from cadorder.ingest import load_labels

    records = []
    for path in paths:
        records.extend(load_labels(path, problems))
    return records


def read_example_file(path: str):
    from cadorder.features.sparse_format import read_examples

    return read_examples(Path(path).read_text(encoding="utf-8"))


def emit(args, text: str, payload) -> None:
    if args.format == "structured":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _ordering_for(problem, text: Optional[str], heuristic: str):
    from cadorder.heuristics import brown_choose, ndrr_choose, sotd_choose
    from cadorder.projection import VariableOrdering

    if text:
        return VariableOrdering.parse(text, problem.variables_by_name())
    choose = {"brown": brown_choose, "sotd": sotd_choose, "ndrr": ndrr_choose}[heuristic]
    return choose(problem).chosen


# --- subcommands ---

def cmd_parse(args) -> int:
    from cadorder.ingest import polynomials_of, render_problem

    problems = load_problems(args.files)
    emit(
        args,
        "\n".join(render_problem(p) for p in problems),
        [
            {
                "id": p.id,
                "variables": [v.display_name for v in p.variables],
                "quantifiers": [[q.value, v.display_name] for q, v in p.quantifier_block],
                "polynomials": sorted(str(q) for q in polynomials_of(p)),
            }
            for p in problems
        ],
    )
    return 0


def cmd_choose(args) -> int:
    from cadorder.heuristics import brown_choose
    from cadorder.pipeline import choose_all

    problems = load_problems(args.files)
    stats = BatchStats(total=len(problems))
    lines, payload = [], []
    for problem in problems:
        try:
            if args.heuristic == "brown":
                choices = {"brown": brown_choose(problem)}
            else:
                every = choose_all(problem, not args.sotd_skip_input, args.ndrr_all_levels)
                choices = {h.value: c for h, c in every.items() if args.heuristic in ("all", h.value)}
        except InputError as e:
            stats.failed += 1
            stats.errors.append((problem.id, str(e)))
            continue
        stats.successful += 1
        for name in HEURISTIC_NAMES:
            if name in choices:
                c = choices[name]
                lines.append(f"{problem.id}: {c.render()}")
                payload.append(
                    {
                        "id": problem.id,
                        "heuristic": name,
                        "chosen": str(c.chosen),
                        "tied": [str(o) for o in c.tied_candidates],
                        "measure": c.measure,
                    }
                )
    emit(args, "\n".join(lines), payload)
    if stats.failed:
        stats.print_summary()
    return 1 if stats.failed else 0


def cmd_project(args) -> int:
    from cadorder.projection import full_projection

    (problem,) = load_problems([args.file])
    ordering = _ordering_for(problem, args.ordering, args.heuristic)
    ps = full_projection(problem, ordering)
    emit(
        args,
        ps.render().rstrip("\n"),
        {
            "id": problem.id,
            "ordering": str(ordering),
            "levels": [sorted(str(p) for p in level) for level in ps.levels],
        },
    )
    return 0


def cmd_qepcad_gen(args) -> int:
    from cadorder.ingest import emit_qepcad_script

    (problem,) = load_problems([args.file])
    ordering = _ordering_for(problem, args.ordering, args.heuristic)
    script = emit_qepcad_script(problem, ordering, quantified=not args.quantifier_free)
    if args.output:
        Path(args.output).write_text(script, encoding="utf-8")
        print(f"Wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(script)
    return 0


def cmd_features(args) -> int:
    from cadorder.features import extract_features, label_example, write_examples
    from cadorder.heuristics import Heuristic
    from cadorder.pipeline import choose_for_record

    problems = load_problems(args.files)
    if not args.labels:
        vectors = [(p.id, extract_features(p)) for p in problems]
        emit(
            args,
            "\n".join(f"{pid} {fv}" for pid, fv in vectors),
            [{"id": pid, "features": [str(v) for v in fv.values]} for pid, fv in vectors],
        )
        return 0

    by_id = {r.problem_id: r for r in load_records([args.labels], problems)}
    heuristic = Heuristic(args.heuristic)
    stats = BatchStats(total=len(problems))
    examples = []
    for problem in problems:
        record = by_id.get(problem.id)
        if record is None:
            stats.failed += 1
            stats.errors.append((problem.id, "no label record"))
            continue
        try:
            choices = choose_for_record(problem, record, not args.sotd_skip_input, args.ndrr_all_levels)
            choice = choices[heuristic]
            examples.append(label_example(problem, choice, record))
        except InputError as e:
            stats.failed += 1
            stats.errors.append((problem.id, str(e)))
            continue
        stats.successful += 1
    text = write_examples(examples)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"Wrote {len(examples)} examples to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    if stats.failed:
        stats.print_summary()
    return 1 if stats.failed else 0


def cmd_split(args) -> int:
    from cadorder.ingest import split_dataset

    config = load_config(args)
    seed = config.seed if config.seed is not None else get_settings().SEED
    problems = load_problems(args.files)
    split = split_dataset([p.id for p in problems], seed, config.fractions)
    parts = {"train": split.train, "validation": split.validation, "test": split.test}
    emit(
        args,
        "\n".join(f"{pid} {name}" for name, ids in parts.items() for pid in ids),
        {"seed": seed, **{name: list(ids) for name, ids in parts.items()}},
    )
    return 0


def cmd_train(args) -> int:
    from cadorder.learner import cost_factor, save_model, train_svm

    examples = read_example_file(args.examples)
    j = args.j if args.j is not None else cost_factor(examples)
    config = load_config(args)
    status = 0
    try:
        model = train_svm(examples, args.gamma, args.C, j, tol=config.kkt_tol, max_passes=config.max_passes)
    except NonConvergence as e:
        print(f"Warning: {e}; writing the last iterate", file=sys.stderr)
        model = e.model
        status = 2
    text = save_model(model)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"Wrote model with {len(model.support_vectors)} support vectors to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return status


def cmd_grid_search(args) -> int:
    from cadorder.learner import grid_search

    config = load_config(args)
    result = grid_search(
        read_example_file(args.train),
        read_example_file(args.validation),
        metric=args.metric or config.metric,
        gamma_exponents=config.gamma_range,
        c_exponents=config.c_range,
        tol=config.kkt_tol,
        max_passes=config.max_passes,
        workers=config.workers,
    )
    gamma, C = result.best
    emit(
        args,
        f"best gamma={gamma!r} C={C!r} {result.metric}={result.best_score:.6f} "
        f"cells={len(result.scores)} nonconverged={len(result.nonconverged)}",
        {
            "best": {"gamma": gamma, "C": C, "score": result.best_score},
            "metric": result.metric,
            "cost_factor": result.cost_factor,
            "scores": [{"gamma": g, "C": c, "score": s} for (g, c), s in result.scores.items()],
            "nonconverged": [{"gamma": g, "C": c} for g, c in result.nonconverged],
        },
    )
    return 0


def cmd_classify(args) -> int:
    from cadorder.learner import decision_value, load_model

    model = load_model(Path(args.model).read_text(encoding="utf-8"))
    examples = read_example_file(args.examples)
    margins = [(e.problem_id, decision_value(model, e.features)) for e in examples]
    emit(
        args,
        "\n".join(f"{pid} {m!r} {'+1' if m > 0 else '-1'}" for pid, m in margins),
        [{"id": pid, "margin": m, "predicted": 1 if m > 0 else -1} for pid, m in margins],
    )
    return 0


def cmd_evaluate(args) -> int:
    from cadorder.learner import ConfusionCounts, f1, load_model, mcc, predict

    model = load_model(Path(args.model).read_text(encoding="utf-8"))
    examples = read_example_file(args.examples)
    if not examples:
        raise InputError(f"{args.examples}: no examples")
    counts = ConfusionCounts.from_labels([e.label for e in examples], predict(model, [e.features for e in examples]))
    emit(
        args,
        f"TP={counts.tp} TN={counts.tn} FP={counts.fp} FN={counts.fn} "
        f"MCC={mcc(counts):.6f} F1={f1(counts):.6f}",
        {"tp": counts.tp, "tn": counts.tn, "fp": counts.fp, "fn": counts.fn, "mcc": mcc(counts), "f1": f1(counts)},
    )
    return 0


def cmd_report(args) -> int:
    from cadorder.pipeline import render_reports, run_experiment

    settings = get_settings()
    config = load_config(args)
    problems = load_problems(args.corpus or [settings.CORPUS_DIR])
    label_files = args.labels or [str(p) for p in sorted(Path(settings.LABELS_DIR).glob("*.txt"))]
    if not label_files:
        raise InputError("no label files given or found")

    reports = []
    for path in label_files:
        records = load_records([path], problems)
        reports.append(run_experiment(problems, records, config=config))
    sys.stdout.write(render_reports(reports, args.format))
    return 0


COMMANDS = {
    "parse": cmd_parse,
    "choose": cmd_choose,
    "project": cmd_project,
    "qepcad-gen": cmd_qepcad_gen,
    "features": cmd_features,
    "split": cmd_split,
    "train": cmd_train,
    "grid-search": cmd_grid_search,
    "classify": cmd_classify,
    "evaluate": cmd_evaluate,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cadorder",
        description="Choose CAD variable orderings with heuristics and learned classifiers.",
    )
    parser.add_argument("--seed", type=int, default=None, help="Split seed (overrides config and CADORDER_SEED)")
    parser.add_argument("--config", default=None, help="Experiment config file (JSON)")
    parser.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="Output format (default: text)",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    parser.add_argument("--check-config", action="store_true", help="Just check configuration and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("parse", help="Parse problem files and print them in native form")
    p.add_argument("files", nargs="+", help="Problem files or directories")

    p = sub.add_parser("choose", help="Print heuristic ordering choices")
    p.add_argument("files", nargs="+", help="Problem files or directories")
    p.add_argument("--heuristic", choices=HEURISTIC_NAMES + ("all",), default="all")
    p.add_argument("--sotd-skip-input", action="store_true", help="Leave the input level out of sotd")
    p.add_argument("--ndrr-all-levels", action="store_true", help="Count roots of univariate polynomials at any level")

    for name, help_text in (("project", "Print the full projection set"), ("qepcad-gen", "Emit a QEPCAD script")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="Problem file")
        p.add_argument("--ordering", default=None, help="Elimination order, e.g. x2,x1,x0")
        p.add_argument(
            "--heuristic",
            choices=HEURISTIC_NAMES,
            default="brown",
            help="Heuristic supplying the ordering when --ordering is absent (default: brown)",
        )
        if name == "qepcad-gen":
            p.add_argument("--quantifier-free", action="store_true", help="Drop the quantifiers")
            p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("features", help="Print feature vectors, or labelled examples with --labels")
    p.add_argument("files", nargs="+", help="Problem files or directories")
    p.add_argument("--labels", default=None, help="Label file")
    p.add_argument("--heuristic", choices=HEURISTIC_NAMES, default="brown")
    p.add_argument("--sotd-skip-input", action="store_true", help="Leave the input level out of sotd")
    p.add_argument("--ndrr-all-levels", action="store_true", help="Count roots of univariate polynomials at any level")
    p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("split", help="Split problems into train/validation/test")
    p.add_argument("files", nargs="+", help="Problem files or directories")

    p = sub.add_parser("train", help="Train an SVM on an example file")
    p.add_argument("examples")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--C", type=float, required=True)
    p.add_argument("--j", type=float, default=None, help="Cost factor (default: negatives/positives)")
    p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("grid-search", help="Search (gamma, C) on a validation set")
    p.add_argument("train")
    p.add_argument("validation")
    p.add_argument("--metric", choices=("mcc", "f1"), default=None)

    for name, help_text in (("classify", "Print margins for an example file"), ("evaluate", "Score a model")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("model")
        p.add_argument("examples")

    p = sub.add_parser("report", help="Run the experiment and print the result tables")
    p.add_argument("--corpus", nargs="+", default=None, help="Problem files or directories (default: bundled corpus)")
    p.add_argument("--labels", nargs="+", default=None, help="Label files, one experiment each")
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    """Parse argv, dispatch, and map errors to exit codes."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    if args.check_config:
        problems = get_settings().validate()
        if problems:
            print("Configuration errors:")
            for key in problems:
                print(f"  Invalid: {key}")
            return 1
        print("Configuration OK!")
        return 0
    if not args.command:
        parser.print_help()
        return 1

    try:
        return COMMANDS[args.command](args)
    except InvariantViolation as e:
        print(f"Internal error: {e}", file=sys.stderr)
        return 2
    except (InputError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


def main():
    """Main entry point for the CLI."""
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        print("\n\nInterrupted by user.")
        sys.exit(130)


if __name__ == "__main__":
    main()
