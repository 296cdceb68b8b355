"""
End-to-end experiment harness.

For one label metric:
1. Evaluate each problem: heuristic choices, raw features, success flags
2. Quarantine problems that cannot be evaluated or lack three variables
3. Split the rest into train/validation/test
4. Normalize features on train
5. Grid-search and train one classifier per heuristic
6. Select a heuristic per test problem and tabulate the cases
"""

from __future__ import annotations

import logging
import multiprocessing
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from cadorder.errors import CadOrderError, InputError, NonConvergence
from cadorder.features.extract import FeatureVector, extract_features
from cadorder.features.labelling import LabeledExample
from cadorder.features.normalize import NormalizationParams, apply_normalization, fit_normalization
from cadorder.heuristics.brown import brown_choose
from cadorder.heuristics.choice import Heuristic, HeuristicChoice
from cadorder.heuristics.measures import ndrr_choose, projections_for, sotd_choose
from cadorder.ingest.labels import CellCountRecord, Metric
from cadorder.ingest.problem import ProblemInstance, select_by_arity, strip_quantifiers
from cadorder.ingest.split import DatasetSplit, split_dataset
from cadorder.learner.grid import GridSearchResult, grid_search
from cadorder.learner.kernel import KernelParams
from cadorder.learner.smo import SvmModel, cost_factor, decision_value, train_svm
from cadorder.pipeline.cases import (
    CASE_TABLE,
    CaseBreakdown,
    best_single_heuristic,
    case_of,
    conditional_success,
    heuristic_totals,
    random_baseline,
)
from cadorder.pipeline.selection import PRECEDENCE, SelectionResult, best_orderings
from cadorder.schemas import (
    CaseRow,
    ClassifierSummary,
    ConditionalRowOut,
    ExperimentConfig,
    ExperimentReport,
    QuarantinedProblem,
    SelectionOut,
    SplitSizes,
)
from cadorder.settings import get_settings

logger = logging.getLogger(__name__)


@dataclass
class ProblemOutcome:
    """Result of evaluating a single problem."""
    problem_id: str
    success: bool
    choices: dict[Heuristic, HeuristicChoice] = field(default_factory=dict)
    heuristic_success: dict[Heuristic, bool] = field(default_factory=dict)
    features: Optional[FeatureVector] = None
    error: Optional[str] = None


def choose_all(
    problem: ProblemInstance,
    sotd_include_input: bool = True,
    ndrr_all_levels: bool = False,
) -> dict[Heuristic, HeuristicChoice]:
    """Run the three heuristics, sharing one set of projections."""
    projections = projections_for(problem)
    return {
        Heuristic.BROWN: brown_choose(problem),
        Heuristic.SOTD: sotd_choose(problem, include_input=sotd_include_input, projections=projections),
        Heuristic.NDRR: ndrr_choose(problem, all_levels=ndrr_all_levels, projections=projections),
    }


def choose_for_record(
    problem: ProblemInstance,
    record: CellCountRecord,
    sotd_include_input: bool = True,
    ndrr_all_levels: bool = False,
) -> dict[Heuristic, HeuristicChoice]:
    """
    Heuristic choices for the run a record describes.

    output_cells counts come from quantifier-free runs, so the heuristics see
    the quantifier-free twin; constructed_cells counts use the problem as given.
    """
    target = strip_quantifiers(problem) if record.metric is Metric.OUTPUT_CELLS else problem
    return choose_all(target, sotd_include_input, ndrr_all_levels)


def evaluate_problem(
    problem: ProblemInstance,
    record: Optional[CellCountRecord],
    sotd_include_input: bool = True,
    ndrr_all_levels: bool = False,
) -> ProblemOutcome:
    """
    Heuristic choices, features and per-heuristic success for one problem.

    Never raises for a bad problem: the error is carried on the outcome.
    """
    outcome = ProblemOutcome(problem_id=problem.id, success=False)
    if record is None:
        outcome.error = "no label record"
        return outcome
    try:
        best = best_orderings(record)
        outcome.choices = choose_for_record(problem, record, sotd_include_input, ndrr_all_levels)
        outcome.heuristic_success = {h: c.chosen in best for h, c in outcome.choices.items()}
        if not any(outcome.heuristic_success.values()):
            outcome.error = "NoWinner: no heuristic reached the minimal cell count"
            return outcome
        outcome.features = extract_features(problem)
        outcome.success = True
    except CadOrderError as e:
        outcome.error = f"{type(e).__name__}: {e}"
    return outcome


def _evaluate_task(task) -> ProblemOutcome:
    return evaluate_problem(*task)


def evaluate_problems(
    problems: Sequence[ProblemInstance],
    records: Mapping[str, CellCountRecord],
    config: ExperimentConfig,
) -> list[ProblemOutcome]:
    tasks = [(p, records.get(p.id), config.sotd_include_input, config.ndrr_all_levels) for p in problems]
    if config.workers > 1:
        with multiprocessing.Pool(config.workers) as pool:
            return pool.map(_evaluate_task, tasks)
    return [_evaluate_task(t) for t in tasks]


@dataclass
class TrainedClassifier:
    heuristic: Heuristic
    model: SvmModel
    summary: ClassifierSummary


def _examples(
    ids: Sequence[str],
    outcomes: Mapping[str, ProblemOutcome],
    heuristic: Heuristic,
    params: NormalizationParams,
) -> list[LabeledExample]:
    return [
        LabeledExample(
            problem_id=pid,
            features=apply_normalization(params, outcomes[pid].features),
            label=1 if outcomes[pid].heuristic_success[heuristic] else -1,
        )
        for pid in ids
    ]


def train_classifier(
    heuristic: Heuristic,
    train: Sequence[LabeledExample],
    validation: Sequence[LabeledExample],
    config: ExperimentConfig,
    warnings: list[str],
) -> TrainedClassifier:
    """
    Grid-search (gamma, C) on validation, then train on train.

    A training set with a single label yields a constant classifier; a final
    model that hits the pass cap is kept and reported.
    """
    labels = {e.label for e in train}
    if len(labels) == 1:
        label = labels.pop()
        warnings.append(f"{heuristic.value}: training labels are all {label:+d}; using a constant classifier")
        logger.warning(warnings[-1])
        model = SvmModel((), (), float(label), KernelParams(1.0))
        return TrainedClassifier(heuristic, model, ClassifierSummary(heuristic=heuristic.value, constant_label=label))

    search: GridSearchResult = grid_search(
        train,
        validation,
        metric=config.metric,
        gamma_exponents=config.gamma_range,
        c_exponents=config.c_range,
        tol=config.kkt_tol,
        max_passes=config.max_passes,
        workers=config.workers,
    )
    gamma, C = search.best
    j = cost_factor(train)
    converged = True
    try:
        model = train_svm(train, gamma, C, j, tol=config.kkt_tol, max_passes=config.max_passes)
    except NonConvergence as e:
        converged = False
        model = e.model
        warnings.append(f"{heuristic.value}: {e}")
        logger.warning(warnings[-1])
    if search.nonconverged:
        warnings.append(f"{heuristic.value}: {len(search.nonconverged)} grid cells hit the pass cap")

    summary = ClassifierSummary(
        heuristic=heuristic.value,
        gamma=gamma,
        C=C,
        cost_factor=j,
        validation_score=search.best_score,
        support_vectors=len(model.support_vectors),
        converged=converged,
        nonconverged_cells=len(search.nonconverged),
    )
    return TrainedClassifier(heuristic, model, summary)


def run_experiment(
    problems: Sequence[ProblemInstance],
    records: Sequence[CellCountRecord],
    seed: Optional[int] = None,
    config: Optional[ExperimentConfig] = None,
) -> ExperimentReport:
    """
    Run the whole experiment for one label metric.

    Args:
        problems: Problem instances; each needs a label record to be used.
        records: Cell-count records, all for the same metric.
        seed: Split seed; overrides config.seed, which overrides settings.
        config: Experiment configuration (defaults when None).

    Returns:
        ExperimentReport with the case breakdown, tables and quarantine list.

    Raises:
        InputError: records mix metrics, or too few usable problems.
    """
    config = config or ExperimentConfig()
    if seed is None:
        seed = config.seed if config.seed is not None else get_settings().SEED

    metrics = {r.metric for r in records}
    if len(metrics) > 1:
        raise InputError(f"label records mix metrics: {sorted(m.value for m in metrics)}")
    metric = metrics.pop().value if metrics else Metric.OUTPUT_CELLS.value
    by_id = {r.problem_id: r for r in records}

    kept, rejected = select_by_arity(problems, 3)
    wrong_arity = set(rejected)
    outcomes = {o.problem_id: o for o in evaluate_problems(kept, by_id, config)}
    quarantined = []
    for problem in problems:
        if problem.id in wrong_arity:
            error = f"WrongArity: {len(problem.variables)} variables, need 3"
            quarantined.append(QuarantinedProblem(problem_id=problem.id, error=error))
        elif not outcomes[problem.id].success:
            quarantined.append(QuarantinedProblem(problem_id=problem.id, error=outcomes[problem.id].error))
    for q in quarantined:
        logger.warning("quarantined %s: %s", q.problem_id, q.error)
    usable = {pid: o for pid, o in outcomes.items() if o.success}
    if len(usable) < 3:
        raise InputError(f"only {len(usable)} usable problems; need at least one per split part")

    split: DatasetSplit = split_dataset(list(usable), seed, config.fractions)
    params = fit_normalization([usable[pid].features for pid in split.train])

    warnings: list[str] = []
    classifiers = {}
    for h in PRECEDENCE:
        train = _examples(split.train, usable, h, params)
        validation = _examples(split.validation, usable, h, params)
        classifiers[h] = train_classifier(h, train, validation, config, warnings)
        logger.info("trained %s classifier: %s", h.value, classifiers[h].summary)

    selections = []
    for pid in sorted(split.test):
        fv = apply_normalization(params, usable[pid].features)
        margins = {h: decision_value(classifiers[h].model, fv) for h in PRECEDENCE}
        selections.append(SelectionResult.from_margins(pid, margins, usable[pid].heuristic_success))

    breakdown = CaseBreakdown.from_results(selections)
    report = ExperimentReport(
        label_metric=metric,
        seed=seed,
        config=config,
        problems=len(problems),
        split=SplitSizes(train=len(split.train), validation=len(split.validation), test=len(split.test)),
        classifiers=[classifiers[h].summary for h in PRECEDENCE],
        quarantined=quarantined,
        warnings=warnings,
    )
    fill_tables(report, breakdown)
    report.selections = [
        SelectionOut(
            problem_id=s.problem_id,
            margins={h.value: s.margins[h] for h in PRECEDENCE},
            selected=s.selected.value,
            success={h.value: s.per_heuristic_success[h] for h in PRECEDENCE},
            ml_success=s.ml_success,
            case=case_of(s),
        )
        for s in selections
    ]
    return report


def fill_tables(report: ExperimentReport, breakdown: CaseBreakdown) -> None:
    """Case rows, conditional proportions, totals and baselines from a breakdown."""
    report.cases = [
        CaseRow(case=case, ml=ml, sotd=sotd, ndrr=ndrr, brown=brown, count=breakdown.count(case))
        for case, (ml, sotd, ndrr, brown) in CASE_TABLE.items()
    ]
    report.conditional = [
        ConditionalRowOut(
            sotd=row.sotd,
            ndrr=row.ndrr,
            brown=row.brown,
            ml_yes=row.ml_yes,
            ml_no=row.ml_no,
            proportion=row.proportion,
            comparator=float(row.comparator),
        )
        for row in conditional_success(breakdown)
    ]
    report.totals = heuristic_totals(breakdown)
    report.test_size = breakdown.total
    if breakdown.total:
        report.ml_rate = report.totals["ml"] / breakdown.total
        report.random_baseline = random_baseline(breakdown, breakdown.total)
        best, rate = best_single_heuristic(breakdown)
        report.best_single = best.value
        report.best_single_rate = rate
