# Experiment harness: selection, case tables and reports
from cadorder.pipeline.selection import PRECEDENCE, SelectionResult, best_orderings, select_heuristic
from cadorder.pipeline.cases import (
    CASE_TABLE,
    CaseBreakdown,
    ConditionalRow,
    case_of,
    random_baseline,
    conditional_success,
    heuristic_totals,
    best_single_heuristic,
)
from cadorder.pipeline.experiment import (
    ProblemOutcome,
    choose_all,
    choose_for_record,
    evaluate_problem,
    run_experiment,
)
from cadorder.pipeline.report import render_text, render_structured, render_reports

__all__ = [
    "PRECEDENCE",
    "SelectionResult",
    "best_orderings",
    "select_heuristic",
    "CASE_TABLE",
    "CaseBreakdown",
    "ConditionalRow",
    "case_of",
    "random_baseline",
    "conditional_success",
    "heuristic_totals",
    "best_single_heuristic",
    "ProblemOutcome",
    "choose_all",
    "choose_for_record",
    "evaluate_problem",
    "run_experiment",
    "render_text",
    "render_structured",
    "render_reports",
]
