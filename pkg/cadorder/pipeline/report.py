"""Text and structured renderings of experiment reports."""

from __future__ import annotations

import json
import math
from typing import Sequence

from cadorder.schemas import ExperimentReport

EXPERIMENT_NAMES = {
    "output_cells": "quantifier free",
    "constructed_cells": "quantified",
}


def _yn(flag: bool) -> str:
    return "Y" if flag else "N"


def _percent(value) -> str:
    return "-" if value is None else f"{100 * value:.1f}%"


def render_text(report: ExperimentReport) -> str:
    name = EXPERIMENT_NAMES.get(report.label_metric, report.label_metric)
    lines = [
        "=" * 60,
        f"Experiment: {name} ({report.label_metric}), seed {report.seed}",
        "=" * 60,
        f"Problems: {report.problems}  quarantined: {len(report.quarantined)}",
        f"Split: train {report.split.train}, validation {report.split.validation}, test {report.split.test}",
        "",
        "Classifiers",
    ]
    for c in report.classifiers:
        if c.constant_label is not None:
            lines.append(f"  {c.heuristic:<6} constant {c.constant_label:+d}")
            continue
        lines.append(
            f"  {c.heuristic:<6} gamma=2^{_log2(c.gamma)} C=2^{_log2(c.C)} j={c.cost_factor:.4g} "
            f"{report.config.metric}={c.validation_score:.4f} sv={c.support_vectors}"
            + ("" if c.converged else " (not converged)")
        )

    lines += ["", "Case  ML sotd ndrr Brown  count"]
    for row in report.cases:
        lines.append(
            f"{row.case:>4}  {_yn(row.ml):>2} {_yn(row.sotd):>4} {_yn(row.ndrr):>4} {_yn(row.brown):>5}  {row.count:>5}"
        )

    lines += ["", "sotd ndrr Brown  ML success (random)"]
    for row in report.conditional:
        lines.append(
            f"{_yn(row.sotd):>4} {_yn(row.ndrr):>4} {_yn(row.brown):>5}  "
            f"{_percent(row.proportion):>6} ({_percent(row.comparator)})"
        )

    lines += ["", "Totals over the test set"]
    for key in ("ml", "sotd", "ndrr", "brown"):
        lines.append(f"  {key:<6} {report.totals.get(key, 0)}")

    lines += [
        "",
        f"ML success: {report.totals.get('ml', 0)}/{report.test_size} ({_percent(report.ml_rate)})",
        f"Random choice: {_percent(report.random_baseline)}",
        f"Best single heuristic: {report.best_single or '-'} ({_percent(report.best_single_rate)})",
    ]
    if report.quarantined:
        lines += ["", "Quarantined"]
        lines += [f"  {q.problem_id}: {q.error}" for q in report.quarantined]
    if report.warnings:
        lines += ["", "Warnings"]
        lines += [f"  {w}" for w in report.warnings]
    return "\n".join(lines) + "\n"


def _log2(value: float) -> str:
    return str(round(math.log2(value)))


def render_structured(reports: Sequence[ExperimentReport]) -> str:
    """JSON list of reports, keys in declaration order."""
    payload = [r.model_dump(mode="json") for r in reports]
    return json.dumps(payload, indent=2) + "\n"


def render_reports(reports: Sequence[ExperimentReport], format: str = "text") -> str:
    if format == "structured":
        return render_structured(reports)
    return "\n".join(render_text(r) for r in reports)
