"""Run aggregation methods over a dataset and compare them against ground truth.

This is the library side of the command-line tool: every function returns
plain data and the rendering helpers produce deterministic JSON / markdown.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .aggregation import AggregatedRanking, MethodSpec, aggregate_course, parse_method
from .dataset import GroundTruth, RankingDataset
from .metrics import FALLACY, VERACITY, EvaluationReport, RankedPair, evaluate

__all__ = [
    "PAPER_METHODS",
    "METRICS",
    "ComparisonReport",
    "aggregate_dataset",
    "evaluate_ranking",
    "improvement",
    "compare",
    "dumps",
    "comparison_markdown",
    "evaluation_markdown",
]

# the five methods compared in the original experiment, proposed one last
PAPER_METHODS = ("pas", "quantifier:at-least-half", "quantifier:as-many-as-possible", "quantifier:most", "mpf")

METRICS = ("p_at_k", "fpr_at_k", "fnr_at_k", "map", "mae", "mrr", "rmse", "msrcc")


def aggregate_dataset(dataset: RankingDataset, method: MethodSpec | str) -> list[AggregatedRanking]:
    """Aggregate every course, in dataset order."""
    if isinstance(method, str):
        method = parse_method(method)
    return [aggregate_course(c, dataset.roster, method) for c in dataset.courses]


def evaluate_ranking(predicted: AggregatedRanking, truth: GroundTruth, k: int = 10) -> EvaluationReport:
    if predicted.course != truth.course:
        raise ValueError(f"course mismatch: predicted {predicted.course!r}, truth {truth.course!r}")
    pair = RankedPair(predicted.items, truth.ranking)
    return evaluate(pair, k, course=truth.course, method=predicted.method)


def improvement(metric: str, proposed: float, baseline: float) -> float | None:
    """Percent improvement of ``proposed`` over ``baseline``.

    Positive means the proposed method is better, whichever direction the
    metric runs.  ``None`` when the baseline is 0 and the values differ.
    """
    if metric in FALLACY:
        delta = baseline - proposed
    elif metric in VERACITY:
        delta = proposed - baseline
    else:
        raise ValueError(f"unknown metric {metric!r}")
    if baseline == 0:
        return 0.0 if proposed == baseline else None
    return delta / baseline * 100.0


@dataclass(frozen=True)
class ComparisonReport:
    k: int
    proposed: str
    methods: tuple[str, ...]
    reports: dict[str, tuple[EvaluationReport, ...]]
    means: dict[str, dict[str, float]]
    improvements: dict[str, dict[str, float | None]]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "proposed": self.proposed,
            "methods": list(self.methods),
            "reports": {m: [r.to_dict() for r in rs] for m, rs in self.reports.items()},
            "means": self.means,
            "improvements": self.improvements,
        }


def _unique_labels(methods: Sequence[MethodSpec]) -> list[str]:
    labels, seen = [], {}
    for m in methods:
        n = seen.get(m.label, 0) + 1
        seen[m.label] = n
        labels.append(m.label if n == 1 else f"{m.label}#{n}")
    return labels


def _means(reports: Sequence[EvaluationReport]) -> dict[str, float]:
    def avg(attr):
        return math.fsum(getattr(r, attr) for r in reports) / len(reports)

    p = avg("p_at_k")
    return {
        "p_at_k": p,
        "fpr_at_k": avg("fpr_at_k"),
        "fnr_at_k": avg("fnr_at_k"),
        "map": p,
        "mae": avg("mae"),
        "mrr": avg("rr"),
        "rmse": avg("rmse"),
        "msrcc": avg("msrcc"),
    }


def compare(
    dataset: RankingDataset,
    truths: Iterable[GroundTruth],
    methods: Sequence[MethodSpec | str] = PAPER_METHODS,
    proposed: str = "mpf",
    k: int = 10,
) -> ComparisonReport:
    """Evaluate each method on every course that has a ground truth.

    Per-metric means are taken over courses (so ``map`` is the mean of
    precision@k and ``mrr`` the mean reciprocal rank), then the proposed
    method is compared against each of the others.
    """
    specs = [parse_method(m) if isinstance(m, str) else m for m in methods]
    if len(specs) < 2:
        raise ValueError("compare needs at least two methods")
    labels = _unique_labels(specs)
    if proposed not in labels:
        raise ValueError(f"proposed method {proposed!r} is not among {labels}")
    truth_by_course = {t.course: t for t in truths}
    courses = [c for c in dataset.courses if c.course in truth_by_course]
    if not courses:
        raise ValueError("no course in the dataset has a ground truth")

    reports: dict[str, tuple[EvaluationReport, ...]] = {}
    for label, spec in zip(labels, specs):
        rows = []
        for c in courses:
            ranking = aggregate_course(c, dataset.roster, spec)
            rep = evaluate_ranking(ranking, truth_by_course[c.course], k)
            rows.append(_relabel(rep, label))
        reports[label] = tuple(rows)

    means = {label: _means(reports[label]) for label in labels}
    improvements = {
        label: {m: improvement(m, means[proposed][m], means[label][m]) for m in METRICS}
        for label in labels
        if label != proposed
    }
    return ComparisonReport(k, proposed, tuple(labels), reports, means, improvements)


def _relabel(rep: EvaluationReport, label: str) -> EvaluationReport:
    d = rep.to_dict()
    d["method"] = label
    return EvaluationReport(**d)


# ---------------------------------------------------------------- rendering


def dumps(obj) -> str:
    """Deterministic JSON: fixed key order, shortest round-trip floats."""
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _fmt(x) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, int):
        return str(x)
    return f"{x:.6g}"


_HEADERS = {
    "p_at_k": "P@k",
    "fpr_at_k": "FPR@k",
    "fnr_at_k": "FNR@k",
    "map": "MAP",
    "mae": "MAE",
    "mrr": "MRR",
    "rmse": "RMSE",
    "msrcc": "MSRCC",
    "rr": "RR",
}

_PER_COURSE = ("p_at_k", "fpr_at_k", "fnr_at_k", "mae", "rmse", "rr", "msrcc")


def _table(header: Sequence[str], rows: Iterable[Sequence[str]]) -> list[str]:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(r) + " |" for r in rows]
    return out


def evaluation_markdown(reports: Sequence[EvaluationReport]) -> str:
    k = reports[0].k if reports else 10
    header = ["course", "method"] + [_HEADERS[m].replace("k", str(k)) if m.endswith("_k") else _HEADERS[m] for m in _PER_COURSE]
    rows = [[r.course, r.method] + [_fmt(getattr(r, m)) for m in _PER_COURSE] for r in reports]
    return "\n".join(_table(header, rows)) + "\n"


def comparison_markdown(report: ComparisonReport) -> str:
    k = report.k
    name = {m: (_HEADERS[m].replace("k", str(k)) if m.endswith("_k") else _HEADERS[m]) for m in _HEADERS}
    lines = [f"## Per-course results (k={k})", ""]
    lines += evaluation_markdown([r for m in report.methods for r in report.reports[m]]).splitlines()
    lines += ["", "## Method means", ""]
    lines += _table(
        ["method"] + [name[m] for m in METRICS],
        ([m] + [_fmt(report.means[m][x]) for x in METRICS] for m in report.methods),
    )
    lines += ["", f"## Improvement of {report.proposed} over each baseline (%)", ""]
    lines += _table(
        ["metric"] + list(report.improvements),
        ([name[x]] + [_fmt(report.improvements[b][x]) for b in report.improvements] for x in METRICS),
    )
    return "\n".join(lines) + "\n"
