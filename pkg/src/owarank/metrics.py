"""Evaluation of a predicted ranking against a ground-truth ranking.

Veracity measures (higher is better): precision@k, MAP, reciprocal rank /
MRR, modified Spearman.  Fallacy measures (lower is better): FPR@k, FNR@k,
MAE, RMSE.

The relevant set for the @k measures is the top-k of the ground truth.
Position-based errors use 1-based positions of items present in both lists.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence

__all__ = [
    "RankedPair",
    "EvaluationReport",
    "VERACITY",
    "FALLACY",
    "precision_at_k",
    "fpr_at_k",
    "fnr_at_k",
    "mean_average_precision",
    "mean_absolute_error",
    "root_mean_square_error",
    "reciprocal_rank",
    "mean_reciprocal_rank",
    "modified_spearman",
    "spearman_positions",
    "evaluate",
]

VERACITY = ("p_at_k", "map", "mrr", "msrcc")
FALLACY = ("fpr_at_k", "fnr_at_k", "mae", "rmse")


@dataclass(frozen=True)
class RankedPair:
    predicted: tuple[str, ...]
    truth: tuple[str, ...]

    def __init__(self, predicted: Sequence[str], truth: Sequence[str]):
        predicted, truth = tuple(predicted), tuple(truth)
        for name, seq in (("predicted", predicted), ("truth", truth)):
            if len(set(seq)) != len(seq):
                raise ValueError(f"{name} ranking contains duplicate items")
        object.__setattr__(self, "predicted", predicted)
        object.__setattr__(self, "truth", truth)


@dataclass(frozen=True)
class EvaluationReport:
    course: str
    method: str
    k: int
    p_at_k: float
    fpr_at_k: float
    fnr_at_k: float
    mae: float
    rmse: float
    rr: float
    msrcc: float

    def to_dict(self) -> dict:
        return asdict(self)


def _check_k(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"cutoff k must be a positive integer, got {k!r}")


def _tops(pair: RankedPair, k: int) -> tuple[set[str], set[str]]:
    _check_k(k)
    return set(pair.predicted[:k]), set(pair.truth[:k])


def precision_at_k(pair: RankedPair, k: int = 10) -> float:
    """Share of the predicted top-k that is also in the true top-k (denominator k)."""
    pred, true = _tops(pair, k)
    return len(pred & true) / k


def fpr_at_k(pair: RankedPair, k: int = 10) -> float:
    pred, true = _tops(pair, k)
    return len(pred - true) / k


def fnr_at_k(pair: RankedPair, k: int = 10) -> float:
    pred, true = _tops(pair, k)
    return len(true - pred) / k


def _mean(values: Sequence[float], what: str) -> float:
    values = list(values)
    if not values:
        raise ValueError(f"{what} needs at least one value")
    return math.fsum(values) / len(values)


def mean_average_precision(precisions: Sequence[float]) -> float:
    """Mean of per-course precision@k values."""
    return _mean(precisions, "mean_average_precision")


def _position_errors(pair: RankedPair) -> list[int]:
    pos = {item: i for i, item in enumerate(pair.predicted, start=1)}
    errs = [pos[item] - i for i, item in enumerate(pair.truth, start=1) if item in pos]
    if not errs:
        raise ValueError("predicted and truth share no items")
    return errs


def mean_absolute_error(pair: RankedPair) -> float:
    return _mean([abs(e) for e in _position_errors(pair)], "mean_absolute_error")


def root_mean_square_error(pair: RankedPair) -> float:
    return math.sqrt(_mean([e * e for e in _position_errors(pair)], "root_mean_square_error"))


def reciprocal_rank(pair: RankedPair) -> float:
    """``1/r`` where ``r`` is the predicted position of the true top item; 0 if missing."""
    if not pair.truth:
        raise ValueError("truth ranking is empty")
    try:
        return 1.0 / (pair.predicted.index(pair.truth[0]) + 1)
    except ValueError:
        return 0.0


def mean_reciprocal_rank(rr_values: Sequence[float]) -> float:
    return _mean(rr_values, "mean_reciprocal_rank")


def modified_spearman(m: int, partial: Sequence[int]) -> float:
    """Modified Spearman coefficient for a partial list.

    ``partial[i-1]`` is the position ``v_i`` assigned to the item that the
    full list places at ``i``::

        1 - sum_i (i - v_i)^2 / (m * (max_j v_j ** 2 - 1))
    """
    v = list(partial)
    if m < 2:
        raise ValueError(f"modified Spearman needs m >= 2, got {m}")
    if len(v) != m:
        raise ValueError(f"expected {m} positions, got {len(v)}")
    if min(v) < 1:
        raise ValueError("positions are 1-based")
    top = max(v)
    if top == 1:
        raise ValueError("max position of 1 gives a zero denominator")
    num = sum((i - vi) ** 2 for i, vi in enumerate(v, start=1))
    return 1.0 - num / (m * (top * top - 1))


def spearman_positions(pair: RankedPair) -> list[int]:
    """Predicted position of each truth item, in truth order.

    Truth items missing from the prediction are placed just past its end.
    """
    pos = {item: i for i, item in enumerate(pair.predicted, start=1)}
    missing = len(pair.predicted) + 1
    return [pos.get(item, missing) for item in pair.truth]


def evaluate(pair: RankedPair, k: int = 10, course: str = "", method: str = "") -> EvaluationReport:
    """All per-course measures for one predicted/truth pair."""
    _check_k(k)
    return EvaluationReport(
        course=course,
        method=method,
        k=k,
        p_at_k=precision_at_k(pair, k),
        fpr_at_k=fpr_at_k(pair, k),
        fnr_at_k=fnr_at_k(pair, k),
        mae=mean_absolute_error(pair),
        rmse=root_mean_square_error(pair),
        rr=reciprocal_rank(pair),
        msrcc=modified_spearman(len(pair.truth), spearman_positions(pair)),
    )
