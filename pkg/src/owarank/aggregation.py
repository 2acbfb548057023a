"""Positional scoring and OWA aggregation of ranked lists into a consensus.

Each ranker's list is turned into positional scores (PAS), giving an
item x ranker score matrix.  Each item's row is then collapsed to a single
score, either by OWA (sort descending, dot with weights) or by the plain
unweighted sum, and items are sorted by that score.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .dataset import CourseRanking, RankerRoster, distinct_items, natural_key
from .weighting import (
    QUANTIFIERS,
    Quantifier,
    WeightVector,
    most_preferred_first_weights,
    quantifier_weights,
)

__all__ = [
    "PasConfig",
    "ScoreMatrix",
    "AggregatedRanking",
    "MethodSpec",
    "parse_method",
    "pas_score",
    "build_score_matrix",
    "owa_aggregate",
    "pas_aggregate",
    "rank_items",
    "aggregate_course",
]


@dataclass(frozen=True)
class PasConfig:
    """Linear positional score: ``max(floor, 1 - (position - 1) * step)``."""

    step: float = 1 / 16
    floor: float = 0.0

    def __post_init__(self):
        if not 0 < self.step <= 1:
            raise ValueError(f"PAS step must be in (0, 1], got {self.step}")
        if not 0 <= self.floor < 1:
            raise ValueError(f"PAS floor must be in [0, 1), got {self.floor}")


@dataclass(frozen=True)
class ScoreMatrix:
    items: tuple[str, ...]
    rankers: tuple[str, ...]
    scores: np.ndarray = field(repr=False)

    def __post_init__(self):
        s = np.asarray(self.scores, dtype=float).reshape(len(self.items), len(self.rankers))
        if s.size and (s.min() < 0 or s.max() > 1):
            raise ValueError("scores must lie in [0, 1]")
        s.setflags(write=False)
        object.__setattr__(self, "scores", s)

    def row(self, item: str) -> np.ndarray:
        return self.scores[self.items.index(item)]


@dataclass(frozen=True)
class AggregatedRanking:
    course: str
    method: str
    entries: tuple[tuple[str, float], ...]

    @property
    def items(self) -> list[str]:
        return [item for item, _ in self.entries]

    def to_dict(self) -> dict:
        return {
            "course": self.course,
            "method": self.method,
            "entries": [{"item": i, "score": float(s)} for i, s in self.entries],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AggregatedRanking":
        return cls(
            str(data["course"]),
            str(data.get("method", "")),
            tuple((str(e["item"]), float(e.get("score", 0.0))) for e in data["entries"]),
        )


@dataclass(frozen=True)
class MethodSpec:
    """One of ``pas``, ``mpf`` or ``quantifier`` (with its quantifier)."""

    kind: str
    quantifier: Quantifier | None = None
    pas_config: PasConfig = PasConfig()

    def __post_init__(self):
        if self.kind not in ("pas", "mpf", "quantifier"):
            raise ValueError(f"unknown method kind {self.kind!r}")
        if (self.kind == "quantifier") != (self.quantifier is not None):
            raise ValueError("a quantifier is required exactly when kind == 'quantifier'")

    @property
    def label(self) -> str:
        if self.kind == "quantifier":
            q = self.quantifier
            if QUANTIFIERS.get(q.name) == q:
                return f"quantifier:{q.name}"
            return f"quantifier:a={float(q.a):g},b={float(q.b):g}"
        return self.kind

    def weights(self, m: int) -> WeightVector | None:
        if self.kind == "mpf":
            return most_preferred_first_weights(m)
        if self.kind == "quantifier":
            return quantifier_weights(self.quantifier, m)
        return None


def _parse_custom_quantifier(text: str) -> Quantifier:
    try:
        parts = dict(p.split("=", 1) for p in text.split(","))
        return Quantifier(f"a={parts['a']},b={parts['b']}", parts["a"].strip(), parts["b"].strip())
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad quantifier {text!r}, expected a=<x>,b=<y>: {exc}") from exc


def parse_method(token: str, pas_config: PasConfig = PasConfig(), quantifier: str | None = None) -> MethodSpec:
    """Parse a method token.

    Accepted: ``pas``, ``mpf`` (alias ``most-preferred-first``),
    ``quantifier:<preset>``, ``quantifier:a=<x>,b=<y>``, or plain
    ``quantifier`` together with ``quantifier="a=<x>,b=<y>"``.
    """
    token = token.strip()
    if token == "pas":
        return MethodSpec("pas", pas_config=pas_config)
    if token in ("mpf", "most-preferred-first"):
        return MethodSpec("mpf", pas_config=pas_config)
    if token == "quantifier":
        if quantifier is None:
            raise ValueError("method 'quantifier' needs a quantifier (a=<x>,b=<y>)")
        return MethodSpec("quantifier", _parse_custom_quantifier(quantifier), pas_config)
    if token.startswith("quantifier:"):
        name = token.split(":", 1)[1]
        if name in QUANTIFIERS:
            return MethodSpec("quantifier", QUANTIFIERS[name], pas_config)
        if "=" in name:
            return MethodSpec("quantifier", _parse_custom_quantifier(name), pas_config)
        raise ValueError(f"unknown quantifier {name!r}; presets: {', '.join(QUANTIFIERS)}")
    raise ValueError(f"unknown method {token!r}; expected pas, mpf or quantifier:<name>")


def pas_score(position: int, config: PasConfig = PasConfig()) -> float:
    """Positional score of a 1-based rank position."""
    if position < 1:
        raise ValueError(f"position must be >= 1, got {position}")
    return max(config.floor, 1.0 - (position - 1) * config.step)


def build_score_matrix(
    course: CourseRanking, roster: RankerRoster, config: PasConfig = PasConfig()
) -> ScoreMatrix:
    """Item x ranker positional scores; cells for unranked items are 0."""
    items = distinct_items(course, roster)
    rankers = tuple(roster)
    index = {item: i for i, item in enumerate(items)}
    scores = np.zeros((len(items), len(rankers)))
    for k, r in enumerate(rankers):
        for pos, item in enumerate(course.list_of(r), start=1):
            scores[index[item], k] = pas_score(pos, config)
    return ScoreMatrix(items, rankers, scores)


def owa_aggregate(row: Sequence[float], weights: WeightVector | Sequence[float]) -> float:
    """Ordered weighted average: weights attach to the sorted (descending) row."""
    row = np.asarray(row, dtype=float)
    w = np.asarray(weights, dtype=float)
    if row.shape != w.shape:
        raise ValueError(f"row has {row.size} values but {w.size} weights were given")
    return float(np.sort(row)[::-1] @ w)


def pas_aggregate(row: Sequence[float]) -> float:
    """Unweighted positional aggregation: the plain sum of the row."""
    return float(np.sum(np.asarray(row, dtype=float)))


def rank_items(
    matrix: ScoreMatrix,
    method: MethodSpec | str,
    course: str = "",
    weights: WeightVector | None = None,
) -> AggregatedRanking:
    """Score and sort every item in ``matrix``.

    Ties are broken by natural item order.  ``weights`` overrides the
    weights the method would generate itself.
    """
    if isinstance(method, str):
        method = parse_method(method)
    m = len(matrix.rankers)
    if method.kind == "pas":
        scores = [pas_aggregate(r) for r in matrix.scores]
        label = method.label
    else:
        w = weights if weights is not None else method.weights(m)
        if len(w) != m:
            raise ValueError(f"{len(w)} weights for {m} rankers")
        w = np.asarray(w, dtype=float)
        scores = [owa_aggregate(r, w) for r in matrix.scores]
        label = method.label if weights is None else getattr(weights, "provenance", method.label)
    entries = sorted(zip(matrix.items, scores), key=lambda e: (-e[1], natural_key(e[0])))
    return AggregatedRanking(course, label, tuple(entries))


def aggregate_course(course: CourseRanking, roster: RankerRoster, method: MethodSpec | str) -> AggregatedRanking:
    """Build the score matrix for one course and rank its items."""
    if isinstance(method, str):
        method = parse_method(method)
    matrix = build_score_matrix(course, roster, method.pas_config)
    return rank_items(matrix, method, course.course)
