"""Rankers, courses and the ordered item lists they produce.

A dataset is a roster of rankers (best ranked first) plus, per course, each
ranker's ordered list of item ids.  Values are plain frozen dataclasses;
nothing here mutates its inputs.

Two on-disk formats are supported:

* JSON: ``{"roster": [...], "courses": [{"name": ..., "rankings": {ranker: [items]}}]}``
* CSV with columns ``course,ranker,position,item`` (1-based positions, any
  row order).
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

__all__ = [
    "ParseError",
    "RankerRoster",
    "CourseRanking",
    "RankingDataset",
    "GroundTruth",
    "natural_key",
    "validate_dataset",
    "distinct_items",
    "dataset_from_dict",
    "dataset_to_dict",
    "load_dataset",
    "dump_dataset",
    "parse_csv",
    "to_csv",
    "ground_truth_from_dict",
    "ground_truth_to_dict",
    "load_ground_truths",
]


class ParseError(ValueError):
    """Raised when an input file cannot be turned into the data model."""


_CHUNK = re.compile(r"(\d+)")


def natural_key(token: str) -> tuple:
    """Sort key comparing digit runs numerically, so ``DS4 < DS12 < DS15``."""
    parts = _CHUNK.split(token)
    return tuple((0, int(p), p) if p.isdigit() else (1, 0, p) for p in parts)


@dataclass(frozen=True)
class RankerRoster:
    """Ordered ranker ids; position 1 is the best ranked source."""

    rankers: tuple[str, ...]

    def __init__(self, rankers: Iterable[str]):
        object.__setattr__(self, "rankers", tuple(rankers))

    def __len__(self) -> int:
        return len(self.rankers)

    def __iter__(self):
        return iter(self.rankers)

    def __contains__(self, ranker: object) -> bool:
        return ranker in self.rankers


@dataclass(frozen=True)
class CourseRanking:
    """One course: each ranker's preference order over item ids.

    Rankers with an empty list are dropped on construction, so "ranked
    nothing" and "absent" compare equal.
    """

    course: str
    rankings: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def __init__(self, course: str, rankings: Mapping[str, Sequence[str]] | None = None):
        cleaned = {r: tuple(items) for r, items in (rankings or {}).items() if len(items)}
        object.__setattr__(self, "course", course)
        object.__setattr__(self, "rankings", cleaned)

    def list_of(self, ranker: str) -> tuple[str, ...]:
        return self.rankings.get(ranker, ())


@dataclass(frozen=True)
class RankingDataset:
    roster: RankerRoster
    courses: tuple[CourseRanking, ...]

    def __init__(self, roster: RankerRoster | Iterable[str], courses: Iterable[CourseRanking] = ()):
        if not isinstance(roster, RankerRoster):
            roster = RankerRoster(roster)
        object.__setattr__(self, "roster", roster)
        object.__setattr__(self, "courses", tuple(courses))

    def course(self, name: str) -> CourseRanking:
        for c in self.courses:
            if c.course == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class GroundTruth:
    """Expert ranking for one course, best item first."""

    course: str
    ranking: tuple[str, ...]

    def __init__(self, course: str, ranking: Iterable[str]):
        object.__setattr__(self, "course", course)
        object.__setattr__(self, "ranking", tuple(ranking))


def validate_dataset(dataset: RankingDataset) -> list[str]:
    """Return a description of every structural violation in ``dataset``.

    An empty list means the dataset is valid.  Violations are reported, never
    raised.
    """
    problems: list[str] = []
    roster = dataset.roster.rankers
    if not roster:
        problems.append("roster is empty")
    seen: set[str] = set()
    for r in roster:
        if not r:
            problems.append("roster contains an empty ranker id")
        elif r in seen:
            problems.append(f"roster: duplicate ranker {r!r}")
        seen.add(r)

    names: set[str] = set()
    for c in dataset.courses:
        if c.course in names:
            problems.append(f"duplicate course name {c.course!r}")
        names.add(c.course)
        for ranker, items in c.rankings.items():
            if ranker not in seen:
                problems.append(f"course {c.course!r}: ranker {ranker!r} is not in the roster")
            counted: set[str] = set()
            for pos, item in enumerate(items, start=1):
                if not item:
                    problems.append(
                        f"course {c.course!r}, ranker {ranker!r}: empty item id at position {pos}"
                    )
                elif item in counted:
                    problems.append(
                        f"course {c.course!r}, ranker {ranker!r}: item {item!r} repeated at position {pos}"
                    )
                counted.add(item)
    return problems


def distinct_items(course: CourseRanking, roster: RankerRoster | Iterable[str] | None = None) -> tuple[str, ...]:
    """Union of all rankers' lists in order of first appearance.

    Rankers are scanned in roster order (falling back to the course's own
    ranker order when no roster is given), positions ascending.
    """
    order = list(roster) if roster is not None else list(course.rankings)
    # rankers missing from the roster still contribute, after the roster ones
    order += [r for r in course.rankings if r not in order]
    out: dict[str, None] = {}
    for r in order:
        for item in course.list_of(r):
            out.setdefault(item, None)
    return tuple(out)


# --------------------------------------------------------------------- JSON


def dataset_from_dict(data: Mapping) -> RankingDataset:
    try:
        roster = data["roster"]
        courses = data.get("courses", [])
        if not isinstance(roster, list) or not isinstance(courses, list):
            raise ParseError("'roster' and 'courses' must be arrays")
        parsed = []
        for c in courses:
            rankings = c.get("rankings", {})
            if not isinstance(rankings, dict):
                raise ParseError(f"course {c.get('name')!r}: 'rankings' must be an object")
            for r, items in rankings.items():
                if not isinstance(items, list) or not all(isinstance(i, str) for i in items):
                    raise ParseError(f"course {c.get('name')!r}, ranker {r!r}: list of item strings expected")
            parsed.append(CourseRanking(str(c["name"]), rankings))
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed dataset: {exc!r}") from exc
    return RankingDataset(RankerRoster(str(r) for r in roster), parsed)


def dataset_to_dict(dataset: RankingDataset) -> dict:
    return {
        "roster": list(dataset.roster),
        "courses": [
            {"name": c.course, "rankings": {r: list(items) for r, items in c.rankings.items()}}
            for c in dataset.courses
        ],
    }


# ---------------------------------------------------------------------- CSV

_CSV_COLUMNS = ("course", "ranker", "position", "item")


def parse_csv(text: str, roster: Iterable[str] | None = None) -> RankingDataset:
    """Parse the ``course,ranker,position,item`` CSV format.

    CSV carries no explicit roster; unless one is supplied, rankers are
    ordered naturally by id (``U1 < U2 < ... < U10``).  Courses keep their
    order of first appearance.
    """
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != list(_CSV_COLUMNS):
        raise ParseError(f"CSV header must be {','.join(_CSV_COLUMNS)}")
    cells: dict[str, dict[str, dict[int, str]]] = {}
    for lineno, row in enumerate(reader, start=2):
        row = {k.strip(): (v or "").strip() for k, v in row.items() if k is not None}
        try:
            pos = int(row["position"])
        except ValueError:
            raise ParseError(f"line {lineno}: position {row['position']!r} is not an integer") from None
        if pos < 1:
            raise ParseError(f"line {lineno}: position must be >= 1")
        slot = cells.setdefault(row["course"], {}).setdefault(row["ranker"], {})
        if pos in slot:
            raise ParseError(
                f"line {lineno}: duplicate row for course {row['course']!r}, "
                f"ranker {row['ranker']!r}, position {pos}"
            )
        slot[pos] = row["item"]

    courses = []
    rankers_seen: set[str] = set()
    for name, per_ranker in cells.items():
        lists = {}
        for r, slots in per_ranker.items():
            positions = sorted(slots)
            if positions != list(range(1, len(positions) + 1)):
                raise ParseError(f"course {name!r}, ranker {r!r}: positions {positions} are not 1..n")
            lists[r] = [slots[p] for p in positions]
            rankers_seen.add(r)
        courses.append(CourseRanking(name, lists))
    if roster is None:
        roster = sorted(rankers_seen, key=natural_key)
    return RankingDataset(RankerRoster(roster), courses)


def to_csv(dataset: RankingDataset) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_CSV_COLUMNS)
    for c in dataset.courses:
        for r, items in c.rankings.items():
            for pos, item in enumerate(items, start=1):
                w.writerow([c.course, r, pos, item])
    return buf.getvalue()


def load_dataset(path: str | Path) -> RankingDataset:
    """Read a dataset from ``.json`` or ``.csv`` (chosen by suffix)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".csv":
        return parse_csv(text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top-level JSON object expected")
    return dataset_from_dict(data)


def dump_dataset(dataset: RankingDataset, path: str | Path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        path.write_text(to_csv(dataset), encoding="utf-8")
    else:
        path.write_text(json.dumps(dataset_to_dict(dataset), indent=2) + "\n", encoding="utf-8")


# -------------------------------------------------------------- ground truth


def ground_truth_from_dict(data: Mapping) -> GroundTruth:
    try:
        course, ranking = data["course"], data["ranking"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed ground truth: {exc!r}") from exc
    if not isinstance(ranking, list) or not all(isinstance(i, str) for i in ranking):
        raise ParseError(f"ground truth {course!r}: 'ranking' must be a list of strings")
    if len(set(ranking)) != len(ranking):
        raise ParseError(f"ground truth {course!r}: duplicate items")
    return GroundTruth(str(course), ranking)


def ground_truth_to_dict(truth: GroundTruth) -> dict:
    return {"course": truth.course, "ranking": list(truth.ranking)}


def load_ground_truths(path: str | Path) -> list[GroundTruth]:
    """Load one ground-truth object, or a JSON array of them."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    items = data if isinstance(data, list) else [data]
    truths = [ground_truth_from_dict(d) for d in items]
    names = [t.course for t in truths]
    if len(set(names)) != len(names):
        raise ParseError(f"{path}: duplicate course in ground truth")
    return truths
