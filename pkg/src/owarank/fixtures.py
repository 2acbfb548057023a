"""Bundled example data: seven ranked universities and their data-structure book lists."""

from __future__ import annotations

import json
from importlib import resources

from .dataset import RankingDataset, dataset_from_dict

# ranker id -> institution, best ranked first
UNIVERSITIES = {
    "U1": "IIT, Bombay",
    "U2": "IIT, Delhi",
    "U3": "IIT, Kanpur",
    "U4": "IIT, Madras",
    "U5": "IISC, Bangalore",
    "U6": "IIT, Kharagpur",
    "U7": "IIT, Roorkee",
}

DATA_STRUCTURES_PATH = resources.files(__package__) / "data" / "data_structures.json"


def data_structures() -> RankingDataset:
    """The 16-book, 7-university "Data Structure" course."""
    return dataset_from_dict(json.loads(DATA_STRUCTURES_PATH.read_text(encoding="utf-8")))
