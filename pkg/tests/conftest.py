import numpy as np
import pytest

from owarank.fixtures import data_structures

# Positional scores for the 16 data-structure books, rankers U1..U7
TABLE4 = {
    "DS1": [1, 0, 0, 0.9375, 0, 0, 0],
    "DS2": [0, 1, 0, 0, 0, 0, 0],
    "DS3": [0, 0.9375, 0, 0, 0.8125, 0, 0],
    "DS4": [0, 0, 1, 0, 0, 0, 0],
    "DS5": [0, 0, 0.9375, 0, 0, 0, 0],
    "DS6": [0, 0, 0.875, 0, 0, 0, 0],
    "DS7": [0, 0, 0.8125, 0, 0, 0, 0],
    "DS8": [0, 0, 0.75, 0, 0.9375, 0, 0],
    "DS9": [0, 0, 0, 1, 0, 1, 0],
    "DS10": [0, 0, 0, 0.875, 0, 0.875, 0],
    "DS11": [0, 0, 0, 0.8125, 0, 0, 0],
    "DS12": [0, 0, 0, 0, 1, 0, 0],
    "DS13": [0, 0, 0, 0, 0.875, 0, 0],
    "DS14": [0, 0, 0, 0, 0, 0.9375, 0],
    "DS15": [0, 0, 0, 0, 0, 0, 1],
    "DS16": [0, 0, 0, 0, 0, 0, 0.9375],
}

# Published consensus order and scores (most-preferred-first)
TABLE6 = [
    ("DS9", 0.4642),
    ("DS1", 0.450813),
    ("DS3", 0.408413),
    ("DS10", 0.406175),
    ("DS8", 0.395025),
    ("DS4", 0.25),
    ("DS12", 0.25),
    ("DS15", 0.25),
    ("DS5", 0.234375),
    ("DS14", 0.234375),
    ("DS16", 0.234375),
    ("DS6", 0.21875),
    ("DS13", 0.21875),
    ("DS2", 0.2142),
    ("DS7", 0.203125),
    ("DS11", 0.203125),
]

TABLE5 = [0.25, 0.21428, 0.17857, 0.14285, 0.10714, 0.07142, 0.03571]


@pytest.fixture
def ds_dataset():
    return data_structures()


@pytest.fixture
def ds_course(ds_dataset):
    return ds_dataset.courses[0]


@pytest.fixture
def table4_matrix():
    return np.array([TABLE4[f"DS{i}"] for i in range(1, 17)], dtype=float)


# ---------------------------------------------------------------- acceptance
# Tests marked ``criterion(n, text)`` get a one-line pass/fail summary.

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    key = marker.args[0]
    ok = _CRITERIA.get(key, (marker.args[1], True))[1] and not rep.failed
    _CRITERIA[key] = (marker.args[1], ok)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        text, ok = _CRITERIA[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}")
