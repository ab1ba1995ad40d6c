from __future__ import annotations

import sys
from pathlib import Path

import pytest

from procmatch.embeddings import load_embeddings
from procmatch.model_io import load_reference_library
from procmatch.translator import translate

DATA = Path(__file__).parent / "data"

# make oracles.py and strategies.py importable from test modules
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def toy_embeddings_path() -> Path:
    return DATA / "toy_embeddings_8d.txt"


@pytest.fixture(scope="session")
def toy_table(toy_embeddings_path):
    return load_embeddings(toy_embeddings_path)


@pytest.fixture(scope="session")
def order_text() -> str:
    return (DATA / "order_fulfillment.txt").read_text(encoding="utf-8")


@pytest.fixture
def order_result(order_text):
    return translate(order_text, name="order_fulfillment")


@pytest.fixture(scope="session")
def references():
    nets, errors = load_reference_library(DATA / "references")
    assert not errors
    return {net.name: net for net in nets}


# acceptance summary: one PASS/FAIL line per criterion

_criteria: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed
    if report.when == "call" or failed:
        previous = _criteria.get(number, ("PASS", title))[0]
        status = "FAIL" if failed or previous == "FAIL" else "PASS"
        _criteria[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
