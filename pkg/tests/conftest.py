from __future__ import annotations

import random
from itertools import combinations

import pytest

from splitham.graph import Graph, build_graph

ACCEPTANCE: dict[int, dict] = {}


def pytest_addoption(parser):
    parser.addoption("--run-n10", action="store_true", default=False, help="run the n=10, |I|=4 exhaustive checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-n10"):
        return
    skip = pytest.mark.skip(reason="needs --run-n10")
    for item in items:
        if "optin" in item.keywords:
            item.add_marker(skip)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker.args
    entry = ACCEPTANCE.setdefault(number, {"title": title, "failed": False, "passed": 0})
    if report.failed:
        entry["failed"] = True
    elif report.when == "call" and report.passed:
        entry["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        entry = ACCEPTANCE[number]
        status = "FAIL" if entry["failed"] else "PASS" if entry["passed"] else "SKIP"
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['title']}")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
