from __future__ import annotations

import os
import time

import pytest
from hypothesis import HealthCheck, settings

from lieinv import catalog

settings.register_profile("lieinv", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("lieinv")

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not (rep.when == "setup" and rep.failed)):
        return
    number, title = mark.args
    before = _CRITERIA.get(number, (title, "PASS"))[1]
    _CRITERIA[number] = (title, "PASS" if rep.passed and before == "PASS" else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")


@pytest.fixture(scope="session")
def catalog_sweep() -> tuple[dict[str, catalog.EntryReport], float]:
    """One timed verification pass over the shipped catalog, shared by every test."""
    keys = [e.key for e in catalog.list_entries()]
    t = time.perf_counter()
    reports = catalog.verify_many(keys, seed=0, jobs=os.cpu_count() or 1)
    return {r.key: r for r in reports}, time.perf_counter() - t


@pytest.fixture(scope="session")
def all_reports(catalog_sweep) -> dict[str, catalog.EntryReport]:
    return catalog_sweep[0]
