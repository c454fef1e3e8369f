"""Shared fixtures and the per-criterion acceptance summary."""

from __future__ import annotations

import pytest

from bigamma.loglog import build_table

_ACCEPTANCE: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion covered by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, text = mark.args
            _ACCEPTANCE.setdefault(number, {"text": text, "outcomes": {}})
            _ACCEPTANCE[number]["outcomes"][item.nodeid] = None


def pytest_runtest_logreport(report):
    for entry in _ACCEPTANCE.values():
        if report.nodeid in entry["outcomes"]:
            if report.when == "call" or report.outcome == "failed":
                prev = entry["outcomes"][report.nodeid]
                if prev != "failed":
                    entry["outcomes"][report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        entry = _ACCEPTANCE[number]
        outcomes = list(entry["outcomes"].values())
        if any(o is None for o in outcomes):
            status = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            status = "PASS"
        else:
            status = "FAIL"
        tr.write_line(f"criterion {number:>2}: {status:<7} {entry['text']}")


@pytest.fixture(scope="session")
def gamma_ln_table():
    return build_table("GAMMA_LN", 13, 13)


@pytest.fixture(scope="session")
def bigamma_int_table():
    return build_table("BIGAMMA_INT", 13, 13)
