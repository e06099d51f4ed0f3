"""Collects one verdict line per acceptance criterion and prints them in
the terminal summary, so they show up even with output capture on."""

import re

import pytest

_DETAILS: dict[int, str] = {}
_OUTCOMES: dict[int, str] = {}
_CRITERION = re.compile(r"test_criterion_(\d+)")


@pytest.fixture
def acceptance_detail():
    def note(criterion: int, text: str) -> None:
        _DETAILS[criterion] = text
        print(f"criterion {criterion}: {text}")

    return note


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and report.failed):
        _OUTCOMES[k] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_OUTCOMES):
        terminalreporter.write_line(f"criterion {k}: {_OUTCOMES[k]}  {_DETAILS.get(k, '')}".rstrip())
