"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

from __future__ import annotations

import re

_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not match:
        return
    n = int(match.group(1))
    label = match.group(2).replace("_", " ")
    if report.when == "call" or report.outcome != "passed":
        status = "PASS" if report.outcome == "passed" else "FAIL"
        if n not in _results:
            _results[n] = (status, label)
        elif status == "FAIL":
            _results[n] = (status, _results[n][1])


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status, label = _results[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {label}")
