"""Shared fixtures plus the acceptance-suite pass/fail summary."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import make_network  # noqa: E402


@pytest.fixture
def path3():
    """a -> b -> c."""
    return make_network("abc", [("a", "b"), ("b", "c")])


@pytest.fixture
def diamond():
    """a -> {b, c} -> d."""
    return make_network("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


@pytest.fixture
def two_disjoint_edges():
    return make_network("abcd", [("a", "b"), ("c", "d")])


# one human-readable line per acceptance criterion at the end of the run
_acceptance_results: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance_results.append((name, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"[{outcome}] {name}")
