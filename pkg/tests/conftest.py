import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chordsieve.matchcore import make_matching, make_subset, parse_matching


@pytest.fixture
def running_tau():
    """The one-crossing matching on 14 points drawn in the introduction."""
    return make_matching(7, [(2, 3), (1, 4), (6, 7), (9, 10), (8, 12), (13, 14), (5, 11)])


@pytest.fixture
def example_tau():
    """Worked example: seeds {1,2,3,9,12} and the one-crossing matching they give."""
    return parse_matching("(1,6)(2,5)(3,4)(9,10)(12,13)(7,11)(8,14)")


def subset(n, *labels):
    return make_subset(n, labels)


# -- acceptance summary ----------------------------------------------------
# Tests marked ``acceptance(number, title)`` get one PASS/FAIL line each in
# the terminal summary, whatever the capture mode.

_acceptance = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    number, title = mark.args
    failed = call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception)
    prev = _acceptance.get(number, (title, True))
    _acceptance[number] = (title, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok = _acceptance[number]
        terminalreporter.write_line(f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}")
