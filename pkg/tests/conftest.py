import re
from collections import defaultdict

import pytest

from cayleybott.collection import cayley_plane
from cayleybott.parabolic import parse_space
from cayleybott.roots import build_root_system


@pytest.fixture(scope="session")
def E6():
    return build_root_system("E", 6)


@pytest.fixture(scope="session")
def P():
    return cayley_plane()


@pytest.fixture(scope="session")
def space():
    return parse_space


_criteria: dict[int, list[tuple[str, str]]] = defaultdict(list)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    m = re.search(r"test_acceptance\.py::test_c(\d+)_", report.nodeid)
    if m:
        _criteria[int(m.group(1))].append((report.nodeid.split("::", 1)[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        failed = [name for name, outcome in results if outcome != "passed"]
        verdict = "PASS" if not failed else "FAIL"
        line = f"criterion {n}: {verdict} ({len(results) - len(failed)}/{len(results)} checks)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
