import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, tuple[str, str]] = {}


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    k, title = marker.kwargs["criterion"], marker.kwargs["title"]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[k] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        title, status = _criteria[k]
        terminalreporter.write_line(f"criterion {k}: {status}  {title}")
