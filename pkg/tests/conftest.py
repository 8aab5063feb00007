import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, dict] = defaultdict(lambda: {"label": "", "passed": 0, "failed": 0})


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, label): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call" and not report.failed:
        return
    num, label = mark.args
    entry = _criteria[num]
    entry["label"] = label
    if report.failed:
        entry["failed"] += 1
    elif report.when == "call":
        entry["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        e = _criteria[num]
        status = "PASS" if e["failed"] == 0 and e["passed"] > 0 else "FAIL"
        total = e["passed"] + e["failed"]
        terminalreporter.write_line(
            f"{status}  criterion {num:>2}: {e['label']} ({e['passed']}/{total} checks)"
        )
