import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.fspath.basename == "test_acceptance.py":
        m = re.match(r"test_c(\d+)", item.name)
        if m:
            key = f"criterion {int(m.group(1))}"
            if report.when == "call":
                _ACCEPTANCE_RESULTS[key] = "PASS" if report.passed else "FAIL"
            elif report.when == "setup" and (report.failed or report.skipped):
                _ACCEPTANCE_RESULTS[key] = "FAIL" if report.failed else "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for key in sorted(_ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[1])):
        terminalreporter.write_line(f"{key}: {_ACCEPTANCE_RESULTS[key]}")
