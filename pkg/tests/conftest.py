import re

import pytest

_results: dict[str, str] = {}
_ACCEPT = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _ACCEPT.search(report.nodeid)
    if not m or "test_acceptance.py" not in report.nodeid:
        return
    key = f"{int(m.group(1))}:{m.group(2)}"
    if report.failed:
        _results[key] = "FAIL"
    elif report.when == "call" and key not in _results:
        _results[key] = "PASS" if report.passed else "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results, key=lambda k: (int(k.split(":")[0]), k)):
        num, name = key.split(":", 1)
        terminalreporter.write_line(f"criterion {num} {name.replace('_', ' ')}: {_results[key]}")


@pytest.fixture
def rng():
    import random

    return random.Random(20240601)
