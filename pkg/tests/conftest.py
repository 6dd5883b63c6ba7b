import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

_RESULTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for an acceptance criterion and print it."""
    def record(number: int, title: str, ok: bool, detail: str):
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  [{detail}]"
        request.config.stash[_RESULTS].append((number, line))
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = sorted(config.stash.get(_RESULTS, []))
    if results:
        terminalreporter.section("acceptance criteria")
        for _, line in results:
            terminalreporter.write_line(line)
