import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

_LINES = []


@pytest.fixture
def criterion():
    """Record a one-line verdict to be echoed in the terminal summary."""

    def _record(line: str) -> None:
        _LINES.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria (secondary)")
        for line in _LINES:
            terminalreporter.line(line)
