import numpy as np
import pytest

from lawcluster import Grid

_ACCEPTANCE_LINES = []


@pytest.fixture
def report_criterion():
    """Record one acceptance verdict; all verdicts are printed at the end."""

    def record(number, name, passed, detail=""):
        verdict = "PASS" if passed else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{verdict}] criterion {number}: {name} {detail}".rstrip())
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture
def grid80():
    return Grid.uniform(80, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
