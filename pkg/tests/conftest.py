import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from finring.ring import relabel  # noqa: E402
from finring.search import catalog  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def catalog8():
    return catalog(8)


@pytest.fixture(scope="session")
def catalog12():
    return catalog(12, allow_large=True)


@pytest.fixture(scope="session")
def catalog16():
    return catalog(16, allow_large=True)


def random_relabel(R, rng):
    perm = np.concatenate([[0], 1 + rng.permutation(R.order - 1)])
    return relabel(R, perm)


@pytest.fixture
def shuffle():
    return random_relabel


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance():
    """Record one pass/fail line for a criterion; returns the verdict."""
    def record(number, name, checks):
        failed = [k for k, ok in checks.items() if not ok]
        verdict = "PASS" if not failed else "FAIL"
        line = f"[{verdict}] criterion {number}: {name}"
        if failed:
            line += " (failed: " + ", ".join(failed) + ")"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return not failed
    return record
