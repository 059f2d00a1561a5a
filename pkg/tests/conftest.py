import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eseries.exact import coefficient_table  # noqa: E402

ACCEPTANCE_RESULTS = []
BIG_J = 5000


@pytest.fixture(scope="session")
def big_build():
    """Shared a_0..a_5000 and the wall time of its first build (seconds)."""
    start = time.perf_counter()
    table = coefficient_table(BIG_J, fresh=True)
    return table, time.perf_counter() - start


@pytest.fixture(scope="session")
def big_table(big_build):
    return big_build[0]


@pytest.fixture(scope="session")
def small_table():
    return coefficient_table(600)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, text in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
