import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sizedla import matrix, vector  # noqa: E402
from sizedla.size import Size  # noqa: E402

# The fragments of the static suite are data, not tests.
collect_ignore_glob = ["../src/sizedla/static/cases/*"]

ACCEPTANCE_LINES: dict[int, str] = {}


def vec(xs):
    """Untyped helper: a vector holding ``xs``."""
    xs = list(xs)
    return vector.of_array_dyn(Size(len(xs)), xs)


def mat(rows, cols=None):
    """Untyped helper: a matrix from a row-major nested list."""
    rows = [list(r) for r in rows]
    n = len(rows[0]) if rows else (cols or 0)
    return matrix.of_list_dyn(Size(len(rows)), Size(n), rows)


@pytest.fixture(scope="session")
def static_run():
    """One run of the whole static suite: (results, seconds)."""
    from sizedla.static import run_suite

    t0 = time.perf_counter()
    results = run_suite()
    return results, time.perf_counter() - t0


@pytest.fixture(scope="session")
def static_results(static_run):
    return static_run[0]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
