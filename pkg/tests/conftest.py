import time

import numpy as np
import pytest

_LINES = []


class Criterion:
    """Times a block, records one PASS/FAIL line and fails the test on
    a tolerance miss or an overrun of the time budget."""

    def __init__(self, label, budget):
        self.label = label
        self.budget = budget
        self.worst = {}

    def deviation(self, value, tol):
        self.worst[tol] = max(self.worst.get(tol, 0.0), float(value))
        return value <= tol

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.budget
        worst = ", ".join(f"{w:.1e} (tol {t:.0e})" for t, w in sorted(self.worst.items()))
        line = f"{'PASS' if ok else 'FAIL'}  {self.label:<52s} t={elapsed:.2f}s (< {self.budget:g}s)  worst {worst}"
        if exc_type is not None:
            line += f"  [{exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}]"
        print(line)
        _LINES.append(line)
        if exc_type is None:
            assert elapsed < self.budget, f"{self.label}: took {elapsed:.2f}s, budget {self.budget}s"
        return False


@pytest.fixture(scope="session", autouse=True)
def _warm_jit():
    # load the compiled eigensolver once so budgets measure the numerics
    from abrealism.linalg import hermitian_eigendecompose

    hermitian_eigendecompose(np.eye(2))


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
