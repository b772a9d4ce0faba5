import time
from contextlib import contextmanager

import pytest

_results: dict[int, tuple[str, bool, float, float]] = {}


@pytest.fixture
def criterion():
    """Time a block, record PASS/FAIL for the summary and enforce the time budget."""

    @contextmanager
    def run(number: int, title: str, budget: float):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            within = elapsed < budget
            _results[number] = (title, ok and within, elapsed, budget)
            print(f"criterion {number:2d} {'PASS' if ok and within else 'FAIL'}: {title} ({elapsed:.2f}s / {budget:g}s)")
        assert within, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, ok, elapsed, budget = _results[number]
        terminalreporter.write_line(
            f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title} ({elapsed:.2f}s / {budget:g}s)"
        )
