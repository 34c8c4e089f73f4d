from collections import Counter
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

DATA = Path(__file__).parent / "data"

_acceptance_lines = []


def brute_counts(values):
    """Nonempty-subset sum counts by itertools, independent of every package backend."""
    c = Counter()
    for r in range(1, len(values) + 1):
        for combo in combinations(values, r):
            c[sum(combo)] += 1
    return dict(c)


naturals = st.lists(st.integers(1, 64), min_size=1, max_size=10)
integers = st.lists(st.integers(-40, 40), min_size=1, max_size=10)


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def record_criterion():
    """Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

    class Recorder:
        def __init__(self):
            self.name = None

        def __call__(self, name):
            self.name = name
            return self

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            status = "PASS" if exc_type is None else "FAIL"
            _acceptance_lines.append(f"[{status}] {self.name}")
            return False

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
