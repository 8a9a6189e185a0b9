from fractions import Fraction

import pytest
from hypothesis import strategies as st

from commoncause import Interval, event_normalize

GRID = 48

ACCEPTANCE_LINES: list[str] = []


@st.composite
def events(draw, max_intervals=4):
    raw = []
    for _ in range(draw(st.integers(0, max_intervals))):
        lo = draw(st.integers(0, GRID))
        hi = draw(st.integers(0, GRID))
        raw.append(Interval(Fraction(min(lo, hi), GRID), Fraction(max(lo, hi), GRID)))
    return event_normalize(raw)


@pytest.fixture
def acceptance_line():
    def record(name: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
