import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from austrian_solitaire.partition import AustrianPartition  # noqa: E402

_acceptance = []


@st.composite
def austrian_states(draw, max_L=20, max_n=200):
    L = draw(st.integers(1, max_L))
    n = draw(st.integers(0, max_n))
    bank = draw(st.integers(0, min(L - 1, n)))
    rest = n - bank
    freq = [0] * L
    while rest:
        part = draw(st.integers(1, min(L, rest)))
        freq[part - 1] += 1
        rest -= part
    return AustrianPartition(L, bank, tuple(freq))


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({duration:.2f}s)")


@pytest.fixture
def example1():
    from austrian_solitaire import from_parts
    return from_parts(0, [5, 5, 4, 3, 2, 2, 1], 5)


@pytest.fixture
def example2():
    from austrian_solitaire import from_parts
    return from_parts(2, [14, 14, 13, 12, 11, 10, 10, 9, 8, 7, 6, 6, 5, 4, 3, 2, 2, 1], 14)
