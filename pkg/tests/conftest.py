import pytest

from toricgb.harness import AFTER_A3, C1B, candidate_points
from toricgb.lattice_core import Configuration


@pytest.fixture
def after_a3():
    return AFTER_A3


@pytest.fixture
def c1b():
    return C1B


def full_m(alpha, d):
    return Configuration(alpha, d, tuple(candidate_points(alpha, d)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
