import pytest

from heterotree.colourings import graceful_colouring
from heterotree.graph import EdgeColouredGraph

ACCEPTANCE_LINES = []


@pytest.fixture
def k3():
    """Graceful K_3: edges 01:1, 02:2, 12:1 (indices 0, 1, 2)."""
    return graceful_colouring(2)


@pytest.fixture
def k3_mono():
    return EdgeColouredGraph(3, ((0, 1, 1), (0, 2, 1), (1, 2, 1)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
