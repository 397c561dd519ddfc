import pytest

from _graphs import TWO_TRIANGLES_BRIDGE
from netresilience import build_graph


@pytest.fixture
def barbell():
    """Two triangles {0,1,2} and {3,4,5} joined by the bridge (2, 3)."""
    return build_graph(TWO_TRIANGLES_BRIDGE)


@pytest.fixture
def two_k5():
    k5 = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    return build_graph(k5 + [(i + 5, j + 5) for i, j in k5] + [(4, 5)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
