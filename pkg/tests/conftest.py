import pytest
from hypothesis import HealthCheck, settings

from dijkstra_pq.graph import GraphBuilder

settings.register_profile(
    "default", deadline=None, max_examples=100, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_ACCEPTANCE_LINES = []


@pytest.fixture
def report_criterion():
    """Record one pass/fail line per acceptance criterion for the terminal summary."""

    def record(number, passed, detail):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def cycle5():
    """Directed 5-cycle with weight-10 arcs, the small demo graph."""
    b = GraphBuilder(5)
    for u in range(5):
        b.add_arc(u, (u + 1) % 5, 10)
    return b.build()


# Eight-vertex undirected graph whose unique shortest path from v1 to v8 is
# (v1, v2, v3, v8); vertex vi has index i-1.  Weights are hand-chosen.
EIGHT_EDGES = [
    (0, 1, 2), (0, 3, 5), (1, 2, 3), (1, 4, 7), (2, 7, 4), (3, 5, 3),
    (4, 7, 6), (5, 6, 4), (6, 7, 5), (3, 2, 6), (4, 6, 2),
]


def eight_vertex_graph():
    b = GraphBuilder(8)
    for u, v, w in EIGHT_EDGES:
        b.add_edge(u, v, w)
    return b.build()


@pytest.fixture
def cycle():
    return cycle5()


@pytest.fixture
def eight():
    return eight_vertex_graph()
