from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from xbcentrality.datasets import figure1, karate_club, random_connected_graph
from xbcentrality.graph import Graph


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_small_graph(rng: np.random.Generator, n_lo: int = 5, n_hi: int = 12) -> Graph:
    """Seeded connected graph with varied density."""
    n = int(rng.integers(n_lo, n_hi + 1))
    density = float(rng.uniform(0.0, 1.0))
    max_extra = n * (n - 1) // 2 - (n - 1)
    m = (n - 1) + int(round(density * 0.5 * max_extra))
    return random_connected_graph(n, m, int(rng.integers(0, 2**32)))


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    edges = [(i, draw(st.integers(0, i - 1))) for i in range(1, n)]
    others = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = draw(st.lists(st.sampled_from(others), max_size=2 * n)) if others else []
    perm = draw(st.permutations(range(n)))
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges + extra])


@st.composite
def graphs_with_set(draw, min_n: int = 3, max_n: int = 9, max_k: int = 4):
    g = draw(connected_graphs(min_n, max_n))
    k = draw(st.integers(1, min(max_k, g.n - 2)))
    a = draw(st.lists(st.integers(0, g.n - 1), min_size=k, max_size=k, unique=True))
    return g, tuple(sorted(a))


@pytest.fixture
def fig1() -> Graph:
    return figure1()


@pytest.fixture(scope="session")
def karate() -> Graph:
    return karate_club()


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


def fig1_ids(g: Graph, *labels: int) -> tuple[int, ...]:
    return tuple(g.index_of(x) for x in labels)


_acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
