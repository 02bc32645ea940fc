import sys

import networkx as nx
import pytest
from hypothesis import strategies as st

from perfect_forest.graph import from_edges
from perfect_forest.generators import named_graph


@pytest.fixture
def k2():
    return named_graph("path", 2)


@pytest.fixture
def p4():
    return named_graph("path", 4)


@pytest.fixture
def c4():
    return named_graph("cycle", 4)


@pytest.fixture
def k4():
    return named_graph("complete", 4)


@pytest.fixture
def star4():
    return named_graph("star", 4)


@st.composite
def connected_graphs(draw, min_n=1, max_n=12, even=False):
    n = draw(st.integers(min_n, max_n))
    if even and n % 2:
        n = n + 1 if n < max_n else n - 1
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=min(len(pairs), 2 * n), unique=True))
        edges.update(extra)
    perm = draw(st.permutations(range(n)))
    return from_edges(n, [(perm[a], perm[b]) for a, b in edges])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_is_perfect_forest(g, forest_edges):
    """Independent restatement of the definition on top of networkx."""
    host = to_nx(g)
    f = nx.Graph()
    f.add_nodes_from(range(g.n))
    f.add_edges_from(forest_edges)
    if not all(host.has_edge(a, b) for a, b in f.edges):
        return False
    if not nx.is_forest(f):
        return False
    if any(d % 2 == 0 for _, d in f.degree):
        return False
    for comp in nx.connected_components(f):
        if host.subgraph(comp).number_of_edges() != f.subgraph(comp).number_of_edges():
            return False
    return True


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        status, text = results[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {text}")
