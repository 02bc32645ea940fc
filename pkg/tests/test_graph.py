import networkx as nx
import pytest
from hypothesis import given

from conftest import connected_graphs, to_nx
from perfect_forest.graph import (
    GraphError,
    NotATreeError,
    NotConnectedError,
    SpanningTree,
    branches_of,
    components,
    from_edges,
    induced_subgraph,
    spanning_tree,
    tree_path,
)
from perfect_forest.generators import named_graph


class TestFromEdges:
    def test_k2(self):
        g = from_edges(2, [(0, 1)])
        assert (g.n, g.m) == (2, 1)

    def test_p4_degrees(self):
        g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert g.degrees() == [1, 2, 2, 1]

    def test_edges_normalized_and_sorted(self):
        g = from_edges(4, [(3, 2), (1, 0), (2, 0)])
        assert g.edges == ((0, 1), (0, 2), (2, 3))
        assert g.adj[0] == (1, 2)

    @pytest.mark.parametrize("n, pairs, msg", [
        (2, [(0, 0)], "loop"),
        (3, [(0, 1), (1, 0)], "duplicate"),
        (2, [(0, 2)], "out of range"),
    ])
    def test_rejects(self, n, pairs, msg):
        with pytest.raises(GraphError, match=msg):
            from_edges(n, pairs)


class TestInducedSubgraph:
    def test_adjacent_pair_of_c4(self, c4):
        sub = induced_subgraph(c4, {1, 2})
        assert sub.graph.edges == ((0, 1),)
        assert sub.ids == (1, 2)
        assert sub.lift_edges(sub.graph.edges) == [(1, 2)]

    def test_triangle_in_k4(self, k4):
        sub = induced_subgraph(k4, {0, 1, 2})
        assert sub.graph.edges == ((0, 1), (0, 2), (1, 2))

    def test_non_adjacent_pair(self, p4):
        sub = induced_subgraph(p4, {0, 2})
        assert sub.graph.n == 2 and sub.graph.m == 0

    def test_empty_rejected(self, p4):
        with pytest.raises(GraphError):
            induced_subgraph(p4, [])

    @given(connected_graphs())
    def test_whole_vertex_set_is_identity(self, g):
        sub = induced_subgraph(g, range(g.n))
        assert sub.graph == g
        assert sub.graph.adj == g.adj


class TestComponents:
    def test_two_edges(self):
        assert components(from_edges(4, [(0, 1), (2, 3)])) == [(0, 1), (2, 3)]

    def test_connected(self, c4):
        assert components(c4) == [(0, 1, 2, 3)]

    def test_edgeless(self):
        assert components(from_edges(3, [])) == [(0,), (1,), (2,)]

    @given(connected_graphs(max_n=10))
    def test_partition_matches_networkx(self, g):
        # drop every third edge to get disconnected inputs too
        h = from_edges(g.n, g.edges[::3])
        comps = components(h)
        flat = [v for c in comps for v in c]
        assert sorted(flat) == list(range(h.n))
        assert sorted(map(tuple, map(sorted, nx.connected_components(to_nx(h))))) == comps


class TestSpanningTree:
    def test_k2(self):
        assert spanning_tree(named_graph("path", 2)).edges == ((0, 1),)

    def test_c4_breadth_first_trace(self, c4):
        # from 0: neighbors 1, 3; then 1 reaches 2
        assert spanning_tree(c4).edges == ((0, 1), (0, 3), (1, 2))

    def test_disconnected(self):
        with pytest.raises(NotConnectedError):
            spanning_tree(from_edges(4, [(0, 1), (2, 3)]))

    @given(connected_graphs())
    def test_is_spanning_tree(self, g):
        t = spanning_tree(g)
        assert len(t.edges) == g.n - 1
        assert set(t.edges) <= g.edge_set()
        assert len(components(t.as_graph())) == 1

    @given(connected_graphs())
    def test_deterministic(self, g):
        assert spanning_tree(g) == spanning_tree(from_edges(g.n, list(g.edges)))

    def test_from_edges_rejects_cycle(self, c4):
        with pytest.raises(NotATreeError):
            SpanningTree.from_edges(c4, [(0, 1), (1, 2), (2, 3), (0, 3)])


class TestBranches:
    def test_path_inner(self, p4):
        assert branches_of(p4, 1) == [(0,), (2, 3)]

    def test_star_center(self):
        star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert branches_of(star, 0) == [(1,), (2,), (3,)]

    def test_leaf(self, p4):
        assert branches_of(p4, 0) == [(1, 2, 3)]

    def test_not_a_tree(self, c4):
        with pytest.raises(NotATreeError):
            branches_of(c4, 0)

    @given(connected_graphs())
    def test_branch_count_and_sizes(self, g):
        t = spanning_tree(g)
        deg = t.degrees()
        for w in range(g.n):
            parts = branches_of(t, w)
            assert len(parts) == deg[w]
            assert sum(map(len, parts)) == g.n - 1
            assert sorted(v for p in parts for v in p) == [v for v in range(g.n) if v != w]


class TestTreePath:
    def test_path(self, p4):
        assert tree_path(p4, 0, 3) == [0, 1, 2, 3]

    def test_through_center(self):
        star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert tree_path(star, 1, 2) == [1, 0, 2]

    def test_identity(self, p4):
        assert tree_path(p4, 2, 2) == [2]

    def test_absent_vertex(self, p4):
        with pytest.raises(GraphError):
            tree_path(p4, 0, 9)

    @given(connected_graphs(min_n=2))
    def test_matches_networkx(self, g):
        t = spanning_tree(g)
        tg = to_nx(t.as_graph())
        for u in range(0, g.n, 3):
            for v in range(g.n):
                path = tree_path(t, u, v)
                assert path == nx.shortest_path(tg, u, v)
                assert all(tg.has_edge(a, b) for a, b in zip(path, path[1:]))
                assert tree_path(t.as_graph(), u, v) == path
