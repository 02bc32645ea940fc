"""Immutable simple undirected graphs and the tree queries built on them.

Vertices are dense integer ids ``0..n-1``. Edges are normalized tuples
``(a, b)`` with ``a < b`` and are always kept in lexicographic order, so
every "smallest" choice made downstream is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for domain errors raised on malformed or unsuitable graphs."""


class NotConnectedError(GraphError):
    pass


class OddOrderError(GraphError):
    pass


class NotATreeError(GraphError):
    pass


def normalize_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Build one with :func:`from_edges`; the constructor itself assumes its
    input is already normalized and sorted.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adj]

    def has_edge(self, a: int, b: int) -> bool:
        if a == b or not (0 <= a < self.n and 0 <= b < self.n):
            return False
        return b in self.adj[a]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def is_connected(self) -> bool:
        return self.n > 0 and len(components(self)) == 1

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={list(self.edges)})"


def _build(n: int, edges: Sequence[Edge]) -> Graph:
    """Trusted constructor: ``edges`` must be normalized, unique and sorted."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    for lst in nbrs:
        lst.sort()
    return Graph(n, tuple(edges), tuple(tuple(lst) for lst in nbrs))


def from_edges(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a normalized graph, rejecting loops, duplicates and bad ids."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    for pair in pairs:
        a, b = pair
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"vertex out of range in edge ({a}, {b}) for n={n}")
        if a == b:
            raise GraphError(f"loop edge at vertex {a}")
        e = normalize_edge(a, b)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
    return _build(n, sorted(seen))


@dataclass(frozen=True)
class Subgraph:
    """An induced subgraph together with the map back to host ids.

    ``ids[i]`` is the host vertex that local vertex ``i`` stands for; ids
    are increasing, so the relabeling preserves every lexicographic order.
    """

    graph: Graph
    ids: tuple[int, ...]

    def lift_edges(self, edges: Iterable[Edge]) -> list[Edge]:
        ids = self.ids
        return [(ids[a], ids[b]) for a, b in edges]


def induced_subgraph(g: Graph, s: Iterable[int]) -> Subgraph:
    ids = sorted(set(s))
    if not ids:
        raise GraphError("induced subgraph of an empty vertex set")
    if ids[0] < 0 or ids[-1] >= g.n:
        raise GraphError(f"vertex set not contained in 0..{g.n - 1}")
    local = {v: i for i, v in enumerate(ids)}
    edges = []
    nbrs: list[list[int]] = []
    for i, v in enumerate(ids):
        row = [local[u] for u in g.adj[v] if u in local]
        nbrs.append(row)
        edges.extend((i, j) for j in row if j > i)
    return Subgraph(Graph(len(ids), tuple(edges), tuple(map(tuple, nbrs))), tuple(ids))


def _components_of_adj(n: int, adj: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    label = [-1] * n
    out = []
    for s in range(n):
        if label[s] != -1:
            continue
        label[s] = s
        members = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if label[y] == -1:
                    label[y] = s
                    members.append(y)
                    queue.append(y)
        members.sort()
        out.append(tuple(members))
    return out


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components, each sorted, listed by smallest member."""
    return _components_of_adj(g.n, g.adj)


@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree of ``host`` rooted at ``root``.

    ``parent[root] == -1``. ``depth`` is the distance from the root in the
    tree, used to walk tree paths without a search.
    """

    host: Graph
    edges: tuple[Edge, ...]
    root: int
    parent: tuple[int, ...] = field(compare=False, repr=False)
    depth: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.host.n

    def as_graph(self) -> Graph:
        return _build(self.host.n, self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.host.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    @classmethod
    def from_edges(cls, host: Graph, edges: Iterable[Edge], root: int = 0) -> SpanningTree:
        """Wrap an edge set that must form a spanning tree of ``host``."""
        tree_edges = sorted({normalize_edge(a, b) for a, b in edges})
        n = host.n
        if len(tree_edges) != n - 1:
            raise NotATreeError(f"a spanning tree on {n} vertices needs {n - 1} edges, got {len(tree_edges)}")
        host_edges = host.edge_set()
        missing = [e for e in tree_edges if e not in host_edges]
        if missing:
            raise GraphError(f"tree edges not in host: {missing}")
        t = _build(n, tree_edges)
        parent, depth = _bfs_parents(t.adj, root)
        if -2 in parent:
            raise NotATreeError("edge set does not span the host")
        return cls(host, tuple(tree_edges), root, parent, depth)


def _bfs_parents(adj, root):
    n = len(adj)
    parent = [-2] * n
    depth = [0] * n
    parent[root] = -1
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if parent[y] == -2:
                parent[y] = x
                depth[y] = depth[x] + 1
                queue.append(y)
    return tuple(parent), tuple(depth)


def spanning_tree(g: Graph) -> SpanningTree:
    """Breadth-first spanning tree from vertex 0, neighbors in increasing order."""
    if g.n < 1:
        raise GraphError("spanning tree of an empty graph")
    parent, depth = _bfs_parents(g.adj, 0)
    if -2 in parent:
        raise NotConnectedError("graph is disconnected")
    edges = sorted(normalize_edge(v, p) for v, p in enumerate(parent) if p >= 0)
    return SpanningTree(g, tuple(edges), 0, parent, depth)


TreeLike = Union[SpanningTree, Graph]


def _tree_adj(t: TreeLike) -> tuple[tuple[int, ...], ...]:
    if isinstance(t, SpanningTree):
        return t.as_graph().adj
    if not t.is_tree():
        raise NotATreeError("input graph is not a tree")
    return t.adj


def branches_of(t: TreeLike, w: int) -> list[tuple[int, ...]]:
    """Components of the tree after deleting ``w``, listed by smallest member."""
    adj = _tree_adj(t)
    n = len(adj)
    if not 0 <= w < n:
        raise GraphError(f"vertex {w} not in tree")
    seen = [False] * n
    seen[w] = True
    out = []
    for c in adj[w]:
        seen[c] = True
        members = [c]
        stack = [c]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    members.append(y)
                    stack.append(y)
        members.sort()
        out.append(tuple(members))
    out.sort()
    return out


def tree_path(t: TreeLike, u: int, v: int) -> list[int]:
    """The unique simple path ``[u, ..., v]`` in a tree."""
    if isinstance(t, SpanningTree):
        n = t.n
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"path endpoints ({u}, {v}) not in tree")
        parent, depth = t.parent, t.depth
    else:
        adj = _tree_adj(t)
        n = len(adj)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"path endpoints ({u}, {v}) not in tree")
        parent, depth = _bfs_parents(adj, u)
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return left + right[::-1]
