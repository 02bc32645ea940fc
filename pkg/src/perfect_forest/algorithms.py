"""Perfect forest construction.

Two independent constructions are provided:

``perfect_forest_split``
    induction on the number of vertices. Either the graph is a tree whose
    degrees are all odd (and is its own answer), or a spanning tree with an
    even-degree vertex ``w`` exposes a branch of even order; the vertex set
    is cut into that branch and the rest, both connected and even.

``perfect_forest_edge``
    induction on the number of edges. Non-bridge edges are peeled off one at
    a time; when an edge is put back inside a single forest component, the
    unique cycle it closes is removed and the edge kept, which flips the
    parity of its two endpoints only.

Every tie is broken lexicographically, so both functions are deterministic.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graph import (
    Edge,
    Graph,
    GraphError,
    NotConnectedError,
    OddOrderError,
    SpanningTree,
    Subgraph,
    _components_of_adj,
    branches_of,
    induced_subgraph,
    normalize_edge,
    spanning_tree,
    tree_path,
)
from .verify import Verdict, verify_perfect_forest


class AllOddTreeError(GraphError):
    """The graph is a tree with every degree odd; it has no other spanning tree."""


@dataclass(frozen=True)
class Forest:
    host: Graph
    edges: tuple[Edge, ...]

    @cached_property
    def components(self) -> list[tuple[int, ...]]:
        adj: list[list[int]] = [[] for _ in range(self.host.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return _components_of_adj(self.host.n, adj)

    def degrees(self) -> list[int]:
        deg = [0] * self.host.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def verify(self) -> Verdict:
        return verify_perfect_forest(self.host, self.edges)

    @property
    def is_perfect(self) -> bool:
        return self.verify().valid


@dataclass(frozen=True)
class Split:
    """Vertex partition into two connected parts of even order."""

    part_a: tuple[int, ...]
    part_b: tuple[int, ...]


@dataclass(frozen=True)
class CyclePath:
    """Tree path ``vertices`` between the endpoints of the non-tree ``closing`` edge."""

    vertices: tuple[int, ...]
    closing: Edge

    def path_edges(self) -> list[Edge]:
        v = self.vertices
        return [normalize_edge(v[i], v[i + 1]) for i in range(len(v) - 1)]


class StarSignal(enum.Enum):
    """Returned by :func:`select_edge` when every edge is pendant."""

    STAR = "star"


STAR = StarSignal.STAR


def _require_connected_even(g: Graph) -> None:
    if g.n == 0 or g.n % 2:
        raise OddOrderError(f"odd number of vertices ({g.n})" if g.n else "empty graph")
    if not g.is_connected():
        raise NotConnectedError("graph is disconnected")


def _all_odd(degrees: Iterable[int]) -> bool:
    return all(d % 2 for d in degrees)


# --- first construction: induction on vertices ---------------------------


def even_spanning_tree(g: Graph) -> SpanningTree:
    """A spanning tree with at least two vertices of even tree-degree.

    The breadth-first tree is returned when it already has an even-degree
    vertex. Otherwise the smallest non-tree edge ``(u, v)`` is swapped in
    for the first edge on the tree path from ``u`` to ``v``, which makes
    both ``v`` and that neighbor of ``u`` even.
    """
    _require_connected_even(g)
    t = spanning_tree(g)
    if not _all_odd(t.degrees()):
        return t
    if g.m == g.n - 1:
        raise AllOddTreeError("graph is a tree with all degrees odd")
    in_tree = set(t.edges)
    u, v = next(e for e in g.edges if e not in in_tree)
    w = tree_path(t, u, v)[1]
    rotated = (in_tree - {normalize_edge(u, w)}) | {(u, v)}
    return SpanningTree.from_edges(g, rotated, root=t.root)


def choose_even_split(g: Graph) -> Split:
    if g.n == 2:
        raise GraphError("a graph on two vertices cannot be split")
    t = even_spanning_tree(g)
    deg = t.degrees()
    w = next(v for v in range(g.n) if deg[v] % 2 == 0)
    part_a = next(b for b in branches_of(t, w) if len(b) % 2 == 0)
    inside = set(part_a)
    part_b = tuple(v for v in range(g.n) if v not in inside)
    return Split(part_a, part_b)


def perfect_forest_split(g: Graph) -> Forest:
    """Perfect forest by repeated even splits, on an explicit work stack."""
    _require_connected_even(g)
    out: list[Edge] = []
    stack: list[Subgraph] = [Subgraph(g, tuple(range(g.n)))]
    while stack:
        sub = stack.pop()
        h = sub.graph
        # connected by construction, so m == n-1 means a tree
        if h.m == h.n - 1 and _all_odd(h.degrees()):
            out.extend(sub.lift_edges(h.edges))
            continue
        split = choose_even_split(h)
        for part in (split.part_b, split.part_a):
            child = induced_subgraph(h, part)
            stack.append(Subgraph(child.graph, tuple(sub.ids[i] for i in child.ids)))
    return Forest(g, tuple(sorted(out)))


# --- second construction: induction on edges ------------------------------


def bridges(g: Graph) -> set[Edge]:
    """All bridges, by an iterative low-link depth-first search."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: set[Edge] = set()
    clock = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = clock
        clock += 1
        stack = [(s, -1, iter(g.adj[s]))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = clock
                    clock += 1
                    stack.append((y, x, iter(g.adj[y])))
                    advanced = True
                    break
                low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[x])
                if low[x] > disc[parent]:
                    found.add(normalize_edge(parent, x))
    return found


def select_edge(g: Graph) -> Edge | StarSignal:
    """Edge to peel next, or ``STAR`` when no edge may be removed.

    Pendant edges are never chosen: cutting one leaves a single vertex,
    and growing that side back by the cut edge reproduces the whole graph.
    """
    if g.m > g.n - 1:
        cut = bridges(g)
        return next(e for e in g.edges if e not in cut)
    deg = g.degrees()
    for a, b in g.edges:
        if deg[a] >= 2 and deg[b] >= 2:
            return (a, b)
    return STAR


def _tree_path_in(adj, u: int, v: int) -> list[int]:
    """Path from u to v in the forest given by ``adj`` (mapping or list)."""
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if v not in parent:
        raise GraphError(f"{u} and {v} are not in the same tree")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def cycle_path(h: Iterable[Sequence[int]], e: Sequence[int]) -> CyclePath:
    """The tree path of ``h`` closed into a cycle by the extra edge ``e``."""
    adj: dict[int, list[int]] = {}
    for a, b in h:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    u, v = normalize_edge(*e)
    if u not in adj or v not in adj:
        raise GraphError(f"edge {(u, v)} has an endpoint outside the tree")
    return CyclePath(tuple(_tree_path_in(adj, u, v)), (u, v))


def reattach_cycle_fix(h: Iterable[Sequence[int]], e: Sequence[int], host: Graph) -> tuple[Edge, ...]:
    """Put ``e`` back into the odd tree ``h`` and drop the cycle it closes.

    ``h`` must be a tree with all degrees odd, ``e`` a host edge joining two
    of its vertices, and the host must have no edges inside ``V(h)`` other
    than ``E(h)`` and ``e``. Returns the edges of the repaired forest,
    sorted; its components are all induced in ``host``.
    """
    tree = sorted({normalize_edge(a, b) for a, b in h})
    e = normalize_edge(*e)
    adj: dict[int, list[int]] = {}
    for a, b in tree:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if e[0] not in adj or e[1] not in adj:
        raise GraphError(f"edge {e} has an endpoint outside the tree")
    even = sorted(x for x, nb in adj.items() if len(nb) % 2 == 0)
    if even:
        raise GraphError(f"tree has even-degree vertices {even}")
    if len(tree) != len(adj) - 1 or len(_components_of_adj_map(adj)) != 1:
        raise GraphError("h is not a tree")
    if e in set(tree):
        raise GraphError(f"edge {e} already belongs to the tree")
    sub = induced_subgraph(host, adj)
    expected = set(tree) | {e}
    actual = set(sub.lift_edges(sub.graph.edges))
    if actual != expected:
        raise GraphError(
            f"host edges inside the tree are not exactly the tree plus {e}: "
            f"extra {sorted(actual - expected)}, missing {sorted(expected - actual)}"
        )
    cyc = CyclePath(tuple(_tree_path_in(adj, *e)), e)
    drop = set(cyc.path_edges())
    return tuple(sorted([x for x in tree if x not in drop] + [e]))


def _components_of_adj_map(adj: dict[int, list[int]]) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for s in adj:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(comp)
    return out


def _tree_perfect_forest(tadj: Sequence[Sequence[int]], n: int) -> set[Edge]:
    """Edge induction restricted to a tree: cut at the smallest non-pendant edge.

    Subproblems are vertex sets of subtrees, kept in host ids; the relabeled
    form would order edges identically.
    """
    out: set[Edge] = set()
    stack = [list(range(n))]
    while stack:
        verts = stack.pop()
        inside = set(verts)
        deg = {x: sum(1 for y in tadj[x] if y in inside) for x in verts}
        cut = None
        for a in verts:
            if deg[a] < 2:
                continue
            for b in tadj[a]:
                if b > a and b in inside and deg[b] >= 2:
                    cut = (a, b)
                    break
            if cut:
                break
        if cut is None:
            out.update((a, b) for a in verts for b in tadj[a] if b > a and b in inside)
            continue
        a, b = cut
        side = {a}
        todo = [a]
        while todo:
            x = todo.pop()
            for y in tadj[x]:
                if y in inside and y not in side and not (x == a and y == b):
                    side.add(y)
                    todo.append(y)
        one = sorted(side)
        two = [x for x in verts if x not in side]
        if len(one) % 2 == 0:
            stack += [two, one]
        else:
            stack += [sorted(two + [a]), sorted(one + [b])]
    return out


def perfect_forest_edge(g: Graph) -> Forest:
    """Perfect forest by edge induction.

    Repeatedly deleting the smallest non-bridge edge ends in the spanning
    tree that Kruskal's method picks when scanning edges from largest to
    smallest, and the deleted edges come off in increasing order. So the
    peeling is done in one union-find pass, the tree is solved by cutting
    edges, and the peeled edges are put back largest first, each followed
    by a cycle repair when it lands inside one component.
    """
    _require_connected_even(g)
    n = g.n
    root = list(range(n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    tadj: list[list[int]] = [[] for _ in range(n)]
    peeled: list[Edge] = []
    for a, b in reversed(g.edges):
        ra, rb = find(a), find(b)
        if ra == rb:
            peeled.append((a, b))
        else:
            root[ra] = rb
            tadj[a].append(b)
            tadj[b].append(a)
    for lst in tadj:
        lst.sort()

    fadj: list[set[int]] = [set() for _ in range(n)]
    for a, b in _tree_perfect_forest(tadj, n):
        fadj[a].add(b)
        fadj[b].add(a)

    label = [-1] * n
    members: dict[int, list[int]] = {}
    for i, comp in enumerate(_components_of_adj(n, fadj)):
        members[i] = list(comp)
        for x in comp:
            label[x] = i
    fresh = len(members)

    # peeled is in decreasing order: the reverse of the deletion order
    for u, v in peeled:
        if label[u] != label[v]:
            continue
        path = _tree_path_in(fadj, u, v)
        for x, y in zip(path, path[1:]):
            fadj[x].discard(y)
            fadj[y].discard(x)
        fadj[u].add(v)
        fadj[v].add(u)
        old = members.pop(label[u])
        for x in old:
            label[x] = -1
        for s in old:
            if label[s] != -1:
                continue
            label[s] = fresh
            comp = [s]
            todo = [s]
            while todo:
                x = todo.pop()
                for y in fadj[x]:
                    if label[y] == -1:
                        label[y] = fresh
                        comp.append(y)
                        todo.append(y)
            members[fresh] = comp
            fresh += 1

    edges = sorted((a, b) for a in range(n) for b in fadj[a] if a < b)
    return Forest(g, tuple(edges))
