"""Literal recursive edge induction, for cross-checking the fast path.

Follows the recursive procedure step by step: pick the next edge (smallest
non-bridge, else smallest non-pendant, else the star base case), recurse
on relabeled subproblems, lift results back. Bridges come from networkx.
Only suitable for small graphs.
"""

import networkx as nx


def _relabel(vertices, edges):
    ids = sorted(vertices)
    local = {v: i for i, v in enumerate(ids)}
    inside = [(local[a], local[b]) for a, b in edges if a in local and b in local]
    return ids, sorted(inside)


def _select(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    cut = {tuple(sorted(e)) for e in nx.bridges(g)}
    for e in edges:
        if e not in cut:
            return e
    deg = dict(g.degree)
    for a, b in edges:
        if deg[a] >= 2 and deg[b] >= 2:
            return (a, b)
    return None


def _path(edges, u, v):
    t = nx.Graph(edges)
    return nx.shortest_path(t, u, v)


def reference_edge(n, edges):
    edges = sorted(tuple(sorted(e)) for e in edges)
    e = _select(n, edges)
    if e is None:
        return set(edges)
    rest = [x for x in edges if x != e]
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(rest)
    if not nx.is_connected(g):
        u, v = e
        side_u = nx.node_connected_component(g, u)
        side_v = set(range(n)) - side_u
        if len(side_u) % 2 == 0:
            parts = [side_u, side_v]
        else:
            parts = [side_u | {v}, side_v | {u}]
        out = set()
        for part in parts:
            ids, sub = _relabel(part, edges)
            out |= {(ids[a], ids[b]) for a, b in reference_edge(len(ids), sub)}
        return out
    forest = reference_edge(n, rest)
    f = nx.Graph()
    f.add_nodes_from(range(n))
    f.add_edges_from(forest)
    u, v = e
    if not nx.has_path(f, u, v):
        return forest
    path = _path(list(f.subgraph(nx.node_connected_component(f, u)).edges), u, v)
    drop = {tuple(sorted(p)) for p in zip(path, path[1:])}
    return (forest - drop) | {e}
