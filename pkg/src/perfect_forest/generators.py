"""Seeded random graphs and named families.

Randomness comes from :class:`random.Random` (Mersenne Twister) seeded
with the caller's integer, one private instance per call, so outputs are
a pure function of the arguments.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Edge, Graph, GraphError, _build, from_edges, normalize_edge

FAMILIES = ("path", "cycle", "complete", "star", "complete_bipartite", "random_tree", "random_connected")


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """The labeled tree on ``n`` vertices with Prüfer sequence ``seq``."""
    if n < 2:
        raise GraphError(f"a tree from a Prüfer sequence needs n >= 2, got {n}")
    if len(seq) != n - 2:
        raise GraphError(f"Prüfer sequence for n={n} must have length {n - 2}, got {len(seq)}")
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise GraphError(f"Prüfer entry {x} out of range")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append(normalize_edge(leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return _build(n, sorted(edges))


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform random labeled tree, via a random Prüfer sequence."""
    if n < 2:
        raise GraphError(f"random_tree needs n >= 2, got {n}")
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def random_connected(n: int, m: int, seed: int = 0) -> Graph:
    """``random_tree(n, seed)`` plus ``m - (n-1)`` uniformly chosen extra edges."""
    if n < 2:
        raise GraphError(f"random_connected needs n >= 2, got {n}")
    total = n * (n - 1) // 2
    if not n - 1 <= m <= total:
        raise GraphError(f"m={m} outside [{n - 1}, {total}] for n={n}")
    tree = random_tree(n, seed)
    # separate stream so the tree does not depend on m
    rng = random.Random(f"extra-edges:{seed}")
    taken = set(tree.edges)
    extra = m - (n - 1)
    free = total - (n - 1)
    if 2 * extra <= free:
        chosen: set[Edge] = set()
        while len(chosen) < extra:
            a, b = rng.randrange(n), rng.randrange(n)
            if a == b:
                continue
            e = normalize_edge(a, b)
            if e not in taken and e not in chosen:
                chosen.add(e)
    else:
        pool = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in taken]
        chosen = set(rng.sample(pool, extra))
    return _build(n, sorted(taken | chosen))


def random_odd_tree(n: int, seed: int = 0) -> Graph:
    """Random tree of even order with every degree odd.

    Grown from a single edge by repeatedly hanging two new leaves on a
    random existing vertex (parity of that vertex is unchanged), then
    randomly relabeled. Every all-odd tree can arise this way.
    """
    if n < 2 or n % 2:
        raise GraphError(f"all-odd trees need even n >= 2, got {n}")
    rng = random.Random(seed)
    edges = [(0, 1)]
    for c in range(2, n, 2):
        x = rng.randrange(c)
        edges += [(x, c), (x, c + 1)]
    perm = list(range(n))
    rng.shuffle(perm)
    return from_edges(n, [(perm[a], perm[b]) for a, b in edges])


def named_graph(family: str, n: int, k: Optional[int] = None) -> Graph:
    """Canonical labeled instance of a named family.

    Stars are centered at the highest id; ``complete_bipartite`` uses parts
    ``0..k-1`` and ``k..n-1``.
    """
    if family == "path":
        if n < 1:
            raise GraphError("path needs n >= 1")
        return _build(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return _build(n, sorted([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]))
    if family == "complete":
        if n < 1:
            raise GraphError("complete graph needs n >= 1")
        return _build(n, [(a, b) for a in range(n) for b in range(a + 1, n)])
    if family == "star":
        if n < 2:
            raise GraphError("star needs n >= 2")
        return _build(n, [(i, n - 1) for i in range(n - 1)])
    if family == "complete_bipartite":
        if k is None or not 1 <= k < n:
            raise GraphError(f"complete_bipartite needs 1 <= k < n, got k={k}, n={n}")
        return _build(n, [(a, b) for a in range(k) for b in range(k, n)])
    raise GraphError(f"unknown graph family {family!r}")


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    m: Optional[int] = None
    seed: int = 0
    k: Optional[int] = None

    def generate(self) -> Graph:
        if self.family not in FAMILIES:
            raise GraphError(f"unknown graph family {self.family!r}")
        if self.n < 1:
            raise GraphError(f"n must be >= 1, got {self.n}")
        if self.family == "random_tree":
            return random_tree(self.n, self.seed)
        if self.family == "random_connected":
            if self.m is None:
                raise GraphError("random_connected needs m")
            return random_connected(self.n, self.m, self.seed)
        return named_graph(self.family, self.n, self.k)
