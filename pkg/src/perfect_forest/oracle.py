"""Brute-force ground truth for small graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .algorithms import perfect_forest_edge, perfect_forest_split
from .graph import Edge, Graph, GraphError, _build, components
from .verify import verify_perfect_forest

MAX_ORACLE_EDGES = 24


@dataclass
class OracleReport:
    count: int
    subsets_scanned: int
    forests: list[tuple[Edge, ...]] | None = None

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "subsets_scanned": self.subsets_scanned,
            "forests": None if self.forests is None else [[list(e) for e in f] for f in self.forests],
        }


def _odd_degree_masks(g: Graph) -> np.ndarray:
    """Indices of edge subsets (bit i = edge i) giving every vertex odd degree.

    The degree-parity vector of a subset is the XOR of its edges' incidence
    vectors; it is tabulated for all ``2**m`` subsets by doubling.
    """
    full = (1 << g.n) - 1
    parity = np.zeros(1, dtype=np.int64)
    for a, b in g.edges:
        parity = np.concatenate([parity, parity ^ ((1 << a) | (1 << b))])
    return np.flatnonzero(parity == full)


def enumerate_perfect_forests(g: Graph, cap: int | None = 1000) -> OracleReport:
    """Scan every edge subset and keep those that verify as perfect forests.

    A subset with an even-degree vertex can never verify, so only subsets
    passing the parity table go through the full verifier. ``forests`` is
    listed, in lexicographic order, only when ``count <= cap``
    (``cap=None`` means no limit).
    """
    if g.m > MAX_ORACLE_EDGES:
        raise GraphError(f"oracle limited to {MAX_ORACLE_EDGES} edges, graph has {g.m}")
    edges = g.edges
    found = []
    if g.n <= 62:
        candidates = _odd_degree_masks(g).tolist()
    else:
        # 24 edges touch at most 48 vertices, so nothing can span this graph
        candidates = []
    for mask in candidates:
        subset = tuple(edges[i] for i in range(g.m) if mask >> i & 1)
        if verify_perfect_forest(g, subset).valid:
            found.append(subset)
    found.sort()
    listed = found if cap is None or len(found) <= cap else None
    return OracleReport(len(found), 1 << g.m, listed)


@dataclass
class SelfCheckSummary:
    n: int
    connected: int
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.checked == self.connected


def all_connected_graphs(n: int):
    """Every connected labeled graph on ``n`` vertices, by edge-subset bitmask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = _build(n, edges)
        if len(components(g)) == 1:
            yield g


def exhaustive_selfcheck(n: int) -> SelfCheckSummary:
    """Check the oracle and both algorithms on every connected graph of order ``n``."""
    if n not in (2, 4, 6):
        raise GraphError(f"self-check supports n in {{2, 4, 6}}, got {n}")
    summary = SelfCheckSummary(n, 0, 0)
    for g in all_connected_graphs(n):
        summary.connected += 1
        report = enumerate_perfect_forests(g, cap=None)
        if report.count < 1:
            summary.failures.append(f"{g}: oracle found no perfect forest")
            continue
        known = set(report.forests)
        for name, algo in (("split", perfect_forest_split), ("edge", perfect_forest_edge)):
            try:
                forest = algo(g)
            except GraphError as exc:
                summary.failures.append(f"{g}: {name} raised {exc}")
                continue
            if not forest.verify().valid:
                summary.failures.append(f"{g}: {name} output {forest.edges} fails verification")
            elif forest.edges not in known:
                summary.failures.append(f"{g}: {name} output {forest.edges} missing from oracle set")
        summary.checked += 1
    return summary
