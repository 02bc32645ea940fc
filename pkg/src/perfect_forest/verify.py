"""Definition-level checker for candidate perfect forests."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, _components_of_adj


class Rule(str, enum.Enum):
    NOT_SUBGRAPH = "NotSubgraph"
    HAS_CYCLE = "HasCycle"
    EVEN_DEGREE = "EvenDegree"
    NOT_SPANNING = "NotSpanning"
    NOT_INDUCED = "NotInduced"

    def __str__(self) -> str:
        return self.value


@dataclass
class Verdict:
    """Outcome of :func:`verify_perfect_forest`.

    ``violations`` holds ``(rule, witness)`` pairs where the witness is a
    vertex, an edge, or a component (sorted vertex tuple).
    """

    violations: list[tuple[Rule, object]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def rules(self) -> set[Rule]:
        return {rule for rule, _ in self.violations}

    def witnesses(self, rule: Rule) -> list:
        return [w for r, w in self.violations if r is rule]

    def __bool__(self) -> bool:
        return self.valid


def verify_perfect_forest(g: Graph, f: Iterable[Sequence[int]]) -> Verdict:
    """Check ``f`` against every clause of the perfect-forest definition.

    All violations are collected. Edges that are not edges of ``g`` (or are
    not even well-formed pairs) are reported as ``NotSubgraph`` and ignored
    by the remaining checks.
    """
    verdict = Verdict()
    bad = verdict.violations
    n = g.n
    host = g.edge_set()

    kept: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for item in f:
        try:
            a, b = item
            a, b = int(a), int(b)
        except (TypeError, ValueError):
            bad.append((Rule.NOT_SUBGRAPH, item))
            continue
        e = (a, b) if a < b else (b, a)
        if e not in host:
            bad.append((Rule.NOT_SUBGRAPH, e))
        elif e not in seen:
            seen.add(e)
            kept.append(e)
    kept.sort()

    # union-find for acyclicity; the first edge closing a cycle is the witness
    root = list(range(n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    deg = [0] * n
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in kept:
        ra, rb = find(a), find(b)
        if ra == rb:
            bad.append((Rule.HAS_CYCLE, (a, b)))
        else:
            root[ra] = rb
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)

    for v in range(n):
        if deg[v] % 2 == 0:
            bad.append((Rule.EVEN_DEGREE, v))
    for v in range(n):
        if deg[v] == 0:
            bad.append((Rule.NOT_SPANNING, v))

    comps = _components_of_adj(n, adj)
    label = [0] * n
    for i, comp in enumerate(comps):
        for v in comp:
            label[v] = i
    host_inside = [0] * len(comps)
    for a, b in g.edges:
        if label[a] == label[b]:
            host_inside[label[a]] += 1
    forest_inside = [0] * len(comps)
    for a, _ in kept:
        forest_inside[label[a]] += 1
    # kept is a subset of the host edges, so equal counts mean equal sets
    for i, comp in enumerate(comps):
        if host_inside[i] != forest_inside[i]:
            bad.append((Rule.NOT_INDUCED, comp))
    return verdict
