"""Edge-list text input and forest output (edge list or DOT)."""

from __future__ import annotations

from .algorithms import Forest
from .graph import Graph, GraphError, from_edges


class ParseError(GraphError):
    pass


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` comments and blank lines are skipped.

    The vertex count is one more than the largest id mentioned.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2 or not all(t.isascii() and t.isdigit() for t in tokens):
            raise ParseError(f"line {lineno}: malformed token in {raw!r}, expected 'u v'")
        a, b = int(tokens[0]), int(tokens[1])
        if a == b:
            raise ParseError(f"line {lineno}: loop edge at vertex {a}")
        pairs.append((a, b))
    if not pairs:
        raise ParseError("empty input: no edges")
    n = 1 + max(max(p) for p in pairs)
    try:
        return from_edges(n, pairs)
    except ParseError:
        raise
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    return "".join(f"{a} {b}\n" for a, b in g.edges)


def write_forest(f: Forest, fmt: str = "edges") -> str:
    if fmt == "edges":
        lines = [f"{a} {b}" for a, b in f.edges]
        lines += ["# component: " + " ".join(map(str, comp)) for comp in f.components]
        return "\n".join(lines) + "\n"
    if fmt == "dot":
        inside = set(f.edges)
        lines = ["graph perfect_forest {"]
        lines += [f"  {v};" for v in range(f.host.n)]
        for a, b in f.host.edges:
            style = "" if (a, b) in inside else " [style=dashed]"
            lines.append(f"  {a} -- {b}{style};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown forest format {fmt!r}")
