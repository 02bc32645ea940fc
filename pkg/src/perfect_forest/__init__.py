"""Perfect forests of connected even-order graphs."""

from .algorithms import (
    STAR,
    AllOddTreeError,
    CyclePath,
    Forest,
    Split,
    StarSignal,
    bridges,
    choose_even_split,
    cycle_path,
    even_spanning_tree,
    perfect_forest_edge,
    perfect_forest_split,
    reattach_cycle_fix,
    select_edge,
)
from .graph import (
    Graph,
    GraphError,
    NotATreeError,
    NotConnectedError,
    OddOrderError,
    SpanningTree,
    Subgraph,
    branches_of,
    components,
    from_edges,
    induced_subgraph,
    spanning_tree,
    tree_path,
)
from .oracle import OracleReport, enumerate_perfect_forests, exhaustive_selfcheck
from .verify import Rule, Verdict, verify_perfect_forest

__version__ = "0.1.0"
