"""spexlab: spectral-extremal graph families, detectors, and search."""

from .graph import (
    Graph,
    MAX_VERTICES,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    edge_list_text,
    empty_graph,
    from_edges,
    join,
    parse_edge_list,
    path,
    star,
)
from .graph6 import Graph6Error, graph6_decode, graph6_encode

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "MAX_VERTICES",
    "Graph6Error",
    "complete",
    "complete_bipartite",
    "cycle",
    "disjoint_union",
    "edge_list_text",
    "empty_graph",
    "from_edges",
    "graph6_decode",
    "graph6_encode",
    "join",
    "parse_edge_list",
    "path",
    "star",
    "__version__",
]
