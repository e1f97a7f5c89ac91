"""Planarity and outerplanarity recognition."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph import Graph, complete, join


@dataclass(frozen=True)
class PlanarityVerdict:
    """Boolean verdict plus a best-effort witness tag (not a certificate)."""

    planar: bool
    witness: str

    def __bool__(self) -> bool:
        return self.planar


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def is_planar(g: Graph) -> PlanarityVerdict:
    """Left-right planarity test."""
    ok, _ = nx.check_planarity(to_networkx(g), counterexample=False)
    return PlanarityVerdict(ok, "lr-embedding" if ok else "lr-obstruction")


def is_outerplanar(g: Graph) -> PlanarityVerdict:
    """g is outerplanar iff K1 v g is planar."""
    verdict = is_planar(join(complete(1), g))
    tag = "apex-" + verdict.witness
    return PlanarityVerdict(verdict.planar, tag)


def quick_reject_outerplanar(g: Graph) -> bool | None:
    """False if the edge bound e <= 2n-3 already rules out outerplanarity,
    None when the cheap test is inconclusive."""
    if g.n >= 2 and g.edge_count() > 2 * g.n - 3:
        return False
    return None


def quick_reject_planar(g: Graph) -> bool | None:
    """False if the edge bound e <= 3n-6 already rules out planarity."""
    if g.n >= 3 and g.edge_count() > 3 * g.n - 6:
        return False
    return None
