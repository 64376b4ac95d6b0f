"""Initial segments of the dominance order on one connected component."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from schubert_normality.coinvariants.lattice import CoinvariantClass, CoinvariantLattice, Key
from schubert_normality.dominance.order import (
    DEFAULT_HEIGHT_CAP,
    DEFAULT_MAX_NODES,
    height,
    minuscule_of_component,
    order_graph,
    support_label,
    up_set,
)

logger = logging.getLogger(__name__)


def format_support(indices) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(indices)) + "}"


@dataclass(frozen=True)
class HasseEdge:
    source: int
    target: int
    support: frozenset[int]

    @property
    def label(self) -> str:
        return format_support(self.support)


@dataclass(frozen=True)
class HasseSegment:
    lattice: CoinvariantLattice
    component: Key
    height_cap: int
    nodes: tuple[CoinvariantClass, ...]
    edges: tuple[HasseEdge, ...]

    @property
    def component_index(self):
        return self.lattice.component_index(self.component)

    def names(self) -> list[str]:
        return [n.name for n in self.nodes]

    def edge_names(self) -> set[tuple[str, str, str]]:
        return {(self.nodes[e.source].name, self.nodes[e.target].name, e.label) for e in self.edges}

    def to_dict(self) -> dict:
        return {
            "group": self.lattice.group.label(),
            "component": self.component_index,
            "height_cap": self.height_cap,
            "nodes": [{"name": n.name, "height": height(n), "weight": list(n.weight)} for n in self.nodes],
            "edges": [
                {"source": self.nodes[e.source].name, "target": self.nodes[e.target].name, "support": e.label}
                for e in self.edges
            ],
        }


def hasse_segment(
    lat: CoinvariantLattice,
    component: Key,
    height_cap: int = DEFAULT_HEIGHT_CAP,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> HasseSegment:
    """Dominant classes of a component up to ``height_cap`` with their covering edges.

    Nodes are ordered by (height, weight); edges by (source, target) in that
    order. An interval never leaves the segment because every element of it
    is lower than its top, so the covers found here are covers in the full order.
    """
    bottom = minuscule_of_component(lat, component)
    if height(bottom) > height_cap:
        return HasseSegment(lat, component, height_cap, (), ())
    nodes = up_set(bottom, height_cap, max_nodes)
    graph = order_graph(nodes)
    edges = tuple(
        HasseEdge(a, b, support_label(nodes[a], nodes[b]))
        for a, b in sorted(graph.edges())
    )
    logger.debug("hasse segment of %s, component %s: %d nodes, %d edges",
                 lat.group.label(), component, len(nodes), len(edges))
    return HasseSegment(lat, component, height_cap, tuple(nodes), edges)
