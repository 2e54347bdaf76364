"""Immutable weighted-graph snapshots shared by the filters, metrics and update generation."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping


@dataclass(frozen=True)
class GraphView:
    """Frozen view of an undirected weighted graph.

    ``nodes`` maps node name to strength.  ``edges`` holds one entry per
    undirected edge as ``(a, b, weight)`` with ``a < b`` and weight > 0.
    Views are decoupled from the structure they were taken from: later
    mutations of the source never show through.
    """

    nodes: Mapping[str, float]
    edges: tuple[tuple[str, str, float], ...]

    @staticmethod
    def build(strengths: Mapping[str, float],
              edges: Iterable[tuple[str, str, float]]) -> "GraphView":
        ordered = {name: float(strengths[name]) for name in sorted(strengths)}
        return GraphView(MappingProxyType(ordered), tuple(sorted(edges)))

    @staticmethod
    def empty() -> "GraphView":
        return GraphView(MappingProxyType({}), ())

    def node_set(self) -> set[str]:
        return set(self.nodes)


def top_subgraph(view: GraphView, n: int) -> GraphView:
    """Induced subgraph on the ``n`` strongest nodes (ties broken by name).

    Returns the whole view when it has fewer than ``n`` nodes.  Node
    strengths are carried over unchanged, not recomputed on the subgraph.
    """
    if n < 0:
        raise ValueError("subgraph size must be non-negative")
    if len(view.nodes) <= n:
        return view
    ranked = sorted(view.nodes, key=lambda name: (-view.nodes[name], name))
    keep = set(ranked[:n])
    strengths = {name: view.nodes[name] for name in keep}
    edges = [e for e in view.edges if e[0] in keep and e[1] in keep]
    return GraphView.build(strengths, edges)


def threshold_edges(view: GraphView, minimum_weight: float) -> GraphView:
    """Drop every edge whose weight is not strictly above ``minimum_weight``.

    All nodes are kept, including ones isolated by the thresholding.
    """
    edges = [e for e in view.edges if e[2] > minimum_weight]
    return GraphView.build(dict(view.nodes), edges)
