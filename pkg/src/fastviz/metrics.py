"""Structural metrics over graph views and node-set similarity.

All metrics run on the unweighted skeleton (any edge with positive weight
counts once).  A metric that is not defined for the given graph returns
None rather than 0 or NaN, and serializes to an empty CSV field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .view import GraphView


@dataclass(frozen=True)
class MetricsRecord:
    time: float
    node_count: int
    avg_degree: float | None
    global_clustering: float | None
    avg_local_clustering: float | None
    assortativity: float | None


def _adjacency(view: GraphView) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {name: set() for name in view.nodes}
    for a, b, w in view.edges:
        if w > 0 and a != b:
            adj[a].add(b)
            adj[b].add(a)
    return adj


def average_degree(view: GraphView) -> float | None:
    """2|E|/|V| on the skeleton; None for an empty vertex set."""
    if not view.nodes:
        return None
    edges = sum(1 for _, _, w in view.edges if w > 0)
    return 2.0 * edges / len(view.nodes)


def global_clustering(view: GraphView) -> float | None:
    """Transitivity: 3 * triangles / connected triples; None without triples."""
    adj = _adjacency(view)
    triples = sum(k * (k - 1) // 2 for k in map(len, adj.values()))
    if triples == 0:
        return None
    closed = sum(len(adj[a] & adj[b]) for a, b, _ in view.edges)  # = 3 * triangles
    return closed / triples


def local_clustering(view: GraphView, node: str) -> float | None:
    """c_i = 2 e_i / (k_i (k_i - 1)); None when the node has degree < 2."""
    adj = _adjacency(view)
    neighbors = adj[node]
    k = len(neighbors)
    if k < 2:
        return None
    links = sum(len(adj[v] & neighbors) for v in neighbors) // 2
    return 2.0 * links / (k * (k - 1))


def avg_local_clustering(view: GraphView, *, include_low_degree: bool = False) -> float | None:
    """Mean local clustering coefficient.

    By default nodes of degree < 2 are excluded from the average (None when
    nothing is left).  With ``include_low_degree`` they count as 0 and the
    average is defined for any non-empty graph.
    """
    adj = _adjacency(view)
    values = []
    for neighbors in adj.values():
        k = len(neighbors)
        if k < 2:
            if include_low_degree:
                values.append(0.0)
            continue
        links = sum(len(adj[v] & neighbors) for v in neighbors) // 2
        values.append(2.0 * links / (k * (k - 1)))
    if not values:
        return None
    return math.fsum(values) / len(values)


def degree_assortativity(view: GraphView) -> float | None:
    """Pearson correlation of endpoint degrees over both edge orientations.

    Degrees are integers, so the correlation is computed in exact integer
    arithmetic with a single final division.  None when fewer than two
    edges exist or the degree variance is zero.
    """
    adj = _adjacency(view)
    edges = [(a, b) for a, b, w in view.edges if w > 0]
    if len(edges) < 2:
        return None
    deg = {name: len(nbrs) for name, nbrs in adj.items()}
    n = 2 * len(edges)
    sx = sxx = sxy = 0
    for a, b in edges:
        ka, kb = deg[a], deg[b]
        sx += ka + kb
        sxx += ka * ka + kb * kb
        sxy += 2 * ka * kb
    denom = n * sxx - sx * sx
    if denom == 0:
        return None
    return (n * sxy - sx * sx) / denom


def jaccard(set_a: set[str], set_b: set[str]) -> float:
    """|A intersect B| / |A union B|; 1.0 when both sets are empty."""
    if not set_a and not set_b:
        return 1.0
    return len(set_a & set_b) / len(set_a | set_b)


def compute_metrics(view: GraphView, time: float,
                    *, include_low_degree: bool = False) -> MetricsRecord:
    return MetricsRecord(
        time=time,
        node_count=len(view.nodes),
        avg_degree=average_degree(view),
        global_clustering=global_clustering(view),
        avg_local_clustering=avg_local_clustering(view, include_low_degree=include_low_degree),
        assortativity=degree_assortativity(view),
    )
