"""General lower bounds on the hypercompetition number."""

from __future__ import annotations

from dataclasses import dataclass

from .hypercore import Hypergraph, degrees


@dataclass(frozen=True)
class BoundReport:
    size_bound: int  # unclamped; negative means the bound is vacuous
    degree_bound: int
    best: int


def lower_bound_size(h: Hypergraph) -> int:
    """|E| - |V| + smallest edge size, unclamped. Edge-free input gives 0."""
    if not h.edges:
        return 0
    return h.t - h.n + min(len(e) for e in h.edges)


def lower_bound_degree(h: Hypergraph) -> int:
    """Minimum vertex degree (0 when some vertex is isolated or V is empty)."""
    if not h.vertices:
        return 0
    return min(degrees(h).values())


def best_lower_bound(h: Hypergraph) -> BoundReport:
    size = lower_bound_size(h)
    deg = lower_bound_degree(h)
    return BoundReport(size, deg, max(0, size, deg))
