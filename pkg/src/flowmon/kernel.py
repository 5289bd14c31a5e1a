"""Kernel graph: the contraction that exposes a monitor set's structure.

For a monitor set M with exposed bridges B, contract every connected
component of G - M - B to one vertex; each edge of M or B survives as one
kernel edge with its weight preserved (loops and parallels arise
naturally). The kernel is the object the approximation analysis counts
on: its edge count obeys |E| <= k + |V| - 1, and the B-edges are exactly
its bridges and form a forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import EdgeRecord, Graph, bridge_ids, component_labels, make_mask


@dataclass(frozen=True)
class KernelGraph:
    """graph: the contracted multigraph. component_of: original vertex ->
    kernel vertex. represents: kernel edge id -> original edge id."""

    graph: Graph
    component_of: tuple[int, ...]
    represents: tuple[int, ...]


def kernel_graph(g: Graph, monitors: Iterable[int]) -> KernelGraph:
    """Contract the components of G - M - bridges(G - M).

    Kernel vertices are numbered by each component's lowest original
    vertex, so output is canonical; kernel edges appear in original edge
    id order.
    """
    mon = frozenset(monitors)
    g.check_edge_ids(mon)
    mask = make_mask(g, mon)
    extra = frozenset(bridge_ids(g, mask))
    for e in extra:
        mask[e] = 1
    labels = component_labels(g, mask)
    ncomp = max(labels) + 1 if labels else 0
    kept = sorted(mon | extra)
    records = [
        EdgeRecord(i, labels[g.edges[orig].u], labels[g.edges[orig].v], g.edges[orig].weight)
        for i, orig in enumerate(kept)
    ]
    return KernelGraph(Graph(ncomp, records), tuple(labels), tuple(kept))


def check_kernel_bound(kg: KernelGraph, k: int) -> bool:
    """Edge-count bound |E| <= k + |V| - 1; holds for every kernel built
    from at most k monitors."""
    return len(kg.graph.edges) <= k + kg.graph.vertex_count - 1
