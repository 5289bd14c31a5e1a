"""Weighted undirected multigraph and its connectivity primitives.

Parallel edges and self-loops are first class: an edge is identified by
its dense integer id, never by its endpoints. Graphs are immutable once
built, and every "what happens without these edges" question is answered
by traversing with a removal mask rather than copying the graph. That
keeps candidate evaluation in the greedy solvers allocation-light.

The adjacency lists deliberately omit self-loops: a loop never affects
connectivity, components, or bridges, so traversals can skip it. Code
that needs loops (weights, kernel construction, flow sums) iterates the
edge list directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ValidationError
from .weights import Weight


@dataclass(frozen=True, slots=True)
class EdgeRecord:
    id: int
    u: int
    v: int
    weight: Weight

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


class Graph:
    """Immutable multigraph; vertex indices are 0..vertex_count-1."""

    __slots__ = ("vertex_count", "edges", "adjacency", "weights_micros", "_zero_mask")

    def __init__(self, vertex_count: int, edges: Iterable[EdgeRecord]):
        edges = tuple(edges)
        if vertex_count < 0:
            raise ValidationError("vertex_count must be non-negative")
        adj: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for i, e in enumerate(edges):
            if e.id != i:
                raise ValidationError(f"edge id {e.id} must equal its position {i}")
            if not (0 <= e.u < vertex_count and 0 <= e.v < vertex_count):
                raise ValidationError(f"edge {i} endpoints ({e.u},{e.v}) out of range")
            if e.u != e.v:
                adj[e.u].append((e.v, i))
                adj[e.v].append((e.u, i))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "weights_micros", tuple(e.weight.micros for e in edges))
        object.__setattr__(self, "_zero_mask", bytes(len(edges)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def build(cls, vertex_count: int, edges: Iterable[tuple]) -> "Graph":
        """Build from (u, v) or (u, v, w) tuples.

        A weight may be a Weight, a whole number of units, or a decimal
        string; bare (u, v) pairs get unit weight.
        """
        records = []
        for i, item in enumerate(edges):
            if len(item) == 2:
                u, v = item
                w = Weight.from_units(1)
            else:
                u, v, w = item
                if isinstance(w, int):
                    w = Weight.from_units(w)
                elif isinstance(w, str):
                    w = Weight.parse(w)
            records.append(EdgeRecord(i, u, v, w))
        return cls(vertex_count, records)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> range:
        return range(len(self.edges))

    def total_weight(self) -> Weight:
        return Weight(sum(self.weights_micros))

    def check_edge_ids(self, ids: Iterable[int]) -> None:
        m = len(self.edges)
        for e in ids:
            if not (0 <= e < m):
                raise ValidationError(f"edge id {e} out of range for graph with {m} edges")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={len(self.edges)})"


def make_mask(g: Graph, removed_ids: Iterable[int] = ()) -> bytearray:
    mask = bytearray(len(g.edges))
    for e in removed_ids:
        mask[e] = 1
    return mask


def component_labels(g: Graph, removed: Sequence[int] | None = None) -> list[int]:
    """Label vertices 0..c-1 by component, in first-appearance order.

    `removed` is a per-edge 0/1 mask of edges to ignore.
    """
    if removed is None:
        removed = g._zero_mask
    adj = g.adjacency
    labels = [-1] * g.vertex_count
    c = 0
    for start in range(g.vertex_count):
        if labels[start] >= 0:
            continue
        labels[start] = c
        stack = [start]
        while stack:
            v = stack.pop()
            for w, eid in adj[v]:
                if not removed[eid] and labels[w] < 0:
                    labels[w] = c
                    stack.append(w)
        c += 1
    return labels


def component_count(g: Graph, removed: Sequence[int] | None = None) -> int:
    labels = component_labels(g, removed)
    return max(labels) + 1 if labels else 0


def reachable_from(g: Graph, start: int, removed: Sequence[int]) -> list[bool]:
    """Vertices reachable from `start` ignoring masked edges."""
    adj = g.adjacency
    seen = [False] * g.vertex_count
    seen[start] = True
    stack = [start]
    while stack:
        v = stack.pop()
        for w, eid in adj[v]:
            if not removed[eid] and not seen[w]:
                seen[w] = True
                stack.append(w)
    return seen


def bridge_ids(g: Graph, removed: Sequence[int] | None = None) -> list[int]:
    """Bridges of the graph minus the masked edges, as a list of edge ids.

    Iterative lowpoint traversal keyed on edge ids, not parent vertices:
    the entry edge into a vertex is skipped exactly once, so a parallel
    edge with a different id still counts as a back edge and neither of
    the pair is ever reported. Self-loops are absent from the adjacency
    lists and are never bridges. No recursion, so path-shaped graphs of
    any depth are fine.
    """
    if removed is None:
        removed = g._zero_mask
    n = g.vertex_count
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    out: list[int] = []
    timer = 0
    # parallel stacks: vertex, edge id used to enter it, next adjacency index
    sv: list[int] = []
    se: list[int] = []
    si: list[int] = []
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        sv.append(root)
        se.append(-1)
        si.append(0)
        while sv:
            v = sv[-1]
            av = adj[v]
            i = si[-1]
            descended = False
            lv = low[v]
            while i < len(av):
                w, eid = av[i]
                i += 1
                if removed[eid] or eid == se[-1]:
                    continue
                dw = disc[w]
                if dw < 0:
                    si[-1] = i
                    low[v] = lv
                    disc[w] = low[w] = timer
                    timer += 1
                    sv.append(w)
                    se.append(eid)
                    si.append(0)
                    descended = True
                    break
                if dw < lv:
                    lv = dw
            if descended:
                continue
            low[v] = lv
            sv.pop()
            entry = se.pop()
            si.pop()
            if sv:
                p = sv[-1]
                if lv < low[p]:
                    low[p] = lv
                if lv > disc[p]:
                    out.append(entry)
    return out


def connected_components(g: Graph) -> list[int]:
    """Component label per vertex; labels assigned in order of first
    appearance by vertex index."""
    return component_labels(g)


def bridges(g: Graph) -> frozenset[int]:
    """Edges whose removal increases the number of connected components."""
    return frozenset(bridge_ids(g))


def gain(g: Graph, monitors: Iterable[int]) -> Weight:
    """Total weight of the monitor edges plus the bridges they expose.

    Placing monitors on M makes the flow known on M itself and on every
    bridge of G - M; this is the objective every solver maximizes.
    """
    mon = frozenset(monitors)
    g.check_edge_ids(mon)
    mask = make_mask(g, mon)
    w = g.weights_micros
    total = sum(w[e] for e in mon) + sum(w[e] for e in bridge_ids(g, mask))
    return Weight(total)


def is_c_edge_connected(g: Graph, c: int) -> bool:
    """Brute-force c-edge-connectivity for c in {1, 2, 3}.

    True iff the graph is connected and stays connected after removing
    any edge subset of size at most c-1. Graphs with at most one vertex
    are c-edge-connected by convention. Intended for desk-scale checks;
    the subset enumeration is the definition, not an optimized test.
    """
    if not 1 <= c <= 3:
        raise ValidationError("c must be 1, 2, or 3")
    if g.vertex_count <= 1:
        return True
    if component_count(g) != 1:
        return False
    m = len(g.edges)
    mask = bytearray(m)
    for size in range(1, c):
        for subset in combinations(range(m), size):
            for e in subset:
                mask[e] = 1
            disconnected = component_count(g, mask) != 1
            for e in subset:
                mask[e] = 0
            if disconnected:
                return False
    return True


def spanning_forest(g: Graph) -> frozenset[int]:
    """Maximal acyclic edge set: edges scanned in id order, accepted when
    they join two components. Deterministic; loops are never accepted."""
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for e in g.edges:
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
            chosen.append(e.id)
    return frozenset(chosen)
