"""Hardness reduction from Clique and its desk-scale verifiers.

A Clique instance (G, q) on a connected simple graph maps to the decision
question "do k monitor edges exist exposing at least l bridges?" with
l = n - q and k = m - q(q-1)/2 - l. The verifiers here brute-force both
sides of that equivalence on small instances: exhaustively over canonical
(isomorphism-class) connected graphs up to 7 vertices, plus seeded random
connected graphs beyond that. A composition lemma used by the reduction
(sum of C(a_i, 2) over positive parts summing to n is maximized exactly
by one big part) is checked by full enumeration as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Iterator

from .errors import SizeGuardError, ValidationError
from .graph import Graph, bridge_ids, component_count

DECIDE_DEFAULT_BUDGET = 2_000_000


class ReductionInfeasible(ValidationError):
    """The derived parameters leave the decision question meaningless
    (it needs k, l > 0); no size-q clique can exist in this regime."""


def require_simple(g: Graph) -> None:
    seen = set()
    for e in g.edges:
        if e.u == e.v:
            raise ValidationError(f"edge {e.id} is a loop; a simple graph is required")
        key = (min(e.u, e.v), max(e.u, e.v))
        if key in seen:
            raise ValidationError(f"edge {e.id} duplicates {key}; a simple graph is required")
        seen.add(key)


@dataclass(frozen=True)
class CliqueInstance:
    graph: Graph
    q: int

    def __post_init__(self) -> None:
        if self.q < 3:
            raise ValidationError("clique size q must be at least 3")
        if self.q > self.graph.vertex_count:
            raise ValidationError("clique size q exceeds the vertex count")
        require_simple(self.graph)
        if component_count(self.graph) != 1:
            raise ValidationError("clique instances must be connected")


@dataclass(frozen=True)
class DecInstance:
    graph: Graph
    k: int
    l: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.l < 0:
            raise ValidationError("k and l must be non-negative")


def reduce_clique(inst: CliqueInstance) -> DecInstance:
    """Map (G, q) to the decision instance (G, k, l) with l = n - q and
    k = m - C(q,2) - l; both must come out positive."""
    n = inst.graph.vertex_count
    m = len(inst.graph.edges)
    l = n - inst.q
    k = m - comb(inst.q, 2) - l
    if k <= 0 or l <= 0:
        raise ReductionInfeasible(
            f"derived parameters k={k}, l={l} must both be positive"
        )
    return DecInstance(inst.graph, k, l)


def decide_flow_monitors(inst: DecInstance, max_evals: int = DECIDE_DEFAULT_BUDGET) -> bool:
    """Is there a set of exactly k edges whose removal leaves at least l
    bridges? Exhaustive over all k-subsets, with a size guard."""
    g, k, l = inst.graph, inst.k, inst.l
    m = len(g.edges)
    if k > m:
        return False
    if comb(m, k) > max_evals:
        raise SizeGuardError(
            f"decision needs C({m},{k}) = {comb(m, k)} evaluations;"
            f" the guard allows {max_evals}"
        )
    if l == 0:
        return True
    mask = bytearray(m)
    for p in combinations(range(m), k):
        for e in p:
            mask[e] = 1
        found = len(bridge_ids(g, mask)) >= l
        for e in p:
            mask[e] = 0
        if found:
            return True
    return False


def _neighbor_masks(g: Graph) -> list[int]:
    nb = [0] * g.vertex_count
    for e in g.edges:
        nb[e.u] |= 1 << e.v
        nb[e.v] |= 1 << e.u
    return nb


def has_clique(g: Graph, q: int, max_combos: int = 5_000_000) -> bool:
    """Exhaustive clique test on a simple graph."""
    require_simple(g)
    n = g.vertex_count
    if q > n:
        return False
    if q <= 1:
        return n >= q
    if comb(n, q) > max_combos:
        raise SizeGuardError(f"clique search over C({n},{q}) subsets refused")
    nb = _neighbor_masks(g)
    for vs in combinations(range(n), q):
        if all(nb[u] >> v & 1 for u, v in combinations(vs, 2)):
            return True
    return False


def clique_witness(g: Graph, q: int) -> tuple[int, ...] | None:
    require_simple(g)
    nb = _neighbor_masks(g)
    for vs in combinations(range(g.vertex_count), q):
        if all(nb[u] >> v & 1 for u, v in combinations(vs, 2)):
            return vs
    return None


def forward_witness(g: Graph, q: int, clique: Iterable[int]) -> frozenset[int]:
    """Constructive monitor set from a clique: contract the clique to one
    vertex, take a spanning tree of the contraction, and monitor every
    contracted-graph edge outside the tree. Leaves the tree edges as
    bridges of G - M."""
    cl = frozenset(clique)
    merged = min(cl)
    vmap = [merged if v in cl else v for v in range(g.vertex_count)]
    outside = [e for e in g.edges if not (e.u in cl and e.v in cl)]
    # spanning tree of the contracted graph, greedy in edge id order
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    monitors = set()
    for e in outside:
        ru, rv = find(vmap[e.u]), find(vmap[e.v])
        if ru != rv:
            parent[ru] = rv
        else:
            monitors.add(e.id)
    return frozenset(monitors)


def lemma1_check(n: int, s: int) -> bool:
    """Enumerate all compositions of n into s positive parts and confirm
    that sum C(a_i, 2) is maximized exactly on the rearrangements of
    (n-s+1, 1, ..., 1)."""
    if not 1 <= s <= n:
        raise ValidationError("need 1 <= s <= n")
    target = tuple(sorted([n - s + 1] + [1] * (s - 1), reverse=True))
    best = -1
    best_shapes: set[tuple[int, ...]] = set()
    for cuts in combinations(range(1, n), s - 1):
        bounds = (0,) + cuts + (n,)
        parts = tuple(bounds[i + 1] - bounds[i] for i in range(s))
        val = sum(comb(a, 2) for a in parts)
        shape = tuple(sorted(parts, reverse=True))
        if val > best:
            best = val
            best_shapes = {shape}
        elif val == best:
            best_shapes.add(shape)
    return best_shapes == {target}


def _connected_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
    return comps == 1


def canonical_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected simple graphs
    on n labeled vertices, unit weights. Orbit enumeration over edge-set
    bitmasks; fine up to n = 7."""
    if n < 1:
        raise ValidationError("n must be positive")
    if n > 7:
        raise SizeGuardError("canonical enumeration supports n <= 7")
    if n == 1:
        yield Graph.build(1, [])
        return
    pairs = list(combinations(range(n), 2))
    np = len(pairs)
    pair_index = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        tables.append(tuple(
            pair_index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs
        ))
    seen = bytearray(1 << np)
    for mask in range(1 << np):
        if seen[mask]:
            continue
        for table in tables:
            image = 0
            rest = mask
            while rest:
                low = rest & -rest
                image |= 1 << table[low.bit_length() - 1]
                rest ^= low
            seen[image] = 1
        if _connected_mask(n, mask, pairs):
            yield Graph.build(n, [pairs[i] for i in range(np) if mask >> i & 1])


def random_connected_simple(n: int, m: int, seed: int) -> Graph:
    """Seeded connected simple graph: a random spanning tree plus m-(n-1)
    distinct extra non-tree pairs."""
    if n < 1:
        raise ValidationError("n must be positive")
    if m < n - 1 or m > comb(n, 2):
        raise ValidationError(f"need n-1 <= m <= C(n,2) for n={n}")
    import random as _random

    rng = _random.Random(seed)
    tree = [(rng.randrange(v), v) for v in range(1, n)]
    tree_set = {tuple(sorted(e)) for e in tree}
    others = [p for p in combinations(range(n), 2) if p not in tree_set]
    extras = rng.sample(others, m - (n - 1))
    return Graph.build(n, tree + extras)


@dataclass(frozen=True)
class StarReport:
    label: str
    instances: int
    checks: int
    mismatches: int

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def _check_instance(g: Graph) -> tuple[int, int]:
    """All admissible q for one connected simple graph; returns
    (checks, mismatches)."""
    checks = mismatches = 0
    n = g.vertex_count
    for q in range(3, n + 1):
        try:
            dec = reduce_clique(CliqueInstance(g, q))
        except ReductionInfeasible:
            continue
        checks += 1
        if has_clique(g, q) != decide_flow_monitors(dec):
            mismatches += 1
    return checks, mismatches


def verify_star_canonical(max_n: int) -> list[StarReport]:
    """Equivalence check over every connected simple graph on up to max_n
    vertices, one representative per isomorphism class (the question is
    isomorphism-invariant)."""
    reports = []
    for n in range(3, max_n + 1):
        instances = checks = mismatches = 0
        for g in canonical_connected_graphs(n):
            instances += 1
            c, mm = _check_instance(g)
            checks += c
            mismatches += mm
        reports.append(StarReport(f"canonical n={n}", instances, checks, mismatches))
    return reports


def verify_star_random(ns: Iterable[int], count: int, seed: int = 0) -> StarReport:
    """Equivalence check over seeded random connected simple graphs with
    edge counts kept in the tractable band for the decision brute force."""
    import random as _random

    ns = list(ns)
    rng = _random.Random(seed)
    checks = mismatches = 0
    for i in range(count):
        n = ns[i % len(ns)]
        m = rng.randint(n + 2, min(comb(n, 2), 2 * n - 1))
        g = random_connected_simple(n, m, seed=rng.randrange(2**32))
        c, mm = _check_instance(g)
        checks += c
        mismatches += mm
    return StarReport(f"random n in {ns}", count, checks, mismatches)
