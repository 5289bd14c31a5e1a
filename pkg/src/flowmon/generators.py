"""Instance generators: tight-bound families, the worked inference
example, cycles, prisms, and seeded random multigraphs.

The tight families pit a stack of parallel edges against a cubic
component. A single-batch greedy solver keeps eating parallel edges worth
1+eps each (they never expose a bridge), while the optimum spends its
whole budget inside the cubic component and collects every edge there;
with the parallel weight raised to 1.5+eps the same trap catches the
two-at-a-time solver. The prism (circular ladder) plays the cubic
component because it is 3-regular and 3-edge-connected at every even
vertex count >= 6.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ValidationError
from .graph import Graph
from .weights import Weight

DEFAULT_EPSILON = Weight.parse("0.01")

FAMILIES = ("greedy1-tight", "greedy2-tight", "fig1", "cycle", "ladder", "random")


@dataclass(frozen=True)
class GeneratorSpec:
    """CLI-facing parameter set; family-specific fields may stay None."""

    family: str
    k: int | None = None
    epsilon: Weight = DEFAULT_EPSILON
    n: int | None = None
    m: int | None = None
    seed: int = 0
    min_degree: int = 0
    simple: bool = False
    weight_lo: int = 1
    weight_hi: int = 1

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}")
        if self.epsilon.micros <= 0:
            raise ValidationError("epsilon must be positive")


def prism_edges(rungs: int, offset: int = 0) -> list[tuple[int, int]]:
    """Circular ladder: two rung-length cycles joined by rungs."""
    outer = [(offset + i, offset + (i + 1) % rungs) for i in range(rungs)]
    inner = [(offset + rungs + i, offset + rungs + (i + 1) % rungs) for i in range(rungs)]
    spokes = [(offset + i, offset + rungs + i) for i in range(rungs)]
    return outer + inner + spokes


def gen_ladder(vertices: int) -> Graph:
    """Unit-weight prism on an even number of vertices >= 6."""
    if vertices < 6 or vertices % 2:
        raise ValidationError("a prism needs an even vertex count >= 6")
    return Graph.build(vertices, prism_edges(vertices // 2))


def gen_cycle(n: int) -> Graph:
    if n < 1:
        raise ValidationError("cycle length must be positive")
    if n == 1:
        return Graph.build(1, [(0, 0)])
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def _tight_family(k: int, parallel_weight: Weight) -> Graph:
    if k < 4:
        raise ValidationError("tight instances need k >= 4 (the cubic part needs 6+ vertices)")
    rungs = k - 1
    edges: list[tuple] = [(0, 1, parallel_weight) for _ in range(k + 2)]
    edges.extend(prism_edges(rungs, offset=2))
    return Graph.build(2 + 2 * rungs, edges)


def gen_greedy1_tight(k: int, epsilon: Weight = DEFAULT_EPSILON) -> Graph:
    """Two vertices joined by k+2 parallel edges of weight 1+eps, plus a
    disjoint unit-weight prism on 2k-2 vertices (3k-3 edges)."""
    return _tight_family(k, Weight.from_units(1) + epsilon)


def gen_greedy2_tight(k: int, epsilon: Weight = DEFAULT_EPSILON) -> Graph:
    """Same shape with parallel-edge weight 1.5+eps."""
    return _tight_family(k, Weight.parse("1.5") + epsilon)


def gen_fig1() -> tuple[Graph, frozenset[int], dict[int, int]]:
    """The worked 8-vertex, 12-edge inference demo.

    Four monitored edges and four bridge edges hang off a closing
    4-cycle; the cycle keeps one degree of freedom, so exactly the four
    bridges are forced by the readings and the cycle stays undetermined.
    Returns (graph, monitor ids, readings).
    """
    edges = [
        (0, 1),  # 0: monitored, flow 1
        (1, 2),  # 1: monitored, flow 4
        (2, 7),  # 2: monitored, flow 2
        (5, 3),  # 3: monitored, flow 7
        (2, 4),  # 4: forced to 2
        (7, 5),  # 5: forced to 2
        (6, 4),  # 6: forced to 3
        (4, 5),  # 7: forced to 5
        (0, 6),  # 8: closing cycle
        (6, 1),  # 9
        (1, 3),  # 10
        (3, 0),  # 11
    ]
    g = Graph.build(8, edges)
    monitors = frozenset({0, 1, 2, 3})
    readings = {0: 1, 1: 4, 2: 2, 3: 7}
    return g, monitors, readings


def gen_random(
    n: int,
    m: int,
    seed: int,
    min_degree: int = 0,
    simple: bool = False,
    weight_lo: int = 1,
    weight_hi: int = 1,
) -> Graph:
    """Seeded uniform edge sampling, optionally followed by a min-degree
    repair pass that may add edges beyond m.

    Multigraph mode allows parallels and loops (a loop adds 2 to its
    vertex's degree); simple mode samples distinct non-loop pairs without
    replacement.
    """
    if n < 0 or m < 0:
        raise ValidationError("n and m must be non-negative")
    if n == 0 and m > 0:
        raise ValidationError("edges need vertices")
    if not 0 <= weight_lo <= weight_hi:
        raise ValidationError("need 0 <= weight_lo <= weight_hi")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    if simple:
        from itertools import combinations

        pairs = list(combinations(range(n), 2))
        if m > len(pairs):
            raise ValidationError(f"a simple graph on {n} vertices holds at most {len(pairs)} edges")
        if min_degree > max(n - 1, 0):
            raise ValidationError("min_degree out of reach for a simple graph")
        edges.extend(rng.sample(pairs, m))
    else:
        for _ in range(m):
            edges.append((rng.randrange(n), rng.randrange(n)))

    if min_degree > 0:
        degree = [0] * n
        for u, v in edges:
            degree[u] += 1 + (u == v)
            degree[v] += u != v
        present = {tuple(sorted(e)) for e in edges}
        for v in range(n):
            while degree[v] < min_degree:
                if simple:
                    options = [u for u in range(n)
                               if u != v and tuple(sorted((u, v))) not in present]
                    if not options:
                        raise ValidationError(f"cannot reach min_degree at vertex {v}")
                    u = rng.choice(options)
                    present.add(tuple(sorted((u, v))))
                else:
                    u = rng.randrange(n)
                edges.append((v, u))
                degree[v] += 1 + (v == u)
                degree[u] += v != u
    weighted = [(u, v, rng.randint(weight_lo, weight_hi)) for u, v in edges]
    return Graph.build(n, weighted)


def _required(spec: GeneratorSpec, field: str) -> int:
    value = getattr(spec, field)
    if value is None:
        raise ValidationError(f"family {spec.family!r} needs parameter {field!r}")
    return value


def build_instance(spec: GeneratorSpec) -> Graph:
    """Dispatch a parameter set to its family's generator."""
    fam = spec.family
    if fam == "greedy1-tight":
        return gen_greedy1_tight(_required(spec, "k"), spec.epsilon)
    if fam == "greedy2-tight":
        return gen_greedy2_tight(_required(spec, "k"), spec.epsilon)
    if fam == "fig1":
        return gen_fig1()[0]
    if fam == "cycle":
        return gen_cycle(_required(spec, "n"))
    if fam == "ladder":
        return gen_ladder(_required(spec, "n"))
    return gen_random(
        _required(spec, "n"),
        _required(spec, "m"),
        seed=spec.seed,
        min_degree=spec.min_degree,
        simple=spec.simple,
        weight_lo=spec.weight_lo,
        weight_hi=spec.weight_hi,
    )


def random_connected_multigraph(
    n: int, m: int, seed: int, weight_lo: int = 1, weight_hi: int = 1
) -> Graph:
    """Seeded connected multigraph: random spanning tree plus arbitrary
    extra edges (parallels and loops allowed). Needs m >= n-1."""
    if n < 1:
        raise ValidationError("n must be positive")
    if m < n - 1:
        raise ValidationError("connectivity needs at least n-1 edges")
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    while len(edges) < m:
        edges.append((rng.randrange(n), rng.randrange(n)))
    weighted = [(u, v, rng.randint(weight_lo, weight_hi)) for u, v in edges]
    return Graph.build(n, weighted)
