from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from flowmon.graph import Graph

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@st.composite
def multigraphs(draw, min_n=1, max_n=8, max_m=12, min_w=1, max_w=5):
    """Arbitrary small multigraphs: parallels, loops, and disconnection
    all welcome."""
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(0, max_m))
    edges = [
        (
            draw(st.integers(0, n - 1)),
            draw(st.integers(0, n - 1)),
            draw(st.integers(min_w, max_w)),
        )
        for _ in range(m)
    ]
    return Graph.build(n, edges)


@st.composite
def bridgeless_graphs(draw, min_n=3, max_n=7, max_extra=5, max_w=5):
    """A cycle plus arbitrary extra chords, parallels, and loops; always
    connected and 2-edge-connected."""
    n = draw(st.integers(min_n, max_n))
    edges = [(i, (i + 1) % n, draw(st.integers(1, max_w))) for i in range(n)]
    extra = draw(st.integers(0, max_extra))
    for _ in range(extra):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        edges.append((u, v, draw(st.integers(1, max_w))))
    return Graph.build(n, edges)


def seeded_multigraph(seed: int, max_n=8, max_m=12, min_w=1, max_w=5) -> Graph:
    """Deterministic corpus entry used by the acceptance suite."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    m = rng.randint(0, max_m)
    edges = [
        (rng.randrange(n), rng.randrange(n), rng.randint(min_w, max_w))
        for _ in range(m)
    ]
    return Graph.build(n, edges)
