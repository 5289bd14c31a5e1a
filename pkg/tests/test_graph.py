from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flowmon.errors import ValidationError
from flowmon.graph import (
    Graph,
    bridges,
    connected_components,
    gain,
    is_c_edge_connected,
    spanning_forest,
)
from flowmon.weights import Weight

from conftest import multigraphs
from oracles import bridges_by_removal, c_edge_connected_naive, gain_micros_by_definition

TRIANGLE = Graph.build(3, [(0, 1), (1, 2), (0, 2)])
K4 = Graph.build(4, list(combinations(range(4), 2)))
TWO_TRIANGLES_JOINED = Graph.build(
    6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
)
PARALLEL_PAIR = Graph.build(2, [(0, 1), (0, 1)])


def test_components_isolated_vertices():
    g = Graph.build(3, [])
    assert connected_components(g) == [0, 1, 2]


def test_components_triangle():
    assert connected_components(TRIANGLE) == [0, 0, 0]


def test_components_disjoint_union():
    g = Graph.build(4, [(0, 1), (1, 2), (0, 2)])
    assert connected_components(g) == [0, 0, 0, 1]


def test_bridges_path():
    g = Graph.build(3, [(0, 1), (1, 2)])
    assert bridges(g) == {0, 1}


def test_bridges_triangle_empty():
    assert bridges(TRIANGLE) == frozenset()


def test_bridges_joining_edge_only():
    assert bridges(TWO_TRIANGLES_JOINED) == {6}


def test_parallel_edges_never_bridges():
    assert bridges(PARALLEL_PAIR) == frozenset()


def test_self_loop_never_bridge():
    g = Graph.build(2, [(0, 1), (1, 1)])
    assert bridges(g) == {0}


@given(multigraphs(max_n=7, max_m=14))
def test_bridges_match_removal_oracle(g):
    assert bridges(g) == bridges_by_removal(g)


def test_gain_triangle():
    assert gain(TRIANGLE, {0}) == Weight.from_units(3)


def test_gain_k4_single_edge():
    # K4 minus an edge stays 2-edge-connected, so nothing extra is exposed
    assert gain(K4, {0}) == Weight.from_units(1)


def test_gain_all_edges_is_total_weight():
    g = Graph.build(3, [(0, 1, 2), (1, 2, 3), (0, 2, 4)])
    assert gain(g, {0, 1, 2}) == g.total_weight()


def test_gain_rejects_bad_ids():
    with pytest.raises(ValidationError):
        gain(TRIANGLE, {7})


@given(multigraphs(max_n=6, max_m=10), st.data())
def test_gain_matches_definition_and_grows(g, data):
    m = len(g.edges)
    ids = sorted(data.draw(st.sets(st.integers(0, m - 1), max_size=4))) if m else []
    mon = frozenset(ids)
    assert gain(g, mon).micros == gain_micros_by_definition(g, mon)
    assert gain(g, mon).micros >= sum(g.weights_micros[e] for e in mon)
    if m and len(mon) < m:
        extra = next(e for e in range(m) if e not in mon)
        assert gain(g, mon | {extra}) >= gain(g, mon)


@given(multigraphs(max_n=6, max_m=10))
def test_gain_of_empty_set_is_bridge_weight(g):
    w = g.weights_micros
    assert gain(g, frozenset()).micros == sum(w[e] for e in bridges(g))


def test_c_edge_connected_cycle():
    c4 = Graph.build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert is_c_edge_connected(c4, 2)
    assert not is_c_edge_connected(c4, 3)


def test_c_edge_connected_prism():
    from flowmon.generators import gen_ladder

    assert is_c_edge_connected(gen_ladder(8), 3)


def test_c_edge_connected_conventions():
    assert is_c_edge_connected(Graph.build(1, [(0, 0)]), 3)
    assert is_c_edge_connected(Graph.build(0, []), 3)
    assert not is_c_edge_connected(Graph.build(2, []), 1)
    with pytest.raises(ValidationError):
        is_c_edge_connected(TRIANGLE, 4)


@given(multigraphs(max_n=5, max_m=8), st.integers(1, 3))
def test_c_edge_connected_matches_subset_oracle(g, c):
    assert is_c_edge_connected(g, c) == c_edge_connected_naive(g, c)


def test_spanning_forest_triangle_lowest_ids():
    assert spanning_forest(TRIANGLE) == {0, 1}


def test_spanning_forest_keeps_forest_drops_loops():
    g = Graph.build(4, [(0, 1), (2, 3), (1, 1)])
    assert spanning_forest(g) == {0, 1}


def test_spanning_forest_parallel_rejected():
    g = Graph.build(2, [(0, 1), (0, 1), (0, 1)])
    assert spanning_forest(g) == {0}


@given(multigraphs(max_n=7, max_m=12))
def test_spanning_forest_size_and_acyclicity(g):
    forest = spanning_forest(g)
    comps = max(connected_components(g), default=-1) + 1
    assert len(forest) == g.vertex_count - comps
    # acyclic: adding edges one by one must always join two components
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in sorted(forest):
        ru, rv = find(g.edges[e].u), find(g.edges[e].v)
        assert ru != rv
        parent[ru] = rv


def test_graph_validation():
    with pytest.raises(ValidationError):
        Graph.build(2, [(0, 5)])
