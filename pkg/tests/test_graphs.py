from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st
from networkx.algorithms import isomorphism

from linkrep.diagram import SimpleGraph
from linkrep.errors import InternalExhaustion
from linkrep.exactmath import I, J, K
from linkrep.graphs import (
    GraphVerdict,
    brute_force_colorings,
    classify,
    find_induced_cycle_ne4,
    find_induced_g0,
    g0_graph,
    ijk_coloring,
    induced_cycles,
    is_forest,
    is_induced_cycle,
    verify_coloring,
    verify_g0_map,
)


def to_simple(g: nx.Graph) -> SimpleGraph:
    return SimpleGraph.from_edges(g.number_of_nodes(), g.edges())


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edge_list())
    return h


def has_induced(host: nx.Graph, pattern: nx.Graph) -> bool:
    return isomorphism.GraphMatcher(host, pattern).subgraph_is_isomorphic()


@pytest.fixture(scope="module")
def atlas():
    return list(nx.graph_atlas_g())


def test_g0_shape():
    g = g0_graph()
    assert g.vertex_count == 6 and len(g.edge_list()) == 7
    assert sorted(g.degree(v) for v in range(6)) == [2, 2, 2, 2, 3, 3]
    assert [len(c) for c in induced_cycles(g)].count(4) == 2
    assert find_induced_cycle_ne4(g) is None


def test_g0_verdict():
    v = classify(g0_graph())
    assert v.variant == "InducedG0"
    assert verify_g0_map(g0_graph(), dict(v.g0_map))


def test_forest_detection():
    assert is_forest(SimpleGraph.from_edges(4, [(0, 1), (2, 3)]))
    assert not is_forest(SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    assert classify(SimpleGraph.from_edges(1, [])).variant == "Tree"


def test_k5_minus_edge_verdict():
    g = to_simple(nx.complete_graph(5))
    g = SimpleGraph.from_edges(5, [e for e in g.edge_list() if e != (3, 4)])
    v = classify(g)
    assert v.variant == "InducedCycle" and len(v.cycle) == 3


def test_k5_minus_edge_admits_colorings():
    # the triangle 0-1-2 takes i, j, k and the two non-adjacent vertices copy one axis
    g = SimpleGraph.from_edges(5, [e for e in itertools.combinations(range(5), 2) if e != (3, 4)])
    assert verify_coloring(g, (I, J, K, I, I))
    assert len(list(brute_force_colorings(g))) == 18


def test_four_cycle_coloring():
    c4 = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    v = classify(c4)
    assert v.variant == "Coloring"
    assert verify_coloring(c4, v.coloring)


def test_verify_rejects_bad_witnesses():
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert not GraphVerdict("InducedCycle", cycle=(0, 1, 2)).verify(g)
    assert not verify_coloring(g, (I, I, I))  # constant
    assert not verify_coloring(g, (I, J))  # wrong length


def test_atlas_classification(atlas):
    counts: dict[str, int] = {}
    for h in atlas:
        g = to_simple(h)
        v = classify(g)
        assert v.verify(g)
        counts[v.variant] = counts.get(v.variant, 0) + 1
        if v.variant == "Tree":
            assert h.number_of_nodes() == 0 or nx.is_forest(h)
        else:
            chordless = [len(c) for c in nx.chordless_cycles(h)]
            has_ne4 = any(n != 4 for n in chordless)
            assert (v.variant == "InducedCycle") == has_ne4
            if v.variant in ("InducedG0", "Coloring"):
                assert has_induced(h, to_nx(g0_graph())) == (v.variant == "InducedG0")
    assert counts == {"Tree": 80, "InducedCycle": 1108, "InducedG0": 6, "Coloring": 59}


def test_constructive_coloring_reaches_all_atlas_cases(atlas):
    for h in atlas:
        g = to_simple(h)
        if classify(g).variant == "Coloring":
            assert ijk_coloring(g).method == "constructive"


def test_coloring_agrees_with_brute_force_small(atlas):
    for h in atlas:
        if h.number_of_nodes() > 5:
            continue
        g = to_simple(h)
        found = ijk_coloring(g)
        exists = next(brute_force_colorings(g), None) is not None
        assert (found is not None) == exists


def test_induced_cycles_match_networkx(atlas):
    for h in atlas[::7]:
        g = to_simple(h)
        ours = sorted(tuple(sorted(c)) for c in induced_cycles(g))
        theirs = sorted(tuple(sorted(c)) for c in nx.chordless_cycles(h))
        assert ours == theirs
        for c in induced_cycles(g):
            assert is_induced_cycle(g, c)


def test_g0_detection_matches_networkx(atlas):
    g0 = to_nx(g0_graph())
    for h in atlas:
        if h.number_of_nodes() < 6:
            continue
        g = to_simple(h)
        m = find_induced_g0(g)
        assert (m is not None) == has_induced(h, g0)
        if m is not None:
            assert verify_g0_map(g, m)


@given(st.integers(2, 10), st.floats(0.1, 0.7), st.integers(0, 10**6))
def test_random_graphs_classify(n, p, seed):
    h = nx.gnp_random_graph(n, p, seed=seed)
    g = to_simple(h)
    v = classify(g)
    assert v.verify(g)
    if v.variant == "Coloring":
        assert v.coloring.method == "constructive"


def test_exhaustion_is_an_error_type():
    assert issubclass(InternalExhaustion, Exception)
