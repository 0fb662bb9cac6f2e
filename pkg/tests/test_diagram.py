from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from linkrep.diagram import (
    LinkDiagram,
    SimpleGraph,
    add_unknot,
    arcs,
    crossing_sign,
    disjoint_union,
    insert_kink,
    linking_graph,
    linking_number,
    mirror,
    parse_pd,
)
from linkrep.errors import BrokenComponentChain, InvalidEdgeMultiplicity, MalformedPd, SameComponent
from linkrep.families import L5M3_PD, luv, named

from conftest import HOPF, TREFOIL


def merge_oracle(d: LinkDiagram) -> list[set[int]]:
    # union over-edge pairs, independent of the arc code
    parent = {e: e for e in range(1, d.edge_count + 1)}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for c in d.crossings:
        a, b = c.quad[1], c.quad[3]
        parent[find(a)] = find(b)
    groups: dict[int, set[int]] = {}
    for e in parent:
        groups.setdefault(find(e), set()).add(e)
    return sorted(groups.values(), key=min)


def test_parse_hopf():
    d = parse_pd(HOPF)
    assert d.crossing_count == 2
    assert [set(c) for c in d.components] == [{1, 2}, {3, 4}]
    assert d.edge_count == 4


def test_parse_l5m3_code():
    d = parse_pd(L5M3_PD)
    assert d.component_count == 5
    assert d.edge_count == 26


def test_parse_accepts_both_forms():
    assert parse_pd(HOPF) == parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]")
    assert parse_pd(HOPF).to_pd() == "PD[X[1,3,2,4], X[3,1,4,2]]"


@pytest.mark.parametrize("text", ["X[1,2,3]", "", "PD[X[1,3,2,4]", "Y[1,2,3,4]", "X[1,3,2,4] junk X[3,1,4,2]"])
def test_parse_malformed(text):
    with pytest.raises(MalformedPd):
        parse_pd(text)


def test_parse_bad_multiplicity():
    with pytest.raises(InvalidEdgeMultiplicity):
        parse_pd("X[1,3,2,4] X[3,1,4,5]")


def test_parse_broken_chain():
    # edge 1 enters and leaves the same crossing as an under strand twice over
    with pytest.raises((BrokenComponentChain, InvalidEdgeMultiplicity)):
        parse_pd("X[1,2,3,4] X[2,1,4,3]")


@pytest.mark.parametrize("text,count", [(HOPF, 2), (TREFOIL, 3)])
def test_arc_count(text, count):
    d = parse_pd(text)
    assert len(arcs(d)) == count
    assert sorted(map(set, arcs(d)), key=min) == merge_oracle(d)


def test_never_under_component_is_one_arc():
    # component {3,4} passes over {1,2} twice and never under
    d = parse_pd("X[1,4,2,3] X[2,4,1,3]")
    assert sorted(map(set, d.arcs), key=min) == [{1}, {2}, {3, 4}]
    assert d.linking_number(0, 1) == 0


def test_hopf_signs_equal():
    d = parse_pd(HOPF)
    assert crossing_sign(d, 0) == crossing_sign(d, 1)
    assert abs(linking_number(d, 0, 1)) == 1


def test_mirror_flips_signs():
    d = named("L5m3")
    m = mirror(d)
    assert all(a == -b for a, b in zip(d.signs, m.signs))
    assert mirror(m) == d
    assert linking_graph(m) == linking_graph(d)


def test_same_component_rejected():
    with pytest.raises(SameComponent):
        linking_number(parse_pd(HOPF), 0, 0)


def test_split_unknots_unlinked():
    d = add_unknot(add_unknot())
    assert linking_number(d, 0, 1) == 0


def test_kink_is_self_crossing():
    d = insert_kink(parse_pd(HOPF), 1)
    assert d.crossing_count == 3
    assert d.linking_matrix == parse_pd(HOPF).linking_matrix


def test_luv_cycle_linking():
    d = named("L5m3")
    for i in range(5):
        for j in range(i + 1, 5):
            adjacent = (j - i) % 5 in (1, 4)
            assert abs(linking_number(d, i, j)) == (1 if adjacent else 0)


def test_g0_link_graph_is_g0():
    import networkx as nx

    from linkrep.graphs import g0_graph

    g = named("G0Link").linking_graph()
    assert nx.is_isomorphic(nx.Graph(g.edge_list()), nx.Graph(g0_graph().edge_list()))


def test_simple_graph_rejects_loops():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(2, [(0, 0)])
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 0)])
    assert g.edge_list() == [(0, 1)]
    assert SimpleGraph.from_json(g.to_json()) == g


CORPUS = ["Hopf", "Trefoil", "L6n1", "L8n8", "L5m3", "G0Link", "Chain(4)", "Luv(4,2)", "HopfForest(4;0-1,1-2)"]


@given(st.sampled_from(CORPUS))
def test_lk_symmetric_and_arc_count(name):
    d = named(name)
    n = d.component_count
    for i in range(n):
        for j in range(n):
            if i != j:
                assert d.linking_number(i, j) == d.linking_number(j, i)
    assert len(d.arcs) == d.crossing_count
    assert sorted(map(set, d.arcs), key=min) == merge_oracle(d)


@given(st.sampled_from(CORPUS), st.data())
def test_reversal_negates_lk_keeps_graph(name, data):
    d = named(name)
    k = data.draw(st.integers(0, d.component_count - 1))
    r = d.reverse_component(k)
    for j in range(d.component_count):
        if j != k:
            assert r.linking_number(k, j) == -d.linking_number(k, j)
    assert r.linking_graph() == d.linking_graph()


@given(st.sampled_from(CORPUS))
def test_mirror_involution(name):
    d = named(name)
    assert d.mirror().mirror() == d
    assert d.mirror().linking_graph() == d.linking_graph()


def test_disjoint_union_components():
    d = disjoint_union(parse_pd(HOPF), parse_pd(TREFOIL))
    assert d.component_count == 3
    assert d.linking_graph().edge_list() == [(0, 1)]


def test_component_order_by_min_label():
    d = luv(3, 0)
    mins = [min(c) for c in d.components]
    assert mins == sorted(mins)
