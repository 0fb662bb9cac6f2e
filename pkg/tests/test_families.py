from __future__ import annotations

import itertools
import re

import networkx as nx
import pytest

from linkrep.alexander import alexander_report, determinant
from linkrep.diagram import SimpleGraph
from linkrep.errors import NotAForest, UnknownName, UTooSmall
from linkrep.families import G0LINK_PD, L5M3_PD, NAMES, chain, hopf_forest, luv, named, parse_forest
from linkrep.graphs import g0_graph, is_forest


def test_stored_codes_roundtrip_verbatim():
    # stored without whitespace; the serializer reproduces them character for character
    for pd, crossings in ((L5M3_PD, 13), (G0LINK_PD, 14)):
        assert not re.search(r"\s", pd)
        d = named("L5m3" if crossings == 13 else "G0Link")
        assert d.crossing_count == crossings
        assert d.to_pd().replace(" ", "") == pd


def test_named_shapes():
    assert named("L5m3").component_count == 5
    g0 = named("G0Link")
    assert g0.component_count == 6
    assert nx.is_isomorphic(nx.Graph(g0.linking_graph().edge_list()), nx.Graph(g0_graph().edge_list()))
    l6 = named("L6n1")
    assert l6.component_count == 3
    assert l6.linking_graph().edge_list() == [(0, 1), (0, 2), (1, 2)]


def test_unknown_name():
    with pytest.raises(UnknownName):
        named("L10n99")
    assert "Hopf" in NAMES


@pytest.mark.parametrize("u", [3, 4, 5, 6])
@pytest.mark.parametrize("v", range(-3, 4))
def test_luv_grid(u, v):
    d = luv(u, v)
    assert d.component_count == u
    g = d.linking_graph()
    assert nx.is_isomorphic(nx.Graph(g.edge_list()), nx.cycle_graph(u))
    for i in range(u):
        assert abs(d.linking_number(i, (i + 1) % u)) == 1
    assert determinant(d) == 2 ** (u - 1) * abs(u + 2 * v)


def test_luv_too_small():
    with pytest.raises(UTooSmall):
        luv(2, 0)


def test_l8n8_matches_luv():
    a, b = alexander_report(luv(4, -2)), alexander_report(named("L8n8"))
    assert (a.multi_norm, a.determinant) == (b.multi_norm, b.determinant) == (36, 0)


def test_hopf_forest_edge_is_hopf():
    d = hopf_forest(SimpleGraph.from_edges(2, [(0, 1)]))
    assert d.component_count == 2 and determinant(d) == 2


def test_chain_three():
    d = chain(3)
    assert d.linking_graph().edge_list() == [(0, 1), (1, 2)]
    assert determinant(d) == 4


def test_split_forest():
    r = alexander_report(hopf_forest(SimpleGraph.from_edges(2, [])))
    assert r.multivariable.is_zero() and r.multi_norm == 0


def test_not_a_forest():
    with pytest.raises(NotAForest):
        hopf_forest(SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


def all_trees(n):
    seen = []
    for edges in itertools.combinations(itertools.combinations(range(n), 2), n - 1):
        g = SimpleGraph.from_edges(n, edges)
        if not is_forest(g):
            continue
        h = nx.Graph(edges)
        if any(nx.is_isomorphic(h, k) for k in seen):
            continue
        seen.append(h)
        yield g


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_trees_realized(n):
    for g in all_trees(n):
        d = hopf_forest(g)
        assert d.linking_graph() == g
        assert determinant(d) == 2 ** (n - 1)


def test_forest_with_isolated_vertices():
    g = parse_forest("5;0-1,1-2")
    d = hopf_forest(g)
    assert d.linking_graph() == g
    assert determinant(d) == 0


def test_named_forest_and_chain():
    assert named("HopfForest(3;0-1,1-2)").linking_graph() == chain(3).linking_graph()
    assert named("Chain(5)").component_count == 5
    assert named("Luv(3,2)").component_count == 3
