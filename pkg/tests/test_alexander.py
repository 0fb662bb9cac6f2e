from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from linkrep.alexander import (
    alexander_report,
    determinant,
    instanton_lower_bound,
    minor_determinant_at_minus_one,
    multivariable_alexander,
    single_variable_alexander,
    single_variable_direct,
)
from linkrep.errors import SingleComponent
from linkrep.exactmath import LaurentPoly
from linkrep.families import named
from linkrep.presentation import wirtinger

SMALL = ["Hopf", "L6n1", "L8n8", "L5m3", "Chain(3)", "Luv(3,1)", "Luv(4,-1)", "HopfForest(3;0-1,0-2)"]


def relabel(p: LaurentPoly, perm, signs) -> LaurentPoly:
    terms = {}
    for exp, c in p.terms.items():
        new = [0] * p.nvars
        for i, e in enumerate(exp):
            new[perm[i]] = signs[i] * e
        terms[tuple(new)] = c
    return LaurentPoly(p.nvars, terms)


def equal_up_to_relabel(a: LaurentPoly, b: LaurentPoly) -> bool:
    n = a.nvars
    target = b.normalize_units()
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            if relabel(a, perm, signs).normalize_units() == target:
                return True
    return False


def test_trefoil():
    d = named("Trefoil")
    x = LaurentPoly.var(1, 0)
    assert single_variable_alexander(d).equal_up_to_units(1 - x + x * x)
    assert determinant(d) == 3
    r = alexander_report(d)
    assert r.multi_norm == 3 and r.instanton_bound == 3


def test_hopf():
    d = named("Hopf")
    assert multivariable_alexander(d) == LaurentPoly.const(2, 1)
    assert determinant(d) == 2
    assert instanton_lower_bound(d) == 2


def test_knot_has_no_multivariable():
    with pytest.raises(SingleComponent):
        multivariable_alexander(named("Trefoil"))


def test_l6n1_polynomial():
    # closure of sigma_1^2 with its axis
    d = named("L6n1")
    m = multivariable_alexander(d)
    x = [LaurentPoly.var(3, i) for i in range(3)]
    assert m.equal_up_to_units(1 - x[0] * x[1] * x[2])


def test_split_link_vanishes():
    r = alexander_report(named("HopfForest(2;)"))
    assert r.multivariable.is_zero()
    assert r.multi_norm == 0 and r.determinant == 0


@given(st.sampled_from(SMALL), st.data())
def test_deletion_independence(name, data):
    d = named(name)
    p = wirtinger(d)
    row = data.draw(st.integers(0, len(p.relations) - 1))
    col = data.draw(st.integers(0, len(p.generators) - 1))
    assert multivariable_alexander(d, row, col).equal_up_to_units(multivariable_alexander(d))
    assert minor_determinant_at_minus_one(d, row, col) == determinant(d)


@given(st.sampled_from(SMALL + ["Trefoil"]))
def test_single_variable_two_routes(name):
    d = named(name)
    assert single_variable_alexander(d).equal_up_to_units(single_variable_direct(d))
    assert minor_determinant_at_minus_one(d) == determinant(d)


@given(st.sampled_from(SMALL))
def test_mirror_invariance(name):
    d = named(name)
    a, b = alexander_report(d), alexander_report(d.mirror())
    assert (a.determinant, a.multi_norm, a.instanton_bound) == (b.determinant, b.multi_norm, b.instanton_bound)


@given(st.sampled_from(SMALL), st.data())
def test_reversal_keeps_norm(name, data):
    d = named(name)
    k = data.draw(st.integers(0, d.component_count - 1))
    r = d.reverse_component(k)
    assert alexander_report(r).multi_norm == alexander_report(d).multi_norm
    assert determinant(r) == determinant(d)


def test_luv_and_stored_l8n8_agree():
    a = multivariable_alexander(named("Luv(4,-2)"))
    b = multivariable_alexander(named("L8n8"))
    assert equal_up_to_relabel(a, b)
    assert alexander_report(named("Luv(4,-2)")).multi_norm == alexander_report(named("L8n8")).multi_norm


def test_bound_is_ceiling():
    r = alexander_report(named("L5m3"))
    assert r.instanton_bound == -(-r.multi_norm // 16)
    assert r.to_json()["minimal_threshold"] == 16


def test_single_variable_bound_not_larger():
    for name in SMALL:
        r = alexander_report(named(name))
        assert r.single_norm <= r.multi_norm
