from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from linkrep.alexander import determinant
from linkrep.errors import InvalidColoring, NoSamplesForFreeDirection
from linkrep.exactmath import I, Q8, Reflection, Rotation
from linkrep.exactmath.quaternion import quat_mul
from linkrep.families import named
from linkrep.presentation import default_base_arc, wirtinger
from linkrep.reps import (
    MeridianTracelessRep,
    dihedral_solutions,
    enumerate_dihedral,
    normalize_base,
    rep_from_coloring,
    verify_rep,
)


def float_check(d, values) -> bool:
    # independent check of every Wirtinger relation with float quaternions
    def inv(q):
        return (q[0], -q[1], -q[2], -q[3])

    for r in wirtinger(d).relations:
        o, a, c = (values[x].as_quaternion() for x in (r.over_arc, r.in_arc, r.out_arc))
        got = quat_mul(quat_mul(o, a), inv(o)) if r.sign > 0 else quat_mul(quat_mul(inv(o), a), o)
        if any(abs(u - v) > 1e-9 for u, v in zip(got, c)):
            return False
        if abs(c[0]) > 1e-9:
            return False
    return True


@pytest.mark.parametrize(
    "name,count,abelian,irreducible",
    [
        ("Hopf", 2, 2, 0),
        ("Trefoil", 3, 1, 2),
        ("L6n1", 4, 4, 0),
        ("L5m3", 16, 16, 0),
        ("G0Link", 32, 32, 0),
        ("Chain(4)", 8, 8, 0),
    ],
)
def test_dihedral_counts(name, count, abelian, irreducible):
    d = named(name)
    s = dihedral_solutions(d)
    assert s.count == count
    assert s.abelian_count == abelian
    reps = enumerate_dihedral(s)
    assert len(reps) == count
    assert sum(r.irreducible for r in reps) == irreducible
    assert all(r.verified for r in reps)
    assert all(float_check(d, r.arc_values) for r in reps)
    assert len({r.arc_values for r in reps}) == count


def test_l8n8_free_direction():
    d = named("L8n8")
    s = dihedral_solutions(d)
    assert s.infinite and s.free_rank == 1 and s.abelian_count == 8
    reps = enumerate_dihedral(s, [Fraction(1, 4), Fraction(1, 3)])
    assert len(reps) == 8
    assert all(r.verified and r.irreducible for r in reps)
    assert all(float_check(d, r.arc_values) for r in reps)


def test_free_direction_needs_samples():
    with pytest.raises(NoSamplesForFreeDirection):
        enumerate_dihedral(dihedral_solutions(named("L8n8")), [])


FINITE = ["Hopf", "Trefoil", "L6n1", "L5m3", "Chain(3)", "Luv(3,1)", "Luv(4,-3)", "Luv(5,2)", "HopfForest(4;0-1,0-2,0-3)"]


@given(st.sampled_from(FINITE), st.data())
def test_count_independent_of_choices(name, data):
    d = named(name)
    n = d.crossing_count
    base = data.draw(st.integers(0, n - 1))
    drop = data.draw(st.integers(0, n - 1))
    s = dihedral_solutions(d, base, drop)
    assert s.count == determinant(d)
    assert s.abelian_count == 2 ** (d.component_count - 1)


@given(st.sampled_from(["Trefoil", "Luv(3,1)", "L8n8"]), st.sampled_from(Q8[2:]), st.fractions(0, 2, max_denominator=12))
def test_conjugation_invariance(name, g, phi):
    d = named(name)
    s = dihedral_solutions(d)
    rep = enumerate_dihedral(s)[-1]
    rot = Rotation(phi)
    moved = [rot * x * rot.inverse() for x in rep.arc_values]
    assert verify_rep(d, moved).ok


def test_coloring_reps():
    for name, phi in (("L6n1", "ijk"), ("L8n8", "ijij")):
        d = named(name)
        rep = rep_from_coloring(d, phi)
        report = verify_rep(d, rep)
        assert report.ok and report.irreducible
        assert float_check(d, rep.arc_values)


def test_coloring_rep_rejects_invalid():
    with pytest.raises(InvalidColoring):
        rep_from_coloring(named("Hopf"), "ij")
    with pytest.raises(InvalidColoring):
        rep_from_coloring(named("L6n1"), "ii")


@given(st.sampled_from(Q8[2:]))
def test_q8_conjugation_keeps_coloring_rep(g):
    d = named("L8n8")
    rep = rep_from_coloring(d, "ijij")
    moved = [g * x * g.inverse() for x in rep.arc_values]
    assert verify_rep(d, moved).ok


def test_normalize_base():
    d = named("L6n1")
    base = default_base_arc(d)
    rep = normalize_base(rep_from_coloring(d, "kij"), base)
    assert rep.arc_values[base] == I
    assert verify_rep(d, rep).ok
    tre = named("Trefoil")
    r = normalize_base(enumerate_dihedral(dihedral_solutions(tre))[-1], 0)
    assert r.arc_values[0] == Reflection(0)
    assert verify_rep(tre, r).ok


def test_verify_rep_detects_errors():
    d = named("Trefoil")
    rep = enumerate_dihedral(dihedral_solutions(d))[-1]
    vals = list(rep.arc_values)
    vals[0] = Reflection(vals[0].angle + Fraction(1, 3))
    r = verify_rep(d, vals)
    assert not r.relations_ok
    assert not verify_rep(d, vals[:-1]).ok


def test_json_roundtrip():
    rep = rep_from_coloring(named("L6n1"), "ijk")
    assert MeridianTracelessRep.from_json(rep.to_json()) == rep
    drep = enumerate_dihedral(dihedral_solutions(named("Trefoil")))[-1]
    assert MeridianTracelessRep.from_json(drep.to_json()) == drep


def test_angles_exact():
    reps = enumerate_dihedral(dihedral_solutions(named("Trefoil")))
    angles = sorted({x.angle for r in reps for x in r.arc_values})
    assert all(a.denominator in (1, 3) for a in angles)
    assert math.isclose(float(angles[1]), 2 / 3)
