from __future__ import annotations

import json

import pytest

from linkrep.analysis import AnalysisOptions, analyze, certify_primes
from linkrep.families import named
from linkrep.modp import verify_certificate
from linkrep.reps import verify_rep


def test_hopf_consistent():
    r = analyze(named("Hopf"))
    assert r.conclusion == "HopfSumConsistent"
    assert r.dihedral.count == r.dihedral.abelian_count == 2
    assert [(c.p, c.status) for c in r.certificates][:3] == [(3, "exhausted"), (5, "exhausted"), (7, "exhausted")]


def test_l6n1_coloring_witness():
    d = named("L6n1")
    r = analyze(d)
    assert r.conclusion == "IrreducibleRepFound(coloring)"
    assert verify_rep(d, r.coloring_rep).irreducible


def test_l5m3_reports_bound():
    r = analyze(named("L5m3"))
    assert r.alexander.instanton_bound == 19
    assert r.conclusion.startswith("IrreducibleRepFound")
    assert r.witness_kind == "coloring"


def test_trefoil_dihedral():
    d = named("Trefoil")
    r = analyze(d)
    assert r.conclusion == "IrreducibleRepFound(dihedral)"
    assert verify_rep(d, r.dihedral_irreducible).irreducible


def test_chain_consistent_without_modp():
    r = analyze(named("Chain(3)"), AnalysisOptions(modp=False))
    assert r.conclusion == "HopfSumConsistent" and r.certificates == []


@pytest.mark.parametrize("name", ["Hopf", "L5m3", "Chain(3)", "Trefoil"])
def test_deterministic_json(name):
    a = json.dumps(analyze(named(name)).to_json(), sort_keys=True)
    b = json.dumps(analyze(named(name)).to_json(), sort_keys=True)
    assert a == b


def test_parallel_matches_sequential():
    d = named("L6n1")
    seq = certify_primes(d, (3, 5, 7), 10**6, threads=1)
    par = certify_primes(d, (3, 5, 7), 10**6, threads=3)
    assert [c.to_json() for c in seq] == [c.to_json() for c in par]
    assert seq[-1].status == "found" and verify_certificate(d, seq[-1].certificate)


def test_modp_fallback_when_others_fail():
    # Luv(3,-1): det 4 = 2^(n-1) and a 3-cycle graph; the ladder falls to mod-p if needed
    d = named("Luv(3,-1)")
    r = analyze(d)
    assert r.conclusion.startswith("IrreducibleRepFound")
    for c in r.certificates:
        if c.certificate is not None:
            assert verify_certificate(d, c.certificate)
