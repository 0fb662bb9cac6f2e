"""End-to-end evidence pipeline: linking graph, Alexander data, then the
cheapest-first ladder coloring -> binary dihedral -> SL(2, Z/p)."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .alexander import AlexanderReport, alexander_report
from .diagram import LinkDiagram, SimpleGraph, parse_pd
from .errors import BudgetExhausted, ExhaustedSearchSpace, InternalInvariantViolation
from .graphs import GraphVerdict, classify, ijk_coloring
from .modp import Certificate, search_certificate, verify_certificate
from .reps import DihedralSolutionSet, MeridianTracelessRep, dihedral_solutions, enumerate_dihedral, rep_from_coloring, verify_rep

DEFAULT_PRIMES = (3, 5, 7, 11)
DEFAULT_BUDGET = 1_000_000


def worker_count() -> int:
    raw = os.environ.get("LINKREP_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, n)


@dataclass
class AnalysisOptions:
    primes: Sequence[int] = DEFAULT_PRIMES
    budget: int | None = DEFAULT_BUDGET
    modp: bool = True
    alexander: bool = True
    threads: int | None = None  # None: read LINKREP_THREADS


@dataclass
class PrimeResult:
    p: int
    status: str  # found | exhausted | budget
    certificate: Certificate | None = None

    def to_json(self) -> dict:
        out: dict = {"p": self.p, "status": self.status}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


@dataclass
class AnalysisReport:
    components: int
    linking_graph: SimpleGraph
    verdict: GraphVerdict
    alexander: AlexanderReport | None
    dihedral: DihedralSolutionSet
    dihedral_irreducible: MeridianTracelessRep | None
    coloring_rep: MeridianTracelessRep | None
    certificates: list[PrimeResult] = field(default_factory=list)
    conclusion: str = "HopfSumConsistent"
    witness_kind: str | None = None

    def to_json(self) -> dict:
        return {
            "components": self.components,
            "linking_graph": self.linking_graph.to_json(),
            "verdict": self.verdict.to_json(),
            "alexander": self.alexander.to_json() if self.alexander else None,
            "dihedral": self.dihedral.to_json(),
            "dihedral_irreducible": self.dihedral_irreducible.to_json() if self.dihedral_irreducible else None,
            "coloring_rep": self.coloring_rep.to_json() if self.coloring_rep else None,
            "certificates": [c.to_json() for c in self.certificates],
            "conclusion": self.conclusion,
            "witness_kind": self.witness_kind,
        }


def _certify(pd: str, p: int, budget: int | None) -> PrimeResult:
    d = parse_pd(pd)
    try:
        return PrimeResult(p, "found", search_certificate(d, p, budget))
    except ExhaustedSearchSpace:
        return PrimeResult(p, "exhausted")
    except BudgetExhausted:
        return PrimeResult(p, "budget")


def certify_primes(d: LinkDiagram, primes: Sequence[int], budget: int | None, threads: int = 1) -> list[PrimeResult]:
    """Results in prime order, truncated after the first certificate.

    With several workers all primes run concurrently; the truncation keeps the
    output identical to the sequential run.
    """
    pd = d.to_pd()
    if threads > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(primes))) as pool:
            results = list(pool.map(_certify, [pd] * len(primes), primes, [budget] * len(primes)))
    else:
        results = []
        for p in primes:
            results.append(_certify(pd, p, budget))
            if results[-1].status == "found":
                break
    out = []
    for r in results:
        out.append(r)
        if r.status == "found":
            break
    return out


def _coloring_rep(d: LinkDiagram, g: SimpleGraph, verdict: GraphVerdict) -> MeridianTracelessRep | None:
    phi = verdict.coloring if verdict.variant == "Coloring" else ijk_coloring(g)
    if phi is None:
        return None
    rep = rep_from_coloring(d, phi)
    return rep if rep.irreducible else None


def _first_irreducible_dihedral(s: DihedralSolutionSet) -> MeridianTracelessRep | None:
    for rep in enumerate_dihedral(s):
        if rep.irreducible:
            return rep
    return None


def analyze(d: LinkDiagram, options: AnalysisOptions | None = None) -> AnalysisReport:
    opts = options or AnalysisOptions()
    g = d.linking_graph()
    verdict = classify(g)
    alex = alexander_report(d) if opts.alexander else None
    coloring = _coloring_rep(d, g, verdict)
    dihedral = dihedral_solutions(d)
    dihedral_irr = _first_irreducible_dihedral(dihedral) if coloring is None else None
    report = AnalysisReport(d.component_count, g, verdict, alex, dihedral, dihedral_irr, coloring)
    if coloring is not None:
        report.witness_kind = "coloring"
    elif dihedral_irr is not None:
        report.witness_kind = "dihedral"
    elif opts.modp:
        threads = opts.threads if opts.threads is not None else worker_count()
        report.certificates = certify_primes(d, opts.primes, opts.budget, threads)
        if report.certificates and report.certificates[-1].status == "found":
            report.witness_kind = "modp"
    if report.witness_kind is not None:
        report.conclusion = f"IrreducibleRepFound({report.witness_kind})"
    _check_witnesses(d, report)
    return report


def _check_witnesses(d: LinkDiagram, report: AnalysisReport) -> None:
    for rep in (report.coloring_rep, report.dihedral_irreducible):
        if rep is not None:
            r = verify_rep(d, rep)
            if not (r.ok and r.irreducible):
                raise InternalInvariantViolation("emitted representation does not verify")
    for c in report.certificates:
        if c.certificate is not None and not verify_certificate(d, c.certificate):
            raise InternalInvariantViolation(f"emitted certificate mod {c.p} does not verify")
