"""Link diagrams, Alexander data and meridian-traceless representations."""

from __future__ import annotations

from .alexander import AlexanderReport, alexander_report, determinant, multivariable_alexander, single_variable_alexander
from .analysis import AnalysisOptions, AnalysisReport, analyze
from .diagram import LinkDiagram, SimpleGraph, linking_graph, linking_number, mirror, parse_pd
from .families import hopf_forest, luv, named
from .graphs import classify, ijk_coloring
from .modp import Certificate, search_certificate, verify_certificate
from .reps import dihedral_solutions, enumerate_dihedral, rep_from_coloring, verify_rep

__all__ = [
    "AlexanderReport",
    "AnalysisOptions",
    "AnalysisReport",
    "Certificate",
    "LinkDiagram",
    "SimpleGraph",
    "alexander_report",
    "analyze",
    "classify",
    "determinant",
    "dihedral_solutions",
    "enumerate_dihedral",
    "hopf_forest",
    "ijk_coloring",
    "linking_graph",
    "linking_number",
    "luv",
    "mirror",
    "multivariable_alexander",
    "named",
    "parse_pd",
    "rep_from_coloring",
    "search_certificate",
    "single_variable_alexander",
    "verify_certificate",
    "verify_rep",
]
