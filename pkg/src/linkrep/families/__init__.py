"""Generators and stored PD codes for the links used throughout the package."""

from __future__ import annotations

import re

from ..diagram import LinkDiagram, SimpleGraph, parse_pd
from ..errors import InvalidInput, UnknownName
from .braid import sigma1_squared_with_axis
from .forest import chain, hopf_forest, is_forest
from .necklace import necklace

HOPF_PD = "PD[X[1,3,2,4], X[3,1,4,2]]"
TREFOIL_PD = "PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]"

# Flat chain of four unknots with two neighbouring clasps switched; isotopic
# to luv(4, -2) after removing the two twist crossings.
L8N8_PD = (
    "PD[X[1,6,2,7], X[13,3,14,4], X[2,16,3,13], X[7,4,8,1], "
    "X[5,10,6,11], X[11,8,12,5], X[15,9,16,10], X[12,14,9,15]]"
)

L5M3_PD = (
    "PD[X[5,1,6,4],X[1,20,2,19],X[18,3,19,2],X[3,7,4,6],X[9,5,10,8],"
    "X[7,11,8,10],X[13,9,14,12],X[11,15,12,14],X[15,23,16,24],"
    "X[24,16,25,13],X[25,23,26,22],X[21,17,22,26],X[17,21,18,20]]"
)

G0LINK_PD = (
    "PD[X[5,1,6,4],X[3,7,4,6],X[16,1,17,2],X[2,15,3,16],X[23,7,24,8],"
    "X[8,28,9,23],X[9,13,10,12],X[11,5,12,10],X[22,13,19,14],"
    "X[14,21,11,22],X[19,28,20,27],X[26,21,27,20],X[24,15,25,18],"
    "X[17,26,18,25]]"
)

STORED = {
    "Hopf": HOPF_PD,
    "Trefoil": TREFOIL_PD,
    "L8n8": L8N8_PD,
    "L5m3": L5M3_PD,
    "G0Link": G0LINK_PD,
}

NAMES = ("Hopf", "Trefoil", "L6n1", "L8n8", "L5m3", "G0Link", "Chain(n)", "Luv(u,v)", "HopfForest(n;a-b,...)")


def luv(u: int, v: int) -> LinkDiagram:
    """Closed chain of u unknots whose last ring has a |v|-crossing twist region."""
    return necklace(u, v)


def parse_forest(spec: str) -> SimpleGraph:
    """``"4;0-1,1-2"`` -> graph on 4 vertices with edges 0-1 and 1-2."""
    head, _, tail = spec.partition(";")
    try:
        n = int(head)
        edges = []
        for tok in filter(None, (t.strip() for t in tail.split(","))):
            a, b = tok.split("-")
            edges.append((int(a), int(b)))
        return SimpleGraph.from_edges(n, edges)
    except ValueError as exc:
        raise InvalidInput(f"bad graph spec {spec!r}: {exc}") from exc


def named(name: str) -> LinkDiagram:
    name = name.strip()
    if name in STORED:
        return parse_pd(STORED[name])
    if name == "L6n1":
        return sigma1_squared_with_axis()
    m = re.fullmatch(r"Chain\((\d+)\)", name)
    if m:
        return chain(int(m.group(1)))
    m = re.fullmatch(r"Luv\((-?\d+),\s*(-?\d+)\)", name)
    if m:
        return luv(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"HopfForest\((.*)\)", name)
    if m:
        return hopf_forest(parse_forest(m.group(1)))
    raise UnknownName(f"unknown link name {name!r}; known: {', '.join(NAMES)}")


__all__ = [
    "HOPF_PD",
    "TREFOIL_PD",
    "L8N8_PD",
    "L5M3_PD",
    "G0LINK_PD",
    "NAMES",
    "chain",
    "hopf_forest",
    "is_forest",
    "luv",
    "named",
    "necklace",
    "parse_forest",
    "sigma1_squared_with_axis",
]
