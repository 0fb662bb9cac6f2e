"""Meridian-traceless SU(2) representations with exact values.

Two constructions are supported:

* colorings: every arc of component v gets +-phi(v) in Q8, with the sign
  flipping each time the component passes under an arc of another axis;
* binary dihedral: every arc gets a reflection cos(t pi) i + sin(t pi) j and
  each crossing imposes 2 t_over - t_in - t_out = 0 mod 2, solved exactly
  through the Smith normal form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .diagram import OVER_A, UNDER_IN, LinkDiagram
from .errors import (
    InvalidColoring,
    NoSamplesForFreeDirection,
    PropagationInconsistent,
)
from .exactmath import I, DihedralQuat, Q8Element, Reflection, Rotation, SnfResult, smith_normal_form
from .graphs import AXIS, IjkColoring, verify_coloring
from .presentation import default_base_arc, dihedral_matrix, wirtinger

Value = Q8Element | DihedralQuat


@dataclass(frozen=True)
class MeridianTracelessRep:
    arc_values: tuple[Value, ...]
    kind: str  # "q8" or "dihedral"
    irreducible: bool
    verified: bool
    note: str = ""

    def to_json(self) -> dict:
        arcs = []
        for x in self.arc_values:
            if isinstance(x, Q8Element):
                arcs.append({"kind": "q8", "sign": x.sign, "axis": x.axis})
            else:
                arcs.append({"kind": x.kind, "angle": [x.angle.numerator, x.angle.denominator]})
        out = {"kind": self.kind, "irreducible": self.irreducible, "verified": self.verified, "arcs": arcs}
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, data: dict) -> MeridianTracelessRep:
        vals: list[Value] = []
        for a in data["arcs"]:
            if a["kind"] == "q8":
                vals.append(Q8Element(a["sign"], a["axis"]))
            else:
                num, den = a["angle"]
                vals.append(DihedralQuat(a["kind"], Fraction(num, den)))
        return cls(tuple(vals), data["kind"], data["irreducible"], data["verified"], data.get("note", ""))


@dataclass
class RepReport:
    relations: list[tuple[int, bool]] = field(default_factory=list)
    traceless: bool = True
    irreducible: bool = False
    noncommuting_pair: tuple[int, int] | None = None
    base_arc: int = 0
    base_is_i: bool = False

    @property
    def relations_ok(self) -> bool:
        return all(ok for _, ok in self.relations)

    @property
    def ok(self) -> bool:
        return self.relations_ok and self.traceless

    def to_json(self) -> dict:
        return {
            "relations_ok": self.relations_ok,
            "failed_relations": [c for c, ok in self.relations if not ok],
            "traceless": self.traceless,
            "irreducible": self.irreducible,
            "noncommuting_pair": list(self.noncommuting_pair) if self.noncommuting_pair else None,
            "base_arc": self.base_arc,
            "base_is_i": self.base_is_i,
        }


def _noncommuting_pair(values: Sequence[Value]) -> tuple[int, int] | None:
    for a, b in itertools.combinations(range(len(values)), 2):
        if values[a] * values[b] != values[b] * values[a]:
            return (a, b)
    return None


def verify_rep(d: LinkDiagram, rep: MeridianTracelessRep | Sequence[Value], base_arc: int | None = None) -> RepReport:
    values = rep.arc_values if isinstance(rep, MeridianTracelessRep) else tuple(rep)
    p = wirtinger(d)
    base = default_base_arc(d) if base_arc is None else base_arc
    report = RepReport(base_arc=base)
    if len(values) != len(p.generators):
        report.relations = [(r.crossing, False) for r in p.relations]
        report.traceless = False
        return report
    for r in p.relations:
        o, a, c = values[r.over_arc], values[r.in_arc], values[r.out_arc]
        conj = o * a * o.inverse() if r.sign > 0 else o.inverse() * a * o
        report.relations.append((r.crossing, conj == c))
    report.traceless = all(x.traceless for x in values)
    report.noncommuting_pair = _noncommuting_pair(values)
    report.irreducible = report.noncommuting_pair is not None
    ival = I if isinstance(values[base], Q8Element) else Reflection(0)
    report.base_is_i = values[base] == ival
    return report


def _finish(d: LinkDiagram, values: Sequence[Value], kind: str, note: str = "") -> MeridianTracelessRep:
    report = verify_rep(d, values)
    return MeridianTracelessRep(tuple(values), kind, report.irreducible, report.ok, note)


# -- colorings -------------------------------------------------------------------


def rep_from_coloring(d: LinkDiagram, phi: IjkColoring | Sequence[Q8Element] | str) -> MeridianTracelessRep:
    if isinstance(phi, str):
        phi = IjkColoring.from_axes(phi)
    values = phi.values if isinstance(phi, IjkColoring) else tuple(phi)
    if not verify_coloring(d.linking_graph(), values):
        raise InvalidColoring("coloring does not satisfy the commutation condition")
    arc_of = d.arc_of_edge
    comp_of = d.component_of_edge
    arc_vals: dict[int, Q8Element] = {}
    for k, comp in enumerate(d.components):
        color = values[k]
        sign = 1
        e = comp[0]
        arc_vals[arc_of[e]] = Q8Element(sign, color.axis)
        for _ in range(len(comp)):
            ci, slot = d.edge_head(e)
            nxt = d.successor(e)
            if slot == UNDER_IN:
                over = comp_of[d.crossings[ci][OVER_A]]
                if values[over].axis != color.axis:
                    sign = -sign
                want = Q8Element(sign, color.axis)
                have = arc_vals.get(arc_of[nxt])
                if have is not None and have != want:
                    raise PropagationInconsistent(f"component {k} closes up with the wrong sign")
                arc_vals[arc_of[nxt]] = want
            e = nxt
    ordered = [arc_vals[a] for a in range(len(d.arcs))]
    rep = _finish(d, ordered, "q8")
    if not rep.verified:
        raise PropagationInconsistent("coloring representation fails a relation")
    return rep


def normalize_base(rep: MeridianTracelessRep, base_arc: int) -> MeridianTracelessRep:
    """Conjugate so that the base arc maps to i (automorphisms of the image)."""
    vals = list(rep.arc_values)
    x = vals[base_arc]
    if isinstance(x, Q8Element):
        cycle = {"1": "1", "i": "j", "j": "k", "k": "i"}
        while vals[base_arc].axis != "i":
            vals = [Q8Element(v.sign, cycle[v.axis]) for v in vals]
        if vals[base_arc].sign < 0:
            # conjugation by j: i -> -i, k -> -k
            vals = [v if v.axis in "1j" else -v for v in vals]
    else:
        shift = -x.angle
        vals = [Rotation(shift / 2) * v * Rotation(-shift / 2) for v in vals]
    return MeridianTracelessRep(tuple(vals), rep.kind, rep.irreducible, rep.verified, rep.note)


# -- binary dihedral -------------------------------------------------------------


@dataclass
class DihedralSolutionSet:
    diagram: LinkDiagram = field(repr=False)
    base_arc: int
    drop_row: int
    columns: tuple[int, ...]  # arcs carried by the matrix columns
    snf: SnfResult = field(repr=False)
    count: int | None  # None means infinitely many
    abelian_count: int
    free_rank: int

    @property
    def infinite(self) -> bool:
        return self.count is None

    def to_json(self) -> dict:
        return {
            "base_arc": self.base_arc,
            "dropped_relation": self.drop_row,
            "invariant_factors": list(self.snf.invariant_factors),
            "free_rank": self.free_rank,
            "count": "Infinite" if self.count is None else self.count,
            "abelian_count": self.abelian_count,
        }


def _abelian_count(d: LinkDiagram, drop_row: int) -> int:
    # abelian solutions have every angle in {0, 1} and satisfy t_in = t_out
    p = wirtinger(d)
    parent = list(range(len(p.generators)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in p.relations:
        if r.crossing != drop_row:
            parent[find(r.in_arc)] = find(r.out_arc)
    classes = len({find(a) for a in range(len(parent))})
    return 2 ** (classes - 1)


def dihedral_solutions(d: LinkDiagram, base_arc: int | None = None, drop_row: int | None = None) -> DihedralSolutionSet:
    M, base, drop = dihedral_matrix(d, base_arc, drop_row)
    cols = tuple(a for a in range(len(d.arcs)) if a != base)
    snf = smith_normal_form(M) if M else smith_normal_form([[0] * len(cols)]) if cols else None
    if snf is None:
        # a single arc: only the base value
        snf = smith_normal_form([[0]])
        return DihedralSolutionSet(d, base, drop, cols, snf, 1, 1, 0)
    count = None
    if snf.free_rank == 0:
        count = 1
        for f in snf.invariant_factors:
            count *= f
    return DihedralSolutionSet(d, base, drop, cols, snf, count, _abelian_count(d, drop), snf.free_rank)


def _angles(s: DihedralSolutionSet, gamma: Sequence[Fraction]) -> list[Fraction]:
    # beta = V gamma (mod 1) solves M beta = 0 mod 1; angles are 2 beta mod 2
    V = s.snf.V
    theta = [Fraction(0)] * len(s.diagram.arcs)
    for row, arc in enumerate(s.columns):
        beta = sum((V[row][k] * gamma[k] for k in range(len(gamma))), Fraction(0))
        theta[arc] = (2 * beta) % 2
    return theta


def enumerate_dihedral(
    s: DihedralSolutionSet,
    free_samples: Iterable[Fraction | int | str] | None = None,
) -> list[MeridianTracelessRep]:
    """Every solution in the finite case; torsion points times samples otherwise.

    A free sample t is the value of a free coordinate of the solution torus
    R/Z (so it contributes 2t to the angles, in units of pi).
    """
    factors = s.snf.invariant_factors
    if s.free_rank:
        samples = [Fraction(x) for x in (free_samples if free_samples is not None else [Fraction(1, 4)])]
        if not samples:
            raise NoSamplesForFreeDirection("need at least one sample for each free direction")
    else:
        samples = []
    ranges = [[Fraction(k, f) for k in range(f)] for f in factors]
    ranges += [samples] * s.free_rank
    out = []
    for gamma in itertools.product(*ranges):
        theta = _angles(s, gamma)
        values = [Reflection(t) for t in theta]
        out.append(_finish(s.diagram, values, "dihedral"))
    return out
