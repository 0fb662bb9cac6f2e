"""Wirtinger presentations and their Fox-calculus Alexander matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import OVER_A, UNDER_IN, UNDER_OUT, LinkDiagram
from .errors import BasepointNotI
from .exactmath import I, J, LaurentPoly, Reflection, smith_normal_form


@dataclass(frozen=True)
class Relation:
    """x_out = x_over^sign * x_in * x_over^-sign."""

    crossing: int
    over_arc: int
    in_arc: int
    out_arc: int
    sign: int

    def to_text(self) -> str:
        s = "1" if self.sign > 0 else "-1"
        t = "-1" if self.sign > 0 else "1"
        o = f"x{self.over_arc}"
        return f"x{self.out_arc} = {o}^{s} x{self.in_arc} {o}^{t}"


@dataclass(frozen=True)
class WirtingerPresentation:
    generators: tuple[int, ...]
    relations: tuple[Relation, ...]
    component_of: tuple[int, ...]  # arc -> component
    component_count: int

    def dump(self) -> str:
        lines = ["generators: " + " ".join(f"x{g}" for g in self.generators)]
        lines += [r.to_text() for r in self.relations]
        return "\n".join(lines)

    def exponent_sum_matrix(self) -> list[list[int]]:
        rows = []
        for r in self.relations:
            row = [0] * len(self.generators)
            row[r.in_arc] += 1
            row[r.out_arc] -= 1
            rows.append(row)
        return rows

    def abelianization(self):
        """SNF of the exponent-sum matrix; free rank equals the component count."""
        return smith_normal_form(self.exponent_sum_matrix())


def wirtinger(d: LinkDiagram) -> WirtingerPresentation:
    arc_of = d.arc_of_edge
    rels = []
    for ci, c in enumerate(d.crossings):
        rels.append(
            Relation(
                crossing=ci,
                over_arc=arc_of[c[OVER_A]],
                in_arc=arc_of[c[UNDER_IN]],
                out_arc=arc_of[c[UNDER_OUT]],
                sign=d.signs[ci],
            )
        )
    return WirtingerPresentation(
        generators=tuple(range(len(d.arcs))),
        relations=tuple(rels),
        component_of=tuple(d.arc_component(a) for a in range(len(d.arcs))),
        component_count=d.component_count,
    )


def default_base_arc(d: LinkDiagram) -> int:
    """Lowest-numbered arc on the highest-indexed component."""
    last = d.component_count - 1
    return min(a for a in range(len(d.arcs)) if d.arc_component(a) == last)


def fox_matrix(p: WirtingerPresentation, nvars: int | None = None) -> list[list[LaurentPoly]]:
    """Abelianized Fox Jacobian, one row per relation.

    ``nvars=1`` sends every meridian to the same variable t.
    For a positive relation o a o^-1 c^-1 the row is
    (o: 1 - t_a, a: t_o, c: -1); the negative relation o^-1 a o c^-1 is
    multiplied through by the unit t_o, giving (o: t_a - 1, a: 1, c: -t_o).
    """
    n = p.component_count if nvars is None else nvars
    ngen = len(p.generators)

    def t(arc):
        return LaurentPoly.var(n, 0 if n == 1 else p.component_of[arc])

    one = LaurentPoly.const(n, 1)
    rows = []
    for r in p.relations:
        row = [LaurentPoly.zero(n) for _ in range(ngen)]
        to, ta = t(r.over_arc), t(r.in_arc)
        if r.sign > 0:
            row[r.over_arc] = row[r.over_arc] + (one - ta)
            row[r.in_arc] = row[r.in_arc] + to
            row[r.out_arc] = row[r.out_arc] - one
        else:
            row[r.over_arc] = row[r.over_arc] + (ta - one)
            row[r.in_arc] = row[r.in_arc] + one
            row[r.out_arc] = row[r.out_arc] - to
        rows.append(row)
    return rows


def specialize_matrix(rows: list[list[LaurentPoly]], value: int) -> list[list[int]]:
    """Evaluate every entry with all variables set to ``value`` (+-1)."""
    return [[x.specialize([value] * x.nvars) for x in row] for row in rows]


def delete(rows: list[list], row: int, col: int) -> list[list]:
    return [[x for j, x in enumerate(r) if j != col] for i, r in enumerate(rows) if i != row]


def dihedral_matrix(d: LinkDiagram, base_arc: int | None = None, drop_row: int | None = None):
    """Integer system 2*th_over - th_in - th_out = 0 with the base column removed."""
    p = wirtinger(d)
    base = default_base_arc(d) if base_arc is None else base_arc
    drop = len(p.relations) - 1 if drop_row is None else drop_row
    M = []
    for r in p.relations:
        row = [0] * len(p.generators)
        row[r.over_arc] += 2
        row[r.in_arc] -= 1
        row[r.out_arc] -= 1
        M.append(row)
    return delete(M, drop, base), base, drop


@dataclass
class NaturalExtension:
    """A representation extended across the earring near the base point.

    The base arc is cut at p: a short piece ``p_mid`` runs under the small
    meridian ``m_p`` and the earring arc attaches right after it.  Crossing
    under ``m_p`` conjugates i to -i and the earring flips the sign back, so
    both ends of the base arc keep the value i, while ``m_p`` carries j on
    the piece that passes over the strand and -j on the piece under it.
    """

    base_arc: int
    arc_values: dict
    extra: dict = field(default_factory=dict)
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)


def extend_to_natural(d: LinkDiagram, arc_values: dict, base_arc: int | None = None) -> NaturalExtension:
    base = default_base_arc(d) if base_arc is None else base_arc
    x = arc_values[base]
    if hasattr(x, "axis"):
        i_val, j_val = I, J
    else:
        i_val, j_val = Reflection(0), Reflection("1/2")
    if x != i_val:
        raise BasepointNotI(f"base arc {base} maps to {x}, not i")
    p_mid = j_val * x * j_val.inverse()
    m_over = j_val
    m_under = p_mid * m_over * p_mid.inverse()
    ext = NaturalExtension(
        base_arc=base,
        arc_values=dict(arc_values),
        extra={"p_mid": p_mid, "m_p": m_over, "m_p_under": m_under},
    )
    ext.checks.append(("m_p over base strand", p_mid == m_over * x * m_over.inverse()))
    ext.checks.append(("base strand over m_p", m_under == p_mid * m_over * p_mid.inverse()))
    ext.checks.append(("earring end on L", -p_mid == x))
    ext.checks.append(("earring end on m_p", -m_under == m_over))
    ext.checks.append(("m_p traceless", m_over.traceless and m_under.traceless))
    # the rest of the diagram is untouched
    p = wirtinger(d)
    for r in p.relations:
        o, a, c = arc_values[r.over_arc], arc_values[r.in_arc], arc_values[r.out_arc]
        conj = o * a * o.inverse() if r.sign > 0 else o.inverse() * a * o
        ext.checks.append((f"crossing {r.crossing}", c == conj))
    return ext
