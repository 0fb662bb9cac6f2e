"""Alexander polynomials, link determinant and the Alexander-norm lower bound."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram
from .errors import InexactDivision, SingleComponent
from .exactmath import LaurentPoly, determinant as poly_det, int_det, one_minus_vars_product
from .presentation import default_base_arc, delete, fox_matrix, specialize_matrix, wirtinger


@dataclass(frozen=True)
class AlexanderReport:
    components: int
    multivariable: LaurentPoly
    single_variable: LaurentPoly
    determinant: int
    multi_norm: int
    single_norm: int
    instanton_bound: int
    single_variable_bound: int

    def to_json(self) -> dict:
        return {
            "components": self.components,
            "multivariable": self.multivariable.to_text(),
            "single_variable": self.single_variable.to_text(),
            "determinant": self.determinant,
            "multi_norm": self.multi_norm,
            "single_norm": self.single_norm,
            "instanton_bound": self.instanton_bound,
            "single_variable_bound": self.single_variable_bound,
            "minimal_threshold": 2 ** (self.components - 1),
        }


def _minor(d: LinkDiagram, nvars: int, row: int | None, col: int | None):
    p = wirtinger(d)
    M = fox_matrix(p, nvars)
    r = len(p.relations) - 1 if row is None else row
    c = default_base_arc(d) if col is None else col
    sub = delete(M, r, c)
    zero = LaurentPoly.zero(nvars)
    one = LaurentPoly.const(nvars, 1)
    return poly_det(sub, zero, one), p.component_of[c]


def multivariable_alexander(d: LinkDiagram, row: int | None = None, col: int | None = None) -> LaurentPoly:
    """Torres-normalized multivariable polynomial, up to +-monomials.

    The deleted minor of the Fox matrix equals (x_c - 1) times the
    polynomial, where c is the component carrying the deleted column.
    """
    n = d.component_count
    if n < 2:
        raise SingleComponent("use single_variable_alexander for knots")
    D, comp = _minor(d, n, row, col)
    factor = LaurentPoly.var(n, comp) - 1
    try:
        return D.divide_exact(factor).normalize_units()
    except InexactDivision as exc:
        raise InexactDivision(f"deleted minor not divisible by x{comp + 1} - 1") from exc


def single_variable_alexander(d: LinkDiagram) -> LaurentPoly:
    if d.component_count == 1:
        D, _ = _minor(d, 1, None, None)
        return D.normalize_units()
    mv = multivariable_alexander(d)
    x = LaurentPoly.var(1, 0)
    return ((1 - x) * mv.substitute_all()).normalize_units()


def single_variable_direct(d: LinkDiagram) -> LaurentPoly:
    """Delta_L straight from the one-variable Fox minor, which equals it up to units."""
    D, _ = _minor(d, 1, None, None)
    return D.normalize_units()


def determinant(d: LinkDiagram) -> int:
    return abs(single_variable_alexander(d).specialize([-1]))


def minor_determinant_at_minus_one(d: LinkDiagram, row: int | None = None, col: int | None = None) -> int:
    """|det| of the deleted Fox matrix at t = -1, an independent route to det(L)."""
    p = wirtinger(d)
    M = specialize_matrix(fox_matrix(p, 1), -1)
    r = len(p.relations) - 1 if row is None else row
    c = default_base_arc(d) if col is None else col
    return abs(int_det(delete(M, r, c)))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def alexander_report(d: LinkDiagram) -> AlexanderReport:
    n = d.component_count
    single = single_variable_alexander(d)
    x = LaurentPoly.var(1, 0)
    if n == 1:
        multi = single
        multi_norm = single.norm()
    else:
        multi = multivariable_alexander(d)
        multi_norm = (one_minus_vars_product(n) * multi).norm()
    single_norm = ((1 - x) ** (n - 1) * single).norm()
    scale = 2 ** (n - 1)
    return AlexanderReport(
        components=n,
        multivariable=multi,
        single_variable=single,
        determinant=abs(single.specialize([-1])),
        multi_norm=multi_norm,
        single_norm=single_norm,
        instanton_bound=_ceil_div(multi_norm, scale),
        single_variable_bound=_ceil_div(single_norm, scale),
    )


def instanton_lower_bound(d: LinkDiagram) -> int:
    return alexander_report(d).instanton_bound
