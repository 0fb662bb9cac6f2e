"""Multivariate Laurent polynomials with integer coefficients.

Terms are kept in a dict mapping exponent tuples (negative entries allowed)
to nonzero Python ints, so coefficients never overflow.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import InexactDivision

Exponent = tuple[int, ...]


class LaurentPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have {nvars} entries")
                if c:
                    clean[tuple(exp)] = int(c)
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, nvars: int) -> LaurentPoly:
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c: int) -> LaurentPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, nvars: int, exp: Iterable[int], c: int = 1) -> LaurentPoly:
        return cls(nvars, {tuple(exp): c})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> LaurentPoly:
        exp = [0] * nvars
        exp[i] = power
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, int]) -> LaurentPoly:
        # terms must already be free of zeros
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def norm(self) -> int:
        """Sum of absolute values of the coefficients."""
        return sum(abs(c) for c in self.terms.values())

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def min_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def max_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(max(e[i] for e in self.terms) for i in range(self.nvars))

    # arithmetic
    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable counts differ")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exponent, int] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (e, c), = self.terms.items()
            return LaurentPoly.monomial(self.nvars, [n * x for x in e], c if n % 2 else 1)
        result = LaurentPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def shift(self, exp: Iterable[int]) -> LaurentPoly:
        """Multiply by the monomial with exponent ``exp``."""
        exp = tuple(exp)
        return LaurentPoly._raw(
            self.nvars,
            {tuple(x + y for x, y in zip(e, exp)): c for e, c in self.terms.items()},
        )

    def substitute_all(self) -> LaurentPoly:
        """Send every variable to a single variable x: f(x, x, ..., x)."""
        out: dict[Exponent, int] = {}
        for e, c in self.terms.items():
            k = (sum(e),)
            out[k] = out.get(k, 0) + c
        return LaurentPoly._raw(1, {e: c for e, c in out.items() if c})

    def evaluate(self, values: Iterable) -> Fraction:
        values = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, k in zip(values, e):
                term *= v ** k
            total += term
        return total

    def specialize(self, values: Iterable[int]) -> int:
        """Evaluate at +-1 values; the result is always an integer."""
        values = list(values)
        if any(v not in (1, -1) for v in values):
            raise ValueError("specialize only accepts +-1; use evaluate")
        total = 0
        for e, c in self.terms.items():
            s = 1
            for v, k in zip(values, e):
                if v == -1 and k % 2:
                    s = -s
            total += s * c
        return total

    def leading_term(self) -> tuple[Exponent, int]:
        e = max(self.terms)
        return e, self.terms[e]

    def divide_exact(self, divisor: LaurentPoly) -> LaurentPoly:
        """Return q with q * divisor == self, or raise InexactDivision."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.nvars)
        # the quotient's Newton box is pinned by per-variable min/max exponents
        lo = [a - b for a, b in zip(self.min_exponents(), divisor.min_exponents())]
        hi = [a - b for a, b in zip(self.max_exponents(), divisor.max_exponents())]
        if any(l > h for l, h in zip(lo, hi)):
            raise InexactDivision("Newton boxes are incompatible")
        ge, gc = divisor.leading_term()
        rem = dict(self.terms)
        quotient: dict[Exponent, int] = {}
        while rem:
            re_ = max(rem)
            rc = rem[re_]
            if rc % gc:
                raise InexactDivision(f"coefficient {rc} not divisible by {gc}")
            qe = tuple(a - b for a, b in zip(re_, ge))
            if any(x < l or x > h for x, l, h in zip(qe, lo, hi)):
                raise InexactDivision("remainder term escapes the quotient box")
            qc = rc // gc
            quotient[qe] = qc
            for e, c in divisor.terms.items():
                k = tuple(a + b for a, b in zip(qe, e))
                v = rem.get(k, 0) - qc * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(self.nvars, quotient)

    def normalize_units(self) -> LaurentPoly:
        """Canonical representative of the class f * (+-monomial).

        Each variable's minimum exponent becomes 0 and the coefficient of the
        lexicographically smallest exponent is made positive.
        """
        if self.is_zero():
            return self
        m = self.min_exponents()
        p = self.shift([-x for x in m])
        first = min(p.terms)
        return -p if p.terms[first] < 0 else p

    def equal_up_to_units(self, other: LaurentPoly) -> bool:
        return self.normalize_units() == other.normalize_units()

    def coefficients(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items())

    # text form
    def to_text(self, names: list[str] | None = None) -> str:
        """Canonical text: terms in ascending lexicographic exponent order."""
        if self.is_zero():
            return "0"
        if names is None:
            names = ["x"] if self.nvars == 1 else [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in sorted(self.terms.items()):
            mon = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(names, e) if k
            )
            if not mon:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}*{mon}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {self.to_text()!r})"


def one_minus_vars_product(nvars: int) -> LaurentPoly:
    """(1 - x1)(1 - x2)...(1 - xn)."""
    out = LaurentPoly.const(nvars, 1)
    for i in range(nvars):
        out = out * (1 - LaurentPoly.var(nvars, i))
    return out


def determinant(matrix: list[list], zero, one):
    """Exact determinant by dynamic programming over used-column subsets.

    Division free, so it works over any commutative ring whose elements
    support ``+``, ``*`` and unary ``-``.  ``None`` entries are treated as
    structural zeros and are skipped, which keeps sparse Alexander matrices
    cheap: the frontier only holds column sets actually reachable.
    """
    n = len(matrix)
    if n == 0:
        return one
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    rows = []
    for row in matrix:
        nz = [(j, x) for j, x in enumerate(row) if x is not None and x != 0]
        rows.append(nz)
    # process sparsest rows first to keep the frontier small
    order = sorted(range(n), key=lambda r: len(rows[r]))
    sign_of_rows = _permutation_sign(order)
    frontier: dict[int, object] = {0: one}
    for r in order:
        nxt: dict[int, object] = {}
        for mask, val in frontier.items():
            for j, x in rows[r]:
                bit = 1 << j
                if mask & bit:
                    continue
                # inversions created by placing column j after the columns in mask
                higher = bin(mask >> (j + 1)).count("1")
                term = val * x
                if higher & 1:
                    term = -term
                key = mask | bit
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        frontier = {k: v for k, v in nxt.items() if v != 0}
        if not frontier:
            return zero
    result = frontier.get((1 << n) - 1, zero)
    return -result if sign_of_rows < 0 else result


def _permutation_sign(perm: list[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
