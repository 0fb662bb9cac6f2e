"""Non-abelian meridian-traceless representations into SL(2, Z/p).

A found representation is a short, mechanically checkable certificate that
a link is not the unknot, the Hopf link or a connected sum of Hopf links.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .diagram import LinkDiagram
from .errors import BudgetExhausted, ExhaustedSearchSpace, InvalidInput, NotOddPrime
from .exactmath import Q8Element
from .presentation import wirtinger


@dataclass(frozen=True, order=True)
class Mat2p:
    p: int
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, p: int, a: int, b: int, c: int, d: int) -> Mat2p:
        return cls(p, a % p, b % p, c % p, d % p)

    def __mul__(self, o: Mat2p) -> Mat2p:
        p = self.p
        return Mat2p(
            p,
            (self.a * o.a + self.b * o.c) % p,
            (self.a * o.b + self.b * o.d) % p,
            (self.c * o.a + self.d * o.c) % p,
            (self.c * o.b + self.d * o.d) % p,
        )

    def __neg__(self) -> Mat2p:
        return Mat2p.of(self.p, -self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> Mat2p:
        # only valid for determinant one
        return Mat2p.of(self.p, self.d, -self.b, -self.c, self.a)

    @property
    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    @property
    def trace(self) -> int:
        return (self.a + self.d) % self.p

    @property
    def traceless(self) -> bool:
        return self.trace == 0

    def commutes_with(self, o: Mat2p) -> bool:
        return self * o == o * self

    def entries(self) -> list[int]:
        return [self.a, self.b, self.c, self.d]

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, int(n**0.5) + 1))


def _check_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


def traceless_elements(p: int) -> list[Mat2p]:
    """All trace-0, determinant-1 matrices mod p, in lexicographic order."""
    _check_prime(p)
    out = []
    for a in range(p):
        # -a^2 - bc = 1
        target = (-1 - a * a) % p
        for b in range(p):
            for c in range(p):
                if (b * c) % p == target:
                    out.append(Mat2p(p, a, b, c, (-a) % p))
    return out


def canonical_first(p: int) -> Mat2p:
    return Mat2p.of(p, 0, 1, -1, 0)


# p = 3: the traceless class is the image of +-i, +-j, +-k
_SL23 = {
    "i": (0, 1, -1, 0),
    "j": (1, 1, 1, -1),
    "k": (1, -1, -1, -1),
}


def q8_to_sl23(x: Q8Element) -> Mat2p:
    if x.axis == "1":
        m = Mat2p.of(3, 1, 0, 0, 1)
    else:
        m = Mat2p.of(3, *_SL23[x.axis])
    return m if x.sign > 0 else -m


def sl23_to_q8(m: Mat2p) -> Q8Element:
    for axis in "1ijk":
        for sign in (1, -1):
            q = Q8Element(sign, axis)
            if q8_to_sl23(q) == m:
                return q
    raise InvalidInput(f"{m} is not in the image of Q8")


@dataclass(frozen=True)
class Certificate:
    p: int
    arc_values: tuple[Mat2p, ...]
    witness: tuple[int, int]

    def to_json(self) -> dict:
        return {"p": self.p, "arcs": [m.entries() for m in self.arc_values], "witness": list(self.witness)}

    @classmethod
    def from_json(cls, data: dict) -> Certificate:
        p = int(data["p"])
        arcs = tuple(Mat2p.of(p, *map(int, e)) for e in data["arcs"])
        return cls(p, arcs, tuple(data["witness"]))  # type: ignore[arg-type]


def _relation_holds(o: Mat2p, a: Mat2p, c: Mat2p, sign: int) -> bool:
    return c == (o * a * o.inverse() if sign > 0 else o.inverse() * a * o)


def verify_certificate(d: LinkDiagram, cert: Certificate) -> bool:
    p = cert.p
    if p < 3 or not is_prime(p):
        return False
    pres = wirtinger(d)
    vals = cert.arc_values
    if len(vals) != len(pres.generators):
        return False
    for m in vals:
        if m.p != p or m.det != 1 or not m.traceless:
            return False
    for r in pres.relations:
        if not _relation_holds(vals[r.over_arc], vals[r.in_arc], vals[r.out_arc], r.sign):
            return False
    x, y = cert.witness
    if not (0 <= x < len(vals) and 0 <= y < len(vals)):
        return False
    return not vals[x].commutes_with(vals[y])


def _witness(vals: Sequence[Mat2p]) -> tuple[int, int] | None:
    for x, y in itertools.combinations(range(len(vals)), 2):
        if not vals[x].commutes_with(vals[y]):
            return (x, y)
    return None


class _Search:
    def __init__(self, d: LinkDiagram, p: int, budget: int | None):
        self.pres = wirtinger(d)
        self.n = len(self.pres.generators)
        self.p = p
        self.pool = traceless_elements(p)
        self.budget = budget
        self.nodes = 0
        self.rels = self.pres.relations
        self.by_arc: list[list[int]] = [[] for _ in range(self.n)]
        for k, r in enumerate(self.rels):
            for a in {r.over_arc, r.in_arc, r.out_arc}:
                self.by_arc[a].append(k)

    def propagate(self, vals: list[Mat2p | None], start: int) -> list[int] | None:
        """Fill forced values; returns the arcs set, or None on a conflict."""
        assigned = []
        queue = [start]
        while queue:
            arc = queue.pop()
            for k in self.by_arc[arc]:
                r = self.rels[k]
                o, a, c = vals[r.over_arc], vals[r.in_arc], vals[r.out_arc]
                if o is None:
                    continue
                if a is not None and c is not None:
                    if not _relation_holds(o, a, c, r.sign):
                        self._undo(vals, assigned)
                        return None
                    continue
                if a is not None:
                    target, value = r.out_arc, (o * a * o.inverse() if r.sign > 0 else o.inverse() * a * o)
                elif c is not None:
                    target, value = r.in_arc, (o.inverse() * c * o if r.sign > 0 else o * c * o.inverse())
                else:
                    continue
                vals[target] = value
                assigned.append(target)
                queue.append(target)
        return assigned

    @staticmethod
    def _undo(vals, assigned):
        for a in assigned:
            vals[a] = None

    def choose(self, vals) -> int:
        best, score = -1, -1
        for arc in range(self.n):
            if vals[arc] is not None:
                continue
            s = 0
            for k in self.by_arc[arc]:
                r = self.rels[k]
                s += sum(vals[x] is not None for x in (r.over_arc, r.in_arc, r.out_arc))
            if s > score:
                best, score = arc, s
        return best

    def assign(self, vals, arc, value) -> list[int] | None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(f"node budget {self.budget} exhausted at p={self.p}")
        vals[arc] = value
        forced = self.propagate(vals, arc)
        if forced is None:
            vals[arc] = None
            return None
        # a fresh over-arc may now pin earlier in/out pairs
        for a in list(forced):
            more = self.propagate(vals, a)
            if more is None:
                self._undo(vals, forced)
                vals[arc] = None
                return None
            forced.extend(more)
        return [arc] + forced

    def run(self) -> Iterator[list[Mat2p]]:
        vals: list[Mat2p | None] = [None] * self.n
        first = self.assign(vals, 0, canonical_first(self.p))
        if first is None:
            return
        yield from self._rec(vals)

    def _rec(self, vals) -> Iterator[list[Mat2p]]:
        arc = self.choose(vals)
        if arc < 0:
            yield list(vals)
            return
        for value in self.pool:
            done = self.assign(vals, arc, value)
            if done is None:
                continue
            yield from self._rec(vals)
            self._undo(vals, done)


def search_certificate(d: LinkDiagram, p: int, node_budget: int | None = 1_000_000) -> Certificate:
    """First non-abelian solution in search order.

    Raises ``ExhaustedSearchSpace`` when the whole space was searched (no
    such representation exists at this p, since every traceless element is
    conjugate to the fixed first value) and ``BudgetExhausted`` when the
    node budget ran out first.
    """
    _check_prime(p)
    search = _Search(d, p, node_budget)
    for vals in search.run():
        w = _witness(vals)
        if w is None:
            continue
        cert = Certificate(p, tuple(vals), w)
        if not verify_certificate(d, cert):
            raise AssertionError("search produced an invalid certificate")
        return cert
    raise ExhaustedSearchSpace(f"no non-abelian traceless representation mod {p}")


def brute_force_exists(d: LinkDiagram, p: int) -> bool:
    """Exhaustive check over all assignments (tiny diagrams only)."""
    pres = wirtinger(d)
    pool = traceless_elements(p)
    for vals in itertools.product(pool, repeat=len(pres.generators)):
        if all(_relation_holds(vals[r.over_arc], vals[r.in_arc], vals[r.out_arc], r.sign) for r in pres.relations):
            if _witness(vals) is not None:
                return True
    return False
