"""Exact unit quaternions used as representation values.

Two closed families are enough for everything we build:

* ``Q8Element``: the quaternion group {+-1, +-i, +-j, +-k}.
* ``DihedralQuat``: the binary dihedral circle.  ``Reflection(a)`` is
  cos(a*pi) i + sin(a*pi) j and ``Rotation(g)`` is cos(g*pi) + sin(g*pi) k,
  with a and g rational and reduced into [0, 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

AXES = ("1", "i", "j", "k")

# (axis, axis) -> (sign, axis)
_Q8_TABLE = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


@dataclass(frozen=True, order=True)
class Q8Element:
    sign: int
    axis: str

    def __post_init__(self):
        if self.sign not in (1, -1) or self.axis not in AXES:
            raise ValueError(f"not a Q8 element: {self.sign}{self.axis}")

    @classmethod
    def parse(cls, text: str) -> Q8Element:
        text = text.strip()
        sign = 1
        if text[:1] in "+-":
            sign = -1 if text[0] == "-" else 1
            text = text[1:]
        return cls(sign, text)

    def __mul__(self, other: Q8Element) -> Q8Element:
        if not isinstance(other, Q8Element):
            return NotImplemented
        s, ax = _Q8_TABLE[(self.axis, other.axis)]
        return Q8Element(self.sign * other.sign * s, ax)

    def __neg__(self) -> Q8Element:
        return Q8Element(-self.sign, self.axis)

    def inverse(self) -> Q8Element:
        return self if self.axis == "1" else -self

    @property
    def traceless(self) -> bool:
        return self.axis != "1"

    def commutes_with(self, other: Q8Element) -> bool:
        return q8_commute(self, other)

    def as_quaternion(self) -> tuple[float, float, float, float]:
        q = [0.0, 0.0, 0.0, 0.0]
        q[AXES.index(self.axis)] = float(self.sign)
        return tuple(q)

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "") + self.axis


ONE = Q8Element(1, "1")
I = Q8Element(1, "i")
J = Q8Element(1, "j")
K = Q8Element(1, "k")
Q8 = tuple(Q8Element(s, a) for a in AXES for s in (1, -1))


def q8_mul(a: Q8Element, b: Q8Element) -> Q8Element:
    return a * b


def q8_commute(a: Q8Element, b: Q8Element) -> bool:
    return a.axis == "1" or b.axis == "1" or a.axis == b.axis


def q8_product(elems) -> Q8Element:
    out = ONE
    for e in elems:
        out = out * e
    return out


def _mod2(x) -> Fraction:
    x = Fraction(x)
    return x - 2 * math.floor(x / 2)


@dataclass(frozen=True)
class DihedralQuat:
    kind: str  # "reflection" or "rotation"
    angle: Fraction

    def __init__(self, kind: str, angle):
        if kind not in ("reflection", "rotation"):
            raise ValueError(kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "angle", _mod2(angle))

    def __mul__(self, other: DihedralQuat) -> DihedralQuat:
        if not isinstance(other, DihedralQuat):
            return NotImplemented
        return dihedral_mul(self, other)

    def __neg__(self) -> DihedralQuat:
        return DihedralQuat(self.kind, self.angle + 1)

    def inverse(self) -> DihedralQuat:
        if self.kind == "reflection":
            return -self
        return Rotation(-self.angle)

    @property
    def traceless(self) -> bool:
        return self.kind == "reflection" or self.angle in (Fraction(1, 2), Fraction(3, 2))

    def commutes_with(self, other: DihedralQuat) -> bool:
        return self * other == other * self

    def as_quaternion(self) -> tuple[float, float, float, float]:
        c = math.cos(math.pi * self.angle)
        s = math.sin(math.pi * self.angle)
        if self.kind == "reflection":
            return (0.0, c, s, 0.0)
        return (c, 0.0, 0.0, s)

    def __str__(self) -> str:
        tag = "R" if self.kind == "reflection" else "T"
        return f"{tag}({self.angle})"


def Reflection(angle) -> DihedralQuat:
    return DihedralQuat("reflection", angle)


def Rotation(angle) -> DihedralQuat:
    return DihedralQuat("rotation", angle)


def dihedral_mul(a: DihedralQuat, b: DihedralQuat) -> DihedralQuat:
    if a.kind == "rotation" and b.kind == "rotation":
        return Rotation(a.angle + b.angle)
    if a.kind == "rotation":
        return Reflection(b.angle + a.angle)
    if b.kind == "rotation":
        return Reflection(a.angle - b.angle)
    return Rotation(1 - (b.angle - a.angle))


def quat_mul(p, q) -> tuple[float, float, float, float]:
    """Hamilton product of float 4-tuples (w, x, y, z)."""
    w1, x1, y1, z1 = p
    w2, x2, y2, z2 = q
    return (
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    )


def conjugate_by(g, x):
    """g x g^-1 for either exact quaternion family."""
    return g * x * g.inverse()
