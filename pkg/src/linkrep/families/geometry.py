"""PD codes from closed planar curves plus an over/under rule.

Curves are closed polylines in the plane (first point not repeated).  Every
transverse intersection between two non-adjacent segments becomes a
crossing; a caller-supplied rule decides which strand passes over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from ..diagram import LinkDiagram
from ..errors import InternalInvariantViolation

Point = tuple[float, float]


@dataclass(frozen=True)
class Pass:
    comp: int
    pos: float  # segment index + fraction along the segment
    direction: Point


@dataclass(frozen=True)
class PlanarCrossing:
    point: Point
    a: Pass
    b: Pass


def _cross(u: Point, v: Point) -> float:
    return u[0] * v[1] - u[1] * v[0]


def _segments(curve: Sequence[Point]):
    n = len(curve)
    for i in range(n):
        p, q = curve[i], curve[(i + 1) % n]
        yield i, p, (q[0] - p[0], q[1] - p[1])


def find_crossings(curves: Sequence[Sequence[Point]]) -> list[PlanarCrossing]:
    segs = []
    for c, curve in enumerate(curves):
        for i, p, d in _segments(curve):
            lo = (min(p[0], p[0] + d[0]), min(p[1], p[1] + d[1]))
            hi = (max(p[0], p[0] + d[0]), max(p[1], p[1] + d[1]))
            segs.append((c, i, len(curve), p, d, lo, hi))
    segs.sort(key=lambda s: s[5][0])
    out = []
    for x, (c1, i1, n1, p1, d1, lo1, hi1) in enumerate(segs):
        for c2, i2, n2, p2, d2, lo2, hi2 in segs[x + 1 :]:
            if lo2[0] > hi1[0]:
                break
            if lo2[1] > hi1[1] or hi2[1] < lo1[1]:
                continue
            if c1 == c2 and (abs(i1 - i2) <= 1 or abs(i1 - i2) == n1 - 1):
                continue
            den = _cross(d1, d2)
            if abs(den) < 1e-12:
                continue
            w = (p2[0] - p1[0], p2[1] - p1[1])
            s = _cross(w, d2) / den
            t = _cross(w, d1) / den
            if 0.0 <= s < 1.0 and 0.0 <= t < 1.0:
                pt = (p1[0] + s * d1[0], p1[1] + s * d1[1])
                out.append(PlanarCrossing(pt, Pass(c1, i1 + s, d1), Pass(c2, i2 + t, d2)))
    out.sort(key=lambda cr: (min(cr.a.comp, cr.b.comp), min(cr.a.pos, cr.b.pos)))
    return out


def pd_from_curves(
    curves: Sequence[Sequence[Point]],
    a_over: Callable[[PlanarCrossing], bool],
) -> LinkDiagram:
    """Assemble a diagram; ``a_over(cr)`` says whether pass ``cr.a`` is on top."""
    crossings = find_crossings(curves)
    passes: list[list[tuple[float, int]]] = [[] for _ in curves]
    for ci, cr in enumerate(crossings):
        passes[cr.a.comp].append((cr.a.pos, ci))
        passes[cr.b.comp].append((cr.b.pos, ci))
    index: dict[tuple[int, float], int] = {}
    offsets = []
    total = 0
    for c, lst in enumerate(passes):
        if len(lst) == 0:
            raise InternalInvariantViolation(f"curve {c} has no crossings")
        lst.sort()
        for j, (pos, _) in enumerate(lst):
            index[(c, pos)] = j
        offsets.append(total)
        total += len(lst)

    def edges(p: Pass) -> tuple[int, int]:
        k = len(passes[p.comp])
        j = index[(p.comp, p.pos)]
        return offsets[p.comp] + j + 1, offsets[p.comp] + (j + 1) % k + 1

    quads = []
    for cr in crossings:
        over, under = (cr.a, cr.b) if a_over(cr) else (cr.b, cr.a)
        u_in, u_out = edges(under)
        o_in, o_out = edges(over)
        if _cross(under.direction, over.direction) > 0:
            quads.append((u_in, o_in, u_out, o_out))
        else:
            quads.append((u_in, o_out, u_out, o_in))
    return LinkDiagram.from_quads(quads)


def pd_from_space_curves(curves: Sequence[Sequence[tuple[float, float, float]]]) -> LinkDiagram:
    """Project 3D polylines to the xy-plane; the higher strand goes over."""
    flat = [[(x, y) for x, y, _ in c] for c in curves]

    def height(p: Pass) -> float:
        c = curves[p.comp]
        i = int(p.pos)
        f = p.pos - i
        return (1 - f) * c[i][2] + f * c[(i + 1) % len(c)][2]

    return pd_from_curves(flat, lambda cr: height(cr.a) > height(cr.b))


def circle(center: Point, radius: float, n: int = 96, phase: float = 0.0137) -> list[Point]:
    cx, cy = center
    return [
        (cx + radius * math.cos(phase + 2 * math.pi * k / n), cy + radius * math.sin(phase + 2 * math.pi * k / n))
        for k in range(n)
    ]


def chaikin(points: Sequence[Point], rounds: int = 5, closed: bool = False) -> list[Point]:
    pts = list(points)
    for _ in range(rounds):
        out = [] if closed else [pts[0]]
        n = len(pts)
        last = n if closed else n - 1
        for i in range(last):
            p, q = pts[i], pts[(i + 1) % n]
            out.append((0.75 * p[0] + 0.25 * q[0], 0.75 * p[1] + 0.25 * q[1]))
            out.append((0.25 * p[0] + 0.75 * q[0], 0.25 * p[1] + 0.75 * q[1]))
        if not closed:
            out.append(pts[-1])
        pts = out
    return pts


def resample(path: Sequence[Point], step: float) -> list[Point]:
    """Open polyline resampled at roughly uniform arc length."""
    out = [path[0]]
    carry = 0.0
    for p, q in zip(path, path[1:]):
        seg = math.dist(p, q)
        s = step - carry
        while s <= seg:
            f = s / seg
            out.append((p[0] + f * (q[0] - p[0]), p[1] + f * (q[1] - p[1])))
            s += step
        carry = seg - (s - step)
    if math.dist(out[-1], path[-1]) > 1e-9:
        out.append(path[-1])
    return out


def band(
    centerline: Sequence[Point],
    width: float,
    sigma: Callable[[int, Point], float],
) -> tuple[list[Point], int]:
    """Closed curve running out along one edge of a band and back along the other.

    ``sigma(k, point)`` in [-1, 1] gives the signed offset of the outgoing
    strand at sample k; the returning strand sits at the opposite offset, so
    the strands cross wherever sigma changes sign.  Returns the curve and the
    number of samples on the outgoing strand.
    """
    n = len(centerline)
    normals = []
    for k in range(n):
        p = centerline[max(k - 1, 0)]
        q = centerline[min(k + 1, n - 1)]
        dx, dy = q[0] - p[0], q[1] - p[1]
        L = math.hypot(dx, dy)
        normals.append((-dy / L, dx / L))
    out, back = [], []
    for k, (c, nrm) in enumerate(zip(centerline, normals)):
        s = sigma(k, c)
        out.append((c[0] + width * s * nrm[0], c[1] + width * s * nrm[1]))
        back.append((c[0] - width * s * nrm[0], c[1] - width * s * nrm[1]))

    def cap(k: int, ahead: float) -> list[Point]:
        # half circle from offset +s*w to -s*w, bulging along +-tangent
        c, (nx, ny) = centerline[k], normals[k]
        tx, ty = ny, -nx
        s = sigma(k, c)
        pts = []
        for m in range(1, 8):
            th = math.pi * m / 8
            r = width * s * math.cos(th)
            f = ahead * width * math.sin(th)
            pts.append((c[0] + r * nx + f * tx, c[1] + r * ny + f * ty))
        return pts

    end_cap = cap(n - 1, 1.0)
    start_cap = cap(0, -1.0)[::-1]
    return out + end_cap + back[::-1] + start_cap, len(out)


