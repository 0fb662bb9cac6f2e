"""Closed chains of unknots, optionally with a twist region on the last ring.

Layout: rings K_1..K_{u-1} are circles in a row along the x-axis, adjacent
ones overlapping.  The last ring K_u is a long thin band that starts inside
K_1, runs left, down, along the bottom, up and ends inside K_{u-1}; its two
edges twist around each other |v| times along the bottom.
"""

from __future__ import annotations

import math

from ..diagram import LinkDiagram
from ..errors import UTooSmall
from .geometry import PlanarCrossing, band, chaikin, circle, pd_from_curves, resample

RING_RADIUS = 1.25
SPACING = 2.0
BAND_WIDTH = 0.25


def _band_curve(u: int, twists: int):
    right = SPACING * (u - 1)
    inset = RING_RADIUS - 0.45
    corners = [
        (SPACING - inset, 0.0),
        (-1.0, 0.0),
        (-1.0, -3.0),
        (right + 2.0, -3.0),
        (right + 2.0, 0.0),
        (right + inset, 0.0),
    ]
    path = resample(chaikin(corners, rounds=5), 0.04)
    x0, x1 = 0.5, right + 0.5
    bottom = [k for k, p in enumerate(path) if p[1] < -2.9 and x0 <= p[0] <= x1]
    k0, k1 = bottom[0], bottom[-1]
    n = abs(twists)

    def sigma(k, p):
        if k <= k0:
            return 1.0
        if k >= k1:
            return float((-1) ** n)
        return math.cos(math.pi * n * (k - k0) / (k1 - k0))

    return band(path, BAND_WIDTH, sigma)


def necklace(
    u: int,
    v: int = 0,
    clasp_flips: frozenset[int] = frozenset(),
) -> LinkDiagram:
    """u-ring chain; ``clasp_flips`` lists clasps k (between K_k and K_{k+1},
    with k = u meaning the K_u-K_1 clasp) whose two crossings are switched."""
    if u < 3:
        raise UTooSmall(f"u must be at least 3, got {u}")
    rings = [circle((SPACING * k, 0.0), RING_RADIUS) for k in range(1, u)]
    last, _ = _band_curve(u, v)
    curves = rings + [last]
    lc = u - 1  # index of K_u

    def clasp_index(c1: int, c2: int) -> int:
        lo, hi = min(c1, c2), max(c1, c2)
        if hi == lc and lo == 0:
            return u
        if hi == lc:
            return u - 1
        return lo + 1

    twist_xs = []

    def a_over(cr: PlanarCrossing) -> bool:
        a, b = cr.a, cr.b
        x, y = cr.point
        if a.comp == b.comp == lc:
            j = sum(1 for t in twist_xs if t < x)
            first = a if a.pos < b.pos else b
            over_first = (j % 2 == 0) == (v > 0)
            return (a is first) == over_first
        k = clasp_index(a.comp, b.comp)
        lo = min(a.comp, b.comp)
        hi = max(a.comp, b.comp)
        if hi == lc and lo == 0:
            top = hi  # band over K_1 on the upper strand
        elif hi == lc:
            top = lo  # K_{u-1} over the band on the upper strand
        else:
            top = lo
        on_top = top if y > 0 else (hi if top == lo else lo)
        if k in clasp_flips:
            on_top = hi if on_top == lo else lo
        return a.comp == on_top

    from .geometry import find_crossings

    for cr in find_crossings(curves):
        if cr.a.comp == cr.b.comp == lc:
            twist_xs.append(cr.point[0])
    return pd_from_curves(curves, a_over)
