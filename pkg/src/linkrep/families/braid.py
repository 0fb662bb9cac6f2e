"""Closure of the 2-braid sigma_1^2 together with its braid axis."""

from __future__ import annotations

import math

from ..diagram import LinkDiagram
from .geometry import PlanarCrossing, band, pd_from_curves, resample


def sigma1_squared_with_axis() -> LinkDiagram:
    n = 240
    # two closed strands winding once around the origin, swapping radius twice
    strands = [
        [
            ((2.5 + s * 0.5 * math.sin(t)) * math.cos(t), (2.5 + s * 0.5 * math.sin(t)) * math.sin(t))
            for t in (2 * math.pi * (k + 0.37) / n for k in range(n))
        ]
        for s in (1, -1)
    ]
    # the axis: a thin loop from the centre out past both strands
    path = resample([(0.013, 0.5), (0.013, 4.0)], 0.05)
    axis, _ = band(path, 0.3, lambda k, p: 1.0)
    curves = strands + [axis]

    def a_over(cr: PlanarCrossing) -> bool:
        a, b = cr.a, cr.b
        x, _ = cr.point
        if 2 in (a.comp, b.comp):
            # left leg of the axis passes over both strands, right leg under
            return (a.comp == 2) == (x < 0)
        # the strand moving outward goes over: strand 0 at x > 0, strand 1 at x < 0
        return (a.comp == 0) == (x > 0)

    return pd_from_curves(curves, a_over)
