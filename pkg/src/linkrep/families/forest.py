"""Forests of unknots: one round unknot per vertex, a clasp per edge."""

from __future__ import annotations

import math
from collections import deque

from ..diagram import LinkDiagram, SimpleGraph
from ..errors import InternalInvariantViolation, NotAForest
from ..graphs import is_forest
from .geometry import PlanarCrossing, circle, pd_from_curves


def _figure_eight(center, size: float) -> list[tuple[float, float]]:
    cx, cy = center
    n = 64
    return [
        (cx + size * math.sin(2 * math.pi * k / n + 0.01), cy + 0.5 * size * math.sin(4 * math.pi * k / n + 0.02))
        for k in range(n)
    ]


def _layout_tree(g: SimpleGraph, root: int, origin, curves: dict) -> None:
    """Children sit on the parent's circle inside an outward-facing window."""
    adj = g.adjacency
    radius = {root: 1.0}
    center = {root: origin}
    heading = {root: None}
    queue = deque([root])
    seen = {root}
    while queue:
        v = queue.popleft()
        kids = sorted(w for w in adj[v] if w not in seen)
        if not kids:
            continue
        if heading[v] is None:
            window, mid = 2 * math.pi, 0.0
            step = window / len(kids)
            angles = [mid + 0.3 + step * i for i in range(len(kids))]
        else:
            window, mid = 2 * math.pi / 3, heading[v]
            step = window / len(kids)
            angles = [mid - window / 2 + step * (i + 0.5) for i in range(len(kids))]
        ratio = min(0.3, 0.5 * math.sin(min(step, math.pi) / 2))
        for w, ang in zip(kids, angles):
            seen.add(w)
            cx = center[v][0] + radius[v] * math.cos(ang)
            cy = center[v][1] + radius[v] * math.sin(ang)
            center[w] = (cx, cy)
            radius[w] = radius[v] * ratio
            heading[w] = ang
            queue.append(w)
    for v in seen:
        curves[v] = circle(center[v], radius[v], n=96)


def _components(g: SimpleGraph) -> list[list[int]]:
    adj = g.adjacency
    seen, out = set(), []
    for s in range(g.vertex_count):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def hopf_forest(f: SimpleGraph) -> LinkDiagram:
    """Connected sums and split unions of Hopf links with linking graph ``f``.

    Vertex k becomes component k.  Isolated vertices are figure-eight
    curves, i.e. unknots with a single kink.
    """
    if not is_forest(f):
        raise NotAForest("graph has a cycle")
    if f.vertex_count == 0:
        raise NotAForest("empty graph")
    curves: dict[int, list] = {}
    for t, comp in enumerate(_components(f)):
        origin = (4.0 * t, 0.0)
        if len(comp) == 1:
            curves[comp[0]] = _figure_eight(origin, 0.8)
        else:
            _layout_tree(f, comp[0], origin, curves)
    ordered = [curves[v] for v in range(f.vertex_count)]

    def a_over(cr: PlanarCrossing) -> bool:
        a, b = cr.a, cr.b
        if a.comp == b.comp:
            return a.pos < b.pos
        if not f.has_edge(a.comp, b.comp):
            raise InternalInvariantViolation(f"layout collision between {a.comp} and {b.comp}")
        # the two clasp points lie on opposite sides of the line of centers
        lo, hi = sorted((a.comp, b.comp))
        c0, c1 = _center(ordered[lo]), _center(ordered[hi])
        side = (c1[0] - c0[0]) * (cr.point[1] - c0[1]) - (c1[1] - c0[1]) * (cr.point[0] - c0[0])
        return (a.comp == lo) == (side > 0)

    return pd_from_curves(ordered, a_over)


def _center(curve) -> tuple[float, float]:
    return (sum(p[0] for p in curve) / len(curve), sum(p[1] for p in curve) / len(curve))


def chain(n: int) -> LinkDiagram:
    """Linear chain of n unknots (the path graph)."""
    if n < 1:
        raise NotAForest("chain needs at least one component")
    return hopf_forest(SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)]))
