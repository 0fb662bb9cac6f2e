"""Linking-graph classification.

Every finite simple graph is a forest, has an induced cycle of length other
than 4, has an induced copy of G0 (two 4-cycles sharing an edge), or admits a
non-constant map to {i, j, k} where each vertex commutes with the product of
its neighbours.  ``classify`` finds a witness for the first of these that
applies; witnesses are checked before they are returned.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .diagram import SimpleGraph
from .errors import InternalExhaustion
from .exactmath import I, J, K, Q8Element, q8_commute, q8_product

AXIS = {"i": I, "j": J, "k": K}

# two 4-cycles sharing the edge 3-5 (labels 1..6 shifted down by one)
G0_EDGES = ((0, 2), (0, 5), (2, 3), (3, 5), (3, 4), (4, 1), (1, 5))


def g0_graph() -> SimpleGraph:
    return SimpleGraph.from_edges(6, G0_EDGES)


def _adj(g: SimpleGraph, vertices=None) -> dict[int, set[int]]:
    vs = range(g.vertex_count) if vertices is None else vertices
    keep = set(vs)
    return {v: set(g.neighbors(v)) & keep for v in vs}


def _components(adj: Mapping[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in sorted(adj):
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


def _edge_count(adj: Mapping[int, set[int]]) -> int:
    return sum(len(n) for n in adj.values()) // 2


def _is_forest(adj: Mapping[int, set[int]]) -> bool:
    return _edge_count(adj) == len(adj) - len(_components(adj))


def _is_tree(adj: Mapping[int, set[int]]) -> bool:
    return _is_forest(adj) and len(_components(adj)) <= 1


def is_forest(g: SimpleGraph) -> bool:
    return _is_forest(_adj(g))


def is_induced_cycle(g: SimpleGraph, cycle: Sequence[int]) -> bool:
    n = len(cycle)
    if n < 3 or len(set(cycle)) != n:
        return False
    if not all(g.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)):
        return False
    return len(g.induced(cycle)) == n


# -- induced cycles --------------------------------------------------------------


def _shortest_odd_cycle(adj: Mapping[int, set[int]]) -> list[int] | None:
    best = None
    for s in sorted(adj):
        dist, parent = {s: 0}, {s: None}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
        for v in sorted(adj):
            for w in sorted(adj[v]):
                if v < w and v in dist and w in dist and dist[v] == dist[w]:
                    length = 2 * dist[v] + 1
                    if best is None or length < len(best):
                        left, right = [v], [w]
                        while parent[left[-1]] is not None:
                            left.append(parent[left[-1]])
                        while parent[right[-1]] is not None:
                            right.append(parent[right[-1]])
                        if set(left[:-1]) & set(right[:-1]):
                            continue
                        best = left[::-1] + right[:-1]
    return best


def _induced_cycles_through_min(adj: Mapping[int, set[int]], s: int) -> Iterator[list[int]]:
    """Induced cycles whose smallest vertex is s, by DFS over induced paths."""
    path = [s]
    on_path = {s}

    def extend():
        v = path[-1]
        for w in sorted(adj[v]):
            if w <= s or w in on_path:
                continue
            # w may touch only v (and s when it closes the cycle)
            if any(u in adj[w] for u in path[1:-1]):
                continue
            if len(path) >= 2 and s in adj[w]:
                # each cycle is met in both directions; keep one
                if path[1] < w:
                    yield path + [w]
                continue
            path.append(w)
            on_path.add(w)
            yield from extend()
            path.pop()
            on_path.discard(w)

    yield from extend()


def induced_cycles(g: SimpleGraph) -> Iterator[list[int]]:
    adj = _adj(g)
    for s in sorted(adj):
        yield from _induced_cycles_through_min(adj, s)


def find_induced_cycle_ne4(g: SimpleGraph) -> list[int] | None:
    adj = _adj(g)
    odd = _shortest_odd_cycle(adj)
    if odd is not None:
        return odd
    for s in sorted(adj):
        for cyc in _induced_cycles_through_min(adj, s):
            if len(cyc) != 4:
                return cyc
    return None


# -- induced G0 ------------------------------------------------------------------


def _g0_maps(g: SimpleGraph, subset: Sequence[int]) -> dict[int, int] | None:
    target = {frozenset(e) for e in G0_EDGES}
    deg = {v: sum(1 for w in subset if g.has_edge(v, w)) for v in subset}
    if sorted(deg.values()) != [2, 2, 2, 2, 3, 3]:
        return None
    for perm in itertools.permutations(range(6)):
        m = dict(zip(subset, perm))
        if any(deg[v] != (3 if m[v] in (3, 5) else 2) for v in subset):
            continue
        if all(frozenset((m[a], m[b])) in target for a, b in g.induced(subset)):
            return m
    return None


def find_induced_g0(g: SimpleGraph) -> dict[int, int] | None:
    """Map from six vertices of ``g`` onto G0's labels 0..5, or None."""
    if g.vertex_count < 6:
        return None
    cand = [v for v in range(g.vertex_count) if g.degree(v) >= 2]
    for subset in itertools.combinations(cand, 6):
        if len(g.induced(subset)) != 7:
            continue
        m = _g0_maps(g, subset)
        if m is not None:
            return m
    return None


def verify_g0_map(g: SimpleGraph, m: Mapping[int, int]) -> bool:
    if len(m) != 6 or sorted(m.values()) != list(range(6)):
        return False
    target = {frozenset(e) for e in G0_EDGES}
    got = {frozenset((m[a], m[b])) for a, b in g.induced(list(m))}
    return got == target


# -- {i, j, k} colorings ---------------------------------------------------------


@dataclass(frozen=True)
class IjkColoring:
    values: tuple[Q8Element, ...]
    method: str = "constructive"

    @classmethod
    def from_axes(cls, axes: str | Sequence[str], method: str = "given") -> IjkColoring:
        return cls(tuple(AXIS[a] for a in axes), method)

    def axes(self) -> str:
        return "".join(v.axis for v in self.values)

    def to_json(self) -> dict:
        return {"values": [str(v) for v in self.values], "method": self.method}


def verify_coloring(g: SimpleGraph, phi: IjkColoring | Sequence[Q8Element]) -> bool:
    values = phi.values if isinstance(phi, IjkColoring) else tuple(phi)
    if len(values) != g.vertex_count:
        return False
    if any(v.sign != 1 or v.axis not in "ijk" for v in values):
        return False
    if len({v.axis for v in values}) < 2:
        return False
    for v in range(g.vertex_count):
        prod = q8_product(values[w] for w in sorted(g.neighbors(v)))
        if not q8_commute(values[v], prod):
            return False
    return True


def _commuting_axis(elems) -> str:
    p = q8_product(elems)
    return "i" if p.axis == "1" else p.axis


def _construct(adj: dict[int, set[int]]) -> dict[int, str] | None:
    """Follows the inductive proof; returns None if its hypotheses fail."""
    comps = _components(adj)
    if len(comps) > 1:
        for comp in comps:
            sub = {v: adj[v] & set(comp) for v in comp}
            if not _is_forest(sub):
                inner = _construct(sub)
                if inner is None:
                    return None
                other = "j" if inner[min(comp)] == "i" else "i"
                return {v: inner.get(v, other) for v in adj}
        # a disconnected forest: one component i, the rest j
        first = set(comps[0])
        return {v: "i" if v in first else "j" for v in adj}
    if _is_forest(adj):
        return None

    # a vertex of degree <= 1 copies its neighbour
    for v in sorted(adj):
        if len(adj[v]) <= 1:
            rest = {w: adj[w] - {v} for w in adj if w != v}
            inner = _construct(rest)
            if inner is None:
                return None
            (nb,) = adj[v]
            inner[v] = inner[nb]
            return inner

    side = _bipartition(adj)
    if side is None:
        return None
    v1 = sorted(v for v in adj if side[v] == side[min(adj)])
    best = None
    for x0, y0 in itertools.combinations(v1, 2):
        common = adj[x0] & adj[y0]
        if best is None or len(common) > len(best[2]):
            best = (x0, y0, common)
    if best is None:
        return None
    A = best[2]
    B = [v for v in v1 if A <= adj[v]]
    if len(A) < 2 or len(B) < 2:
        return None

    # cut vertex: some x in B sees more than A
    for x in B:
        if A < adj[x]:
            rest = {w: adj[w] - {x} for w in adj if w != x}
            pieces = _components(rest)
            if len(pieces) < 2:
                return None
            for piece in pieces:
                verts = set(piece) | {x}
                sub = {w: adj[w] & verts for w in verts}
                if not _is_forest(sub):
                    inner = _construct(sub)
                    if inner is None:
                        return None
                    return {w: inner.get(w, inner[x]) for w in adj}
            return None

    x1, x2 = B[0], B[1]
    rest = {w: adj[w] - {x1, x2} for w in adj if w not in (x1, x2)}
    if not _is_tree(rest):
        inner = _construct(rest)
        if inner is None:
            return None
        ax = _commuting_axis(AXIS[inner[a]] for a in sorted(A))
        inner[x1] = inner[x2] = ax
        return inner

    # complete bipartite: each side multiplies to +-1
    v2 = sorted(v for v in adj if v not in set(v1))
    if any(adj[a] != set(v2) for a in v1) or len(v1) < 2 or len(v2) < 2:
        return None
    out = {}
    for part, base in ((v1, "i"), (v2, "j")):
        if len(part) % 2 == 0:
            axes = [base] * len(part)
        else:
            axes = ["i", "j", "k"] + ["i"] * (len(part) - 3)
        out.update(zip(part, axes))
    return out


def _bipartition(adj: Mapping[int, set[int]]) -> dict[int, int] | None:
    side: dict[int, int] = {}
    for s in sorted(adj):
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return side


def _search(g: SimpleGraph) -> IjkColoring | None:
    """Backtracking over {i, j, k}^V; the first vertex is fixed to i."""
    n = g.vertex_count
    if n < 2:
        return None
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    # vertex v can be checked once v and all its neighbours are assigned
    ready_at = [max([v] + adj[v]) for v in range(n)]
    checks = [[v for v in range(n) if ready_at[v] == t] for t in range(n)]
    vals: list[Q8Element] = []

    def ok(t):
        for v in checks[t]:
            if not q8_commute(vals[v], q8_product(vals[w] for w in adj[v])):
                return False
        return True

    def rec(t):
        if t == n:
            return len({x.axis for x in vals}) > 1
        choices = "i" if t == 0 else "ijk"
        for a in choices:
            vals.append(AXIS[a])
            if ok(t) and rec(t + 1):
                return True
            vals.pop()
        return False

    if rec(0):
        return IjkColoring(tuple(vals), "search")
    return None


def ijk_coloring(g: SimpleGraph) -> IjkColoring | None:
    built = _construct(_adj(g)) if g.vertex_count else None
    if built is not None:
        phi = IjkColoring(tuple(AXIS[built[v]] for v in range(g.vertex_count)), "constructive")
        if verify_coloring(g, phi):
            return phi
    return _search(g)


def brute_force_colorings(g: SimpleGraph) -> Iterator[tuple[Q8Element, ...]]:
    for axes in itertools.product("ijk", repeat=g.vertex_count):
        vals = tuple(AXIS[a] for a in axes)
        if verify_coloring(g, vals):
            yield vals


# -- classification --------------------------------------------------------------


@dataclass(frozen=True)
class GraphVerdict:
    variant: str  # Tree | InducedCycle | InducedG0 | Coloring
    cycle: tuple[int, ...] | None = None
    g0_map: tuple[tuple[int, int], ...] | None = None
    coloring: IjkColoring | None = None

    def verify(self, g: SimpleGraph) -> bool:
        if self.variant == "Tree":
            return is_forest(g)
        if self.variant == "InducedCycle":
            return self.cycle is not None and len(self.cycle) != 4 and is_induced_cycle(g, self.cycle)
        if self.variant == "InducedG0":
            return self.g0_map is not None and verify_g0_map(g, dict(self.g0_map))
        if self.variant == "Coloring":
            return self.coloring is not None and verify_coloring(g, self.coloring)
        return False

    def to_json(self) -> dict:
        out: dict = {"variant": self.variant}
        if self.cycle is not None:
            out["cycle"] = list(self.cycle)
            out["length"] = len(self.cycle)
        if self.g0_map is not None:
            out["g0_map"] = {str(v): lab for v, lab in self.g0_map}
        if self.coloring is not None:
            out["coloring"] = self.coloring.to_json()
        return out


def classify(g: SimpleGraph) -> GraphVerdict:
    if is_forest(g):
        verdict = GraphVerdict("Tree")
    elif (cyc := find_induced_cycle_ne4(g)) is not None:
        verdict = GraphVerdict("InducedCycle", cycle=tuple(cyc))
    elif (m := find_induced_g0(g)) is not None:
        verdict = GraphVerdict("InducedG0", g0_map=tuple(sorted(m.items())))
    elif (phi := ijk_coloring(g)) is not None:
        verdict = GraphVerdict("Coloring", coloring=phi)
    else:
        raise InternalExhaustion("no forest, short cycle, G0 or coloring found")
    if not verdict.verify(g):
        raise InternalExhaustion(f"{verdict.variant} witness failed verification")
    return verdict
