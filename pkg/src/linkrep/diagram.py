"""Planar-diagram (PD) link diagrams.

A crossing ``X[a,b,c,d]`` lists its four edge labels counterclockwise,
starting from the incoming under-edge, so ``a -> c`` is the under-strand.
Edges are oriented by their labels: inside a component the successor of
edge ``e`` is ``e + 1``, wrapping from the component's largest label back
to its smallest.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BrokenComponentChain,
    InvalidEdgeMultiplicity,
    MalformedPd,
    SameComponent,
)

UNDER_IN, OVER_A, UNDER_OUT, OVER_B = range(4)


@dataclass(frozen=True)
class Crossing:
    quad: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.quad) != 4:
            raise MalformedPd(f"crossing needs 4 labels, got {len(self.quad)}")
        if any(not isinstance(x, int) or x < 1 for x in self.quad):
            raise MalformedPd(f"edge labels must be positive integers: {self.quad}")

    def __getitem__(self, i: int) -> int:
        return self.quad[i]

    def __str__(self) -> str:
        return "X[{},{},{},{}]".format(*self.quad)


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset[frozenset[int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            es.add(frozenset((u, v)))
        return cls(n, frozenset(es))

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj = [set() for _ in range(self.vertex_count)]
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def induced(self, vertices: Iterable[int]) -> list[tuple[int, int]]:
        vs = set(vertices)
        return [(u, v) for u, v in self.edge_list() if u in vs and v in vs]

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edge_list()]}

    @classmethod
    def from_json(cls, data: dict) -> SimpleGraph:
        return cls.from_edges(int(data["vertices"]), data["edges"])


_TOKEN = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def parse_pd(text: str) -> LinkDiagram:
    """Parse ``PD[X[...], ...]`` or bare whitespace/comma separated ``X[...]``."""
    body = text.strip()
    if body.startswith("PD"):
        m = re.fullmatch(r"PD\s*\[(.*)\]", body, re.S)
        if not m:
            raise MalformedPd("unbalanced PD[...] wrapper")
        body = m.group(1)
    crossings = []
    pos = 0
    for m in _TOKEN.finditer(body):
        gap = body[pos:m.start()]
        if gap.strip(" \t\r\n,"):
            raise MalformedPd(f"unexpected text {gap.strip()!r}")
        crossings.append(Crossing(tuple(int(g) for g in m.groups())))
        pos = m.end()
    tail = body[pos:]
    if tail.strip(" \t\r\n,"):
        raise MalformedPd(f"unexpected text {tail.strip()!r}")
    if not crossings:
        raise MalformedPd("no crossings found")
    return LinkDiagram.from_quads(c.quad for c in crossings)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]

    def __post_init__(self):
        self._validate()

    @classmethod
    def from_quads(cls, quads: Iterable[Sequence[int]]) -> LinkDiagram:
        return cls(tuple(Crossing(tuple(q)) for q in quads))

    # structure
    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @cached_property
    def slots(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """edge -> the two (crossing index, position) slots it occupies."""
        out: dict[int, list[tuple[int, int]]] = {}
        for ci, c in enumerate(self.crossings):
            for pos, e in enumerate(c.quad):
                out.setdefault(e, []).append((ci, pos))
        return {e: tuple(v) for e, v in out.items()}

    def _validate(self) -> None:
        n = self.edge_count
        counts: dict[int, int] = {}
        for c in self.crossings:
            for e in c.quad:
                counts[e] = counts.get(e, 0) + 1
        bad = sorted(e for e, k in counts.items() if k != 2 or e > n)
        missing = sorted(set(range(1, n + 1)) - set(counts))
        if bad or missing:
            raise InvalidEdgeMultiplicity(
                f"labels must be 1..{n}, each exactly twice; offending {bad or missing}"
            )
        # strands continue straight through a crossing: 0<->2 and 1<->3
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.crossings:
            for a, b in ((c[0], c[2]), (c[1], c[3])):
                parent[find(a)] = find(b)
        groups: dict[int, list[int]] = {}
        for e in range(1, n + 1):
            groups.setdefault(find(e), []).append(e)
        comps = sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])
        for g in comps:
            if g != list(range(g[0], g[-1] + 1)):
                raise BrokenComponentChain(f"component labels {g} are not consecutive")
            if len(g) < 2:
                raise BrokenComponentChain(f"component {g} has fewer than 2 edges")
        object.__setattr__(self, "_components", tuple(tuple(g) for g in comps))
        # every continuation pair must be (e, succ e)
        for c in self.crossings:
            for a, b in ((c[0], c[2]), (c[1], c[3])):
                if not (self.successor(a) == b or self.successor(b) == a):
                    raise BrokenComponentChain(f"{a} and {b} meet in {c} but are not consecutive")
        self._orient()

    @property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Components as edge runs, indexed by ascending minimum label."""
        return self._components  # type: ignore[attr-defined]

    @cached_property
    def component_of_edge(self) -> dict[int, int]:
        return {e: i for i, comp in enumerate(self.components) for e in comp}

    @property
    def component_count(self) -> int:
        return len(self.components)

    def successor(self, e: int) -> int:
        comp = self.components[self.component_of_edge[e]]
        return comp[0] if e == comp[-1] else e + 1

    def predecessor(self, e: int) -> int:
        comp = self.components[self.component_of_edge[e]]
        return comp[-1] if e == comp[0] else e - 1

    def _orient(self) -> None:
        """Find, for every edge, the slot where it ends (its head)."""
        head: dict[int, tuple[int, int]] = {}
        slots = self.slots

        def other(e, s):
            a, b = slots[e]
            return b if s == a else a

        def opposite(s):
            ci, pos = s
            return (ci, (pos + 2) % 4)

        for e, (s1, s2) in slots.items():
            for s, t in ((s1, s2), (s2, s1)):
                if s[1] == UNDER_IN:
                    head[e] = s
                elif s[1] == UNDER_OUT:
                    head[e] = t
        for e, (s1, s2) in slots.items():
            if e in head:
                continue
            nxt, prv = self.successor(e), self.predecessor(e)
            if nxt != prv:
                cands = [s for s in (s1, s2) if self.crossings[s[0]][(s[1] + 2) % 4] == nxt]
                if len(cands) == 1:
                    head[e] = cands[0]
        # two-edge components: propagate from a resolved neighbour, else choose
        changed = True
        while len(head) < len(slots):
            if not changed:
                e = min(x for x in slots if x not in head)
                head[e] = min(slots[e])
            changed = False
            for e in slots:
                if e in head:
                    continue
                nxt = self.successor(e)
                if nxt in head:
                    # the tail of nxt sits opposite the head of e
                    tail_nxt = other(nxt, head[nxt])
                    head[e] = opposite(tail_nxt)
                    changed = True
                prv = self.predecessor(e)
                if e not in head and prv in head:
                    tail_e = opposite(head[prv])
                    head[e] = other(e, tail_e)
                    changed = True
        for e in slots:
            h = head[e]
            if self.crossings[h[0]][(h[1] + 2) % 4] != self.successor(e):
                raise BrokenComponentChain(f"edge {e} does not run into its successor")
        object.__setattr__(self, "_head", head)

    def edge_head(self, e: int) -> tuple[int, int]:
        return self._head[e]  # type: ignore[attr-defined]

    def over_incoming_position(self, ci: int) -> int:
        """Position (1 or 3) at which the over-strand enters crossing ``ci``."""
        c = self.crossings[ci]
        if self.edge_head(c[OVER_A]) == (ci, OVER_A):
            return OVER_A
        return OVER_B

    # signs and linking
    def crossing_sign(self, ci: int) -> int:
        """+1 when the over-strand enters at position 3, else -1.

        With the under-strand pointing up, an over-strand running right to
        left crosses negatively; this is the usual right-hand rule and makes
        ``X[1,3,2,4] X[3,1,4,2]`` a Hopf link with linking number +1.
        """
        return 1 if self.over_incoming_position(ci) == OVER_B else -1

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(self.crossing_sign(i) for i in range(len(self.crossings)))

    def under_component(self, ci: int) -> int:
        return self.component_of_edge[self.crossings[ci][UNDER_IN]]

    def over_component(self, ci: int) -> int:
        return self.component_of_edge[self.crossings[ci][OVER_A]]

    def writhe(self) -> int:
        return sum(self.signs)

    def linking_number(self, i: int, j: int) -> int:
        if i == j:
            raise SameComponent(f"component {i} twice")
        total = 0
        for ci in range(len(self.crossings)):
            if {self.under_component(ci), self.over_component(ci)} == {i, j}:
                total += self.signs[ci]
        if total % 2:
            raise AssertionError("odd signed crossing count between two components")
        return total // 2

    @cached_property
    def linking_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.component_count
        m = [[0] * n for _ in range(n)]
        for ci in range(len(self.crossings)):
            a, b = self.under_component(ci), self.over_component(ci)
            if a != b:
                m[a][b] += self.signs[ci]
                m[b][a] += self.signs[ci]
        return tuple(tuple(x // 2 for x in row) for row in m)

    def linking_graph(self) -> SimpleGraph:
        n = self.component_count
        lk = self.linking_matrix
        return SimpleGraph.from_edges(
            n, [(i, j) for i in range(n) for j in range(i + 1, n) if lk[i][j] % 2]
        )

    # arcs
    @cached_property
    def arcs(self) -> tuple[tuple[int, ...], ...]:
        """Maximal over-strand runs, as sorted edge tuples ordered by min edge."""
        parent = {e: e for e in range(1, self.edge_count + 1)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.crossings:
            parent[find(c[OVER_A])] = find(c[OVER_B])
        groups: dict[int, list[int]] = {}
        for e in parent:
            groups.setdefault(find(e), []).append(e)
        return tuple(sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0]))

    @cached_property
    def arc_of_edge(self) -> dict[int, int]:
        return {e: a for a, arc in enumerate(self.arcs) for e in arc}

    def arc_component(self, a: int) -> int:
        return self.component_of_edge[self.arcs[a][0]]

    # transformations
    def mirror(self) -> LinkDiagram:
        """Switch every crossing."""
        quads = []
        for ci, c in enumerate(self.crossings):
            q = c.quad
            if self.over_incoming_position(ci) == OVER_B:
                quads.append((q[3], q[0], q[1], q[2]))
            else:
                quads.append((q[1], q[2], q[3], q[0]))
        return LinkDiagram.from_quads(quads)

    def reverse_component(self, k: int) -> LinkDiagram:
        lo, hi = self.components[k][0], self.components[k][-1]

        def relabel(e):
            return lo + hi - e if lo <= e <= hi else e

        quads = []
        for ci, c in enumerate(self.crossings):
            q = [relabel(e) for e in c.quad]
            if self.under_component(ci) == k:
                q = q[2:] + q[:2]
            quads.append(tuple(q))
        return LinkDiagram.from_quads(quads)

    def to_pd(self) -> str:
        return "PD[" + ", ".join(str(c) for c in self.crossings) + "]"

    def __str__(self) -> str:
        return self.to_pd()


def crossing_sign(d: LinkDiagram, c: int | Crossing) -> int:
    if isinstance(c, Crossing):
        c = d.crossings.index(c)
    return d.crossing_sign(c)


def linking_number(d: LinkDiagram, i: int, j: int) -> int:
    return d.linking_number(i, j)


def linking_graph(d: LinkDiagram) -> SimpleGraph:
    return d.linking_graph()


def arcs(d: LinkDiagram) -> tuple[tuple[int, ...], ...]:
    return d.arcs


def mirror(d: LinkDiagram) -> LinkDiagram:
    return d.mirror()


def kinked_unknot(offset: int = 0, positive: bool = True) -> list[tuple[int, int, int, int]]:
    """One-crossing unknot on edges offset+1, offset+2 (a Reidemeister I curl)."""
    a, b = offset + 1, offset + 2
    return [(a, a, b, b)] if positive else [(a, b, b, a)]


def disjoint_union(*diagrams: LinkDiagram) -> LinkDiagram:
    quads = []
    offset = 0
    for d in diagrams:
        quads.extend(tuple(e + offset for e in c.quad) for c in d.crossings)
        offset += d.edge_count
    return LinkDiagram.from_quads(quads)


def add_unknot(d: LinkDiagram | None = None, positive: bool = True) -> LinkDiagram:
    """Append a split, kinked unknot component."""
    offset = 0 if d is None else d.edge_count
    quads = [] if d is None else [c.quad for c in d.crossings]
    return LinkDiagram.from_quads(quads + kinked_unknot(offset, positive))


def insert_kink(d: LinkDiagram, edge: int, positive: bool = True) -> LinkDiagram:
    """Reidemeister I on ``edge``; later labels shift up by two."""

    def relabel(e):
        return e + 2 if e > edge else e

    quads = []
    for c in d.crossings:
        q = []
        for pos, e in enumerate(c.quad):
            if e == edge and (d.edge_head(e) == (len(quads), pos)):
                # the old head of `edge` now receives the last piece
                q.append(edge + 2)
            else:
                q.append(relabel(e))
        quads.append(tuple(q))
    a, b, c = edge, edge + 1, edge + 2
    quads.append((a, c, b, b) if positive else (a, b, b, c))
    return LinkDiagram.from_quads(quads)
