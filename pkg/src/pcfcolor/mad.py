"""Exact maximum average degree through densest-subgraph min cuts.

For a threshold density ``p/q`` the flow network has a source arc of
capacity ``q`` into every edge node, infinite arcs from an edge node to its
two endpoints, and an arc of capacity ``p`` from every vertex to the sink.
A cut of value ``q*m - (q*|E(H)| - p*|V(H)|)`` corresponds to each vertex
set ``H`` on the source side, so the minimum cut exposes a subgraph of
density above ``p/q`` whenever one exists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import PCFError
from .graph import Graph


class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _bfs(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for e in self.head[x]:
                if self.cap[e] > 0 and level[self.to[e]] < 0:
                    level[self.to[e]] = level[x] + 1
                    q.append(self.to[e])
        return level if level[t] >= 0 else None

    def maxflow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._bfs(s, t)
            if level is None:
                return flow
            it = [0] * self.n

            def push(x, f):
                if x == t:
                    return f
                while it[x] < len(self.head[x]):
                    e = self.head[x][it[x]]
                    y = self.to[e]
                    if self.cap[e] > 0 and level[y] == level[x] + 1:
                        d = push(y, min(f, self.cap[e]))
                        if d:
                            self.cap[e] -= d
                            self.cap[e ^ 1] += d
                            return d
                    it[x] += 1
                return 0

            while True:
                f = push(s, 1 << 62)
                if not f:
                    break
                flow += f

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        q = deque([s])
        while q:
            x = q.popleft()
            for e in self.head[x]:
                if self.cap[e] > 0 and self.to[e] not in seen:
                    seen.add(self.to[e])
                    q.append(self.to[e])
        return seen


def _denser_subgraph(g: Graph, density: Fraction) -> set[int]:
    """A vertex set H with |E(H)| - density*|V(H)| > 0, or the empty set."""
    verts = g.vertices()
    edges = g.edges()
    if not edges:
        return set()
    p, q = density.numerator, density.denominator
    m = len(edges)
    idx = {v: i for i, v in enumerate(verts)}
    s, t = 0, 1 + m + len(verts)
    net = _Dinic(t + 1)
    inf = q * m + 1
    for i, (u, v) in enumerate(edges):
        net.add(s, 1 + i, q)
        net.add(1 + i, 1 + m + idx[u], inf)
        net.add(1 + i, 1 + m + idx[v], inf)
    for v in verts:
        net.add(1 + m + idx[v], t, p)
    cut = net.maxflow(s, t)
    if cut >= q * m:
        return set()
    side = net.source_side(s)
    return {v for v in verts if 1 + m + idx[v] in side}


@dataclass(frozen=True)
class MadResult:
    value: Fraction
    witness: frozenset

    def __str__(self):
        return f"{self.value.numerator}/{self.value.denominator}"


def density(g: Graph, vertices) -> Fraction:
    """2|E(H)|/|V(H)| for the subgraph induced by ``vertices``."""
    vertices = set(vertices)
    h = g.induced(vertices)
    return Fraction(2 * h.m, len(vertices))


def mad_exact(g: Graph) -> MadResult:
    """Exact mad(g) with a witness vertex set.

    Dinkelbach iteration: every threshold tried is the density of an actual
    subgraph, so the loop stops on the exact optimum.
    """
    if g.n == 0:
        raise PCFError("mad of the null graph is undefined")
    witness = set(g.adj)
    rho = Fraction(g.m, g.n)
    while True:
        better = _denser_subgraph(g, rho)
        if not better:
            break
        witness = better
        rho = Fraction(g.induced(better).m, len(better))
    return MadResult(2 * rho, frozenset(witness))


def mad_at_most(g: Graph, bound) -> bool:
    """True iff mad(g) <= bound, decided by a single min cut."""
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if g.n == 0:
        return True
    return not _denser_subgraph(g, bound / 2)


def mad_less_than(g: Graph, bound) -> bool:
    """True iff mad(g) < bound (strict), used for the four-color hypothesis."""
    bound = Fraction(bound)
    return mad_exact(g).value < bound if g.n else True
