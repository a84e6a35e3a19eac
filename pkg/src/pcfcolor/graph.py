"""Simple undirected graphs and the structural queries the colorer relies on."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import GraphValidityError


class Graph:
    """Immutable simple graph on non-negative integer vertex ids.

    Mutating operations return new graphs.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, adj: Mapping[int, Iterable[int]] | None = None):
        adj = adj or {}
        frozen = {}
        for v, nbrs in adj.items():
            if not isinstance(v, int) or v < 0:
                raise GraphValidityError(f"vertex id must be a non-negative int, got {v!r}")
            frozen[v] = frozenset(nbrs)
        m2 = 0
        for v, nbrs in frozen.items():
            if v in nbrs:
                raise GraphValidityError(f"self-loop at {v}")
            for u in nbrs:
                if u not in frozen:
                    raise GraphValidityError(f"neighbor {u} of {v} is not a vertex")
                if v not in frozen[u]:
                    raise GraphValidityError(f"asymmetric adjacency {v}-{u}")
            m2 += len(nbrs)
        self._adj = frozen
        self._m = m2 // 2

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        """Build a graph from an edge list; duplicate edges and loops are rejected."""
        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise GraphValidityError(f"self-loop at {u}")
            adj.setdefault(u, set())
            adj.setdefault(v, set())
            if v in adj[u]:
                raise GraphValidityError(f"duplicate edge {u}-{v}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    # basic accessors

    @property
    def adj(self) -> Mapping[int, frozenset]:
        return self._adj

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in self._adj for v in self._adj[u] if u < v)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def __len__(self):
        return len(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def __iter__(self):
        return iter(sorted(self._adj))

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(frozenset(self._adj.items()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj.values()), default=0)

    # degree-class neighborhoods, N_d(v) and friends

    def nbrs_of_degree(self, v: int, d: int) -> list[int]:
        return sorted(u for u in self._adj[v] if len(self._adj[u]) == d)

    def nbrs_min_degree(self, v: int, d: int) -> list[int]:
        return sorted(u for u in self._adj[v] if len(self._adj[u]) >= d)

    def n_deg(self, v: int, d: int) -> int:
        return sum(1 for u in self._adj[v] if len(self._adj[u]) == d)

    def n_min_deg(self, v: int, d: int) -> int:
        return sum(1 for u in self._adj[v] if len(self._adj[u]) >= d)

    # derived graphs

    def remove_vertices(self, removed: Iterable[int]) -> "Graph":
        removed = set(removed)
        return Graph({v: nb - removed for v, nb in self._adj.items() if v not in removed})

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        return Graph({v: self._adj[v] & keep for v in keep})

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(list(self.edges()) + list(edges), self._adj)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = {v: set(nb) for v, nb in self._adj.items()}
        for u, v in edges:
            adj[u].discard(v)
            adj[v].discard(u)
        return Graph(adj)

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        return Graph({mapping[v]: {mapping[u] for u in nb} for v, nb in self._adj.items()})

    def components(self) -> list["Graph"]:
        """Connected components, ordered by smallest vertex id."""
        seen: set[int] = set()
        out = []
        for s in sorted(self._adj):
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            out.append(self.induced(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_cycle(self) -> bool:
        """True iff the graph is a single cycle (connected, 2-regular, n >= 3)."""
        return self.n >= 3 and all(len(a) == 2 for a in self._adj.values()) and self.is_connected()

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def cycle_order(self) -> list[int]:
        """Vertices of a cycle graph in traversal order starting from the smallest id."""
        start = min(self._adj)
        order = [start]
        prev, cur = None, start
        while True:
            if prev is None:
                nxt = min(self._adj[cur])
            else:
                nxt = next(u for u in self._adj[cur] if u != prev)
            if nxt == start:
                return order
            order.append(nxt)
            prev, cur = cur, nxt


def ball(g: Graph, sources: Iterable[int], radius: int) -> set[int]:
    """All vertices within ``radius`` hops of any source."""
    dist = {s: 0 for s in sources}
    queue = deque(dist)
    while queue:
        x = queue.popleft()
        if dist[x] == radius:
            continue
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return set(dist)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in g.adj:
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


# threads


@dataclass(frozen=True)
class Thread:
    """A maximal path of 2-vertices.

    ``path`` is ordered from the ``ends[0]`` side. For a component that is a
    cycle of 2-vertices, ``ends`` is ``None`` and ``path`` lists the cycle.
    """

    path: tuple[int, ...]
    ends: tuple[int, int] | None

    @property
    def k(self) -> int:
        return len(self.path)

    @property
    def is_cycle(self) -> bool:
        return self.ends is None

    @property
    def is_loop(self) -> bool:
        return self.ends is not None and self.ends[0] == self.ends[1]


def enumerate_threads(g: Graph) -> list[Thread]:
    """All maximal threads; all-2 cycle components come back as cycle threads."""
    adj = g.adj
    seen: set[int] = set()
    threads = []
    for s in sorted(adj):
        if s in seen or len(adj[s]) != 2:
            continue
        # walk both directions from s
        run = {s}
        sides = []
        for first in sorted(adj[s]):
            walk = []
            prev, cur = s, first
            while len(adj[cur]) == 2 and cur not in run:
                walk.append(cur)
                run.add(cur)
                prev, cur = cur, next(u for u in adj[cur] if u != prev)
            sides.append((walk, cur))
        (w0, e0), (w1, e1) = sides
        seen |= run
        if e0 in run:
            # closed loop of 2-vertices
            threads.append(Thread(tuple(g.induced(run).cycle_order()), None))
            continue
        path = tuple(reversed(w0)) + (s,) + tuple(w1)
        ends = (e0, e1)
        if (e1, path[::-1]) < (e0, path):
            ends, path = (e1, e0), path[::-1]
        threads.append(Thread(path, ends))
    return threads


class ThreadIndex:
    """Per-vertex thread queries (adjacent k-threads, close neighbors)."""

    def __init__(self, g: Graph):
        self.g = g
        self.threads = enumerate_threads(g)
        self.thread_of: dict[int, Thread] = {}
        for t in self.threads:
            for x in t.path:
                self.thread_of[x] = t

    def threads_at(self, v: int) -> list[tuple[Thread, int]]:
        """(thread, first 2-vertex) for each edge from v into a thread.

        A thread with both ends at ``v`` is listed twice.
        """
        out = []
        for u in sorted(self.g.neighbors(v)):
            t = self.thread_of.get(u)
            if t is not None and not t.is_cycle:
                out.append((t, u))
        return out

    def count_k_threads(self, v: int, k: int) -> int:
        return sum(1 for t, _ in self.threads_at(v) if t.k == k)

    def close_neighbors(self, v: int) -> list[int]:
        """2-vertices on threads adjacent to ``v`` (with loop threads once)."""
        out = set()
        for t, _ in self.threads_at(v):
            out.update(t.path)
        return sorted(out)


# pattern search


def find_induced_c5(g: Graph) -> tuple[int, ...] | None:
    """Some chordless 5-cycle ``(a, b, c, d, e)`` with ``a`` minimal, or None."""
    adj = g.adj
    for a in sorted(adj):
        for b in sorted(adj[a]):
            if b < a:
                continue
            for c in sorted(adj[b]):
                if c <= a or c in adj[a]:
                    continue
                for d in sorted(adj[c]):
                    if d <= a or d == b or d in adj[a] or d in adj[b]:
                        continue
                    for e in sorted(adj[d]):
                        if e <= b or e == c or e not in adj[a]:
                            continue
                        if e in adj[b] or e in adj[c]:
                            continue
                        return (a, b, c, d, e)
    return None


@dataclass(frozen=True)
class KStarWitness:
    branch: tuple[int, ...]
    middles: dict  # (b_i, b_j) with b_i < b_j -> middle vertex

    def vertices(self) -> set[int]:
        return set(self.branch) | set(self.middles.values())


def _match_pairs(g: Graph, pairs, forbidden: set[int]) -> dict | None:
    """Assign distinct common neighbors (outside ``forbidden``) to vertex pairs."""
    cands = {p: sorted((g.neighbors(p[0]) & g.neighbors(p[1])) - forbidden) for p in pairs}
    owner: dict[int, tuple] = {}

    def augment(p, visited):
        for x in cands[p]:
            if x in visited:
                continue
            visited.add(x)
            if x not in owner or augment(owner[x], visited):
                owner[x] = p
                return True
        return False

    for p in sorted(pairs, key=lambda q: len(cands[q])):
        if not augment(p, set()):
            return None
    return {p: x for x, p in owner.items()}


def find_kstar_subgraph(g: Graph, k: int) -> KStarWitness | None:
    """Search for a subgraph isomorphic to the 1-subdivision of K_k.

    Exponential backtracking over branch-vertex sets with degree pruning and a
    bipartite matching test for the subdivision vertices at every step.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if g.n < k + k * (k - 1) // 2:
        return None
    cand = sorted(v for v in g.adj if g.degree(v) >= k - 1)
    # two branch vertices need a common neighbor
    two_hop = {v: {w for u in g.neighbors(v) for w in g.neighbors(u)} - {v} for v in cand}

    def extend(chosen: list[int], pool: list[int]):
        if len(chosen) == k:
            pairs = list(combinations(chosen, 2))
            m = _match_pairs(g, pairs, set(chosen))
            return KStarWitness(tuple(chosen), m) if m is not None else None
        need = k - len(chosen)
        for i, v in enumerate(pool):
            if len(pool) - i < need:
                break
            nxt = [w for w in pool[i + 1:] if w in two_hop[v]]
            if len(nxt) < need - 1:
                continue
            new = chosen + [v]
            if _match_pairs(g, list(combinations(new, 2)), set(new)) is None:
                continue
            found = extend(new, nxt)
            if found is not None:
                return found
        return None

    return extend([], cand)


def recognize_one_subdivision_of_regular(g: Graph) -> tuple[Graph, int] | None:
    """Return ``(G0, r)`` when ``g`` is the 1-subdivision of an r-regular graph, r >= 3."""
    if g.n == 0:
        return None
    twos = [v for v in g.adj if g.degree(v) == 2]
    branch = [v for v in g.adj if g.degree(v) != 2]
    if not branch:
        return None
    r = g.degree(branch[0])
    if r < 3 or any(g.degree(v) != r for v in branch):
        return None
    branch_set = set(branch)
    for v in branch:
        if any(g.degree(u) != 2 for u in g.neighbors(v)):
            return None
    edges = set()
    for x in twos:
        a, b = sorted(g.neighbors(x))
        if a not in branch_set or b not in branch_set:
            return None
        if (a, b) in edges:
            return None
        edges.add((a, b))
    return Graph.from_edges(sorted(edges), branch), r
