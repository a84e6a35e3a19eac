"""Proper conflict-free coloring: checker, unique-color map, exact solver."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Mapping

from .errors import IncompleteColoringError, NotAForestError, TooLargeError
from .graph import Graph

DEFAULT_GUARD = 24


@dataclass
class Coloring:
    """Partial map vertex -> color in ``1..palette``."""

    assignment: dict = field(default_factory=dict)
    palette: int = 0

    def __post_init__(self):
        for v, col in self.assignment.items():
            if not 1 <= col <= self.palette:
                raise ValueError(f"color {col} of vertex {v} outside 1..{self.palette}")

    def __getitem__(self, v):
        return self.assignment[v]

    def __contains__(self, v):
        return v in self.assignment

    def __len__(self):
        return len(self.assignment)

    def get(self, v, default=None):
        return self.assignment.get(v, default)

    def items(self):
        return self.assignment.items()

    def is_complete(self, g: Graph) -> bool:
        return all(v in self.assignment for v in g.adj)

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))


def _as_map(phi) -> Mapping[int, int]:
    return phi.assignment if isinstance(phi, Coloring) else phi


@dataclass(frozen=True)
class Violation:
    kind: str  # "improper-edge" | "no-unique-color"
    witness: tuple

    def __str__(self):
        if self.kind == "improper-edge":
            return f"improper edge {self.witness[0]}-{self.witness[1]}"
        return f"no unique color at vertex {self.witness[0]}"


def singleton_colors(g: Graph, phi, v: int) -> list[int]:
    """Colors appearing exactly once among the colored neighbors of ``v``, sorted."""
    phi = _as_map(phi)
    counts = Counter(phi[u] for u in g.neighbors(v) if u in phi)
    return sorted(col for col, k in counts.items() if k == 1)


def unique_colors(g: Graph, phi) -> dict[int, frozenset]:
    """Per-vertex set of singleton colors; an empty set means undefined."""
    return {v: frozenset(singleton_colors(g, phi, v)) for v in g.adj}


def unique_color(g: Graph, phi, v: int) -> int | None:
    """The designated unique color of ``v``: the smallest singleton color."""
    s = singleton_colors(g, phi, v)
    return s[0] if s else None


def verify_pcf(g: Graph, phi, c: int | None = None) -> Violation | None:
    """None when ``phi`` is a PCF coloring of ``g``, else the first violation.

    With ``c`` given, colors must also lie in ``1..c``.
    """
    phi = _as_map(phi)
    missing = [v for v in g.adj if v not in phi]
    if missing:
        raise IncompleteColoringError(f"vertices without a color: {sorted(missing)[:10]}")
    if c is not None:
        for v in sorted(g.adj):
            if not 1 <= phi[v] <= c:
                raise ValueError(f"color {phi[v]} of vertex {v} outside 1..{c}")
    for u, v in g.edges():
        if phi[u] == phi[v]:
            return Violation("improper-edge", (u, v))
    for v in sorted(g.adj):
        if g.degree(v) and not singleton_colors(g, phi, v):
            return Violation("no-unique-color", (v,))
    return None


def is_pcf(g: Graph, phi, c: int | None = None) -> bool:
    return verify_pcf(g, phi, c) is None


def is_proper(g: Graph, phi) -> bool:
    phi = _as_map(phi)
    return all(phi[u] != phi[v] for u, v in g.edges())


# exact search


def core_numbers(g: Graph) -> dict[int, int]:
    """k-core number of every vertex (smallest-last peeling)."""
    deg = {v: g.degree(v) for v in g.adj}
    alive = set(g.adj)
    core = {}
    k = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        core[v] = k
        alive.remove(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
    return core


def search_order(g: Graph) -> list[int]:
    """Decreasing core number, then decreasing degree, then id."""
    core = core_numbers(g)
    return sorted(g.adj, key=lambda v: (-core[v], -g.degree(v), v))


def pcf_color_exact(g: Graph, c: int, guard: int | None = DEFAULT_GUARD) -> Coloring | None:
    """Some PCF c-coloring of ``g`` (the first in search order), or None.

    Backtracking over ``search_order`` (core number, then degree), smallest
    color first, with
    color-symmetry breaking. A vertex is checked for a unique color as soon
    as its last neighbor is colored.
    """
    if guard is not None and g.n > guard:
        raise TooLargeError(f"{g.n} vertices exceeds the exhaustive-search guard of {guard}")
    if g.n == 0:
        return Coloring({}, c)
    if c < 1:
        return None
    order = search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    nbrs = [[pos[u] for u in g.neighbors(v)] for v in order]
    # vertices whose neighborhood is complete once position i is colored
    closes_at: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        if nbrs[i]:
            closes_at[max(nbrs[i])].append(i)
    col = [0] * n

    def has_unique(i):
        counts = Counter(col[j] for j in nbrs[i])
        return 1 in counts.values()

    def rec(i, used):
        if i == n:
            return True
        forbidden = {col[j] for j in nbrs[i] if j < i}
        top = min(c, used + 1)
        for k in range(1, top + 1):
            if k in forbidden:
                continue
            col[i] = k
            if all(has_unique(j) for j in closes_at[i]) and rec(i + 1, max(used, k)):
                return True
        col[i] = 0
        return False

    if not rec(0, 0):
        return None
    return Coloring({order[i]: col[i] for i in range(n)}, c)


def chi_pcf_exact(g: Graph, guard: int | None = DEFAULT_GUARD) -> int:
    """Exact proper conflict-free chromatic number by upward search on c."""
    if guard is not None and g.n > guard:
        raise TooLargeError(f"{g.n} vertices exceeds the exhaustive-search guard of {guard}")
    if g.n == 0:
        return 0
    c = 1 if g.m == 0 else 2
    while pcf_color_exact(g, c, guard=None) is None:
        c += 1
    return c


def tree_pcf3(t: Graph) -> Coloring:
    """Color each tree by depth mod 3 from its smallest leaf (colors 1, 2, 3).

    Rooting at a leaf matters: a root with two children would see one color twice.
    """
    if not t.is_forest():
        raise NotAForestError("input contains a cycle")
    phi = {}
    for comp in t.components():
        root = min(v for v in comp.adj if comp.degree(v) <= 1)
        phi[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in comp.neighbors(x):
                if y not in phi:
                    phi[y] = phi[x] % 3 + 1
                    queue.append(y)
    return Coloring(phi, 3)
