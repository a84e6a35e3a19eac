"""Graph families used as inputs and as the test corpus.

Numbering conventions:

* ``cycle(n)``, ``path(n)``, ``complete(n)``: vertices ``0..n-1`` in order.
* ``kstar(k)``: branch vertices ``0..k-1``; the vertex subdividing branch
  pair ``(i, j)`` gets id ``k + rank`` in lexicographic pair order.
* ``one_subdivision(g)``: original ids kept; edge ``(u, v)`` (sorted edge
  order) gets id ``max(g) + 1 + rank``.
* ``random_tree(n, seed)``: vertex ``i > 0`` attaches to a uniform earlier vertex.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

from .graph import Graph
from .plane import PlaneGraph


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], range(n))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph.from_edges(combinations(range(n), 2), range(n))


def one_subdivision(g: Graph) -> Graph:
    nxt = max(g.adj, default=-1) + 1
    edges = []
    for u, v in g.edges():
        edges += [(u, nxt), (nxt, v)]
        nxt += 1
    return Graph.from_edges(edges, g.adj)


def kstar(k: int) -> Graph:
    if k < 2:
        raise ValueError("kstar needs k >= 2")
    return one_subdivision(complete(k))


def random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise ValueError("random_tree needs n >= 1")
    rng = random.Random(seed)
    return Graph.from_edges([(rng.randrange(i), i) for i in range(1, n)], range(n))


# LCF notation of the dodecahedron: [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2
_DODECA_LCF = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4] * 2


def dodecahedron() -> Graph:
    """The dodecahedral graph: Hamiltonian cycle 0..19 plus LCF chords."""
    edges = {(i, (i + 1) % 20) for i in range(20)}
    for i, step in enumerate(_DODECA_LCF):
        j = (i + step) % 20
        edges.add((min(i, j), max(i, j)))
    edges = {(min(a, b), max(a, b)) for a, b in edges}
    return Graph.from_edges(sorted(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(outer + spokes + inner)


def random_gnm(n: int, m: int, seed: int) -> Graph:
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    if m > len(pairs):
        raise ValueError(f"G({n}, m) has at most {len(pairs)} edges")
    return Graph.from_edges(sorted(rng.sample(pairs, m)), range(n))


def random_sparse(n: int, mad_cap, seed: int, m: int | None = None) -> Graph:
    """Random graph on ``n`` vertices with mad <= ``mad_cap``.

    Starts from G(n, m) (default ``m`` slightly above ``mad_cap * n / 2``) and
    repeatedly deletes a random edge inside a subgraph denser than the cap
    until none is left.
    """
    from .mad import _denser_subgraph

    cap = Fraction(mad_cap)
    if cap < 0:
        raise ValueError("mad_cap must be non-negative")
    if n < 1:
        raise ValueError("random_sparse needs n >= 1")
    rng = random.Random(seed)
    if m is None:
        m = min(n * (n - 1) // 2, math.ceil(cap * n / 2) + max(1, n // 10))
    g = random_gnm(n, m, rng.randrange(2**32))
    while True:
        dense = _denser_subgraph(g, cap / 2)
        if not dense:
            return g
        inner = g.induced(dense).edges()
        g = g.remove_edges([inner[rng.randrange(len(inner))]])


def random_regular(n: int, r: int, seed: int) -> Graph:
    """Random simple r-regular graph on ``0..n-1`` (networkx's generator)."""
    import networkx as nx

    if (n * r) % 2 or r >= n or r < 0:
        raise ValueError(f"no {r}-regular graph on {n} vertices")
    h = nx.random_regular_graph(r, n, seed=seed)
    return Graph.from_edges(h.edges(), range(n))


def random_outerplanar_girth5(n: int, seed: int) -> PlaneGraph:
    """Random outerplanar plane graph with girth >= 5 on at most ``n`` vertices.

    A polygon is split by random non-crossing chords into faces of length
    >= 5, then pendant trees are hung in the outer face. Vertices of the
    polygon sit in convex position, so sorting neighbors by polygon offset
    gives the rotation.
    """
    rng = random.Random(seed)
    if n < 5:
        raise ValueError("need n >= 5")
    k = rng.randint(5, n)
    chords = []

    def split(poly):
        L = len(poly)
        if L < 8 or rng.random() < 0.25:
            return
        cut = rng.randint(4, L - 4)
        chords.append((poly[0], poly[cut]))
        split(poly[: cut + 1])
        split(poly[cut:] + [poly[0]])

    split(list(range(k)))
    adj: dict[int, list[int]] = {}
    for v in range(k):
        nb = [(v + 1) % k, (v - 1) % k]
        nb += [b for a, b in chords if a == v] + [a for a, b in chords if b == v]
        adj[v] = sorted(set(nb), key=lambda u: (u - v) % k)
    nxt = k
    while nxt < n and rng.random() < 0.9:
        host = rng.randrange(nxt)
        adj[host].append(nxt)
        adj[nxt] = [host]
        nxt += 1
    return PlaneGraph(adj)
