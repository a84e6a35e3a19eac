"""Shared corpora and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from fractions import Fraction

import networkx as nx
import pytest

from pcfcolor.graph import Graph


def brute_mad(g: Graph) -> Fraction:
    """Max of 2|E(H)|/|V(H)| over all nonempty vertex subsets."""
    verts = g.vertices()
    best = Fraction(0)
    for r in range(1, len(verts) + 1):
        for sub in itertools.combinations(verts, r):
            s = set(sub)
            m = sum(1 for u, v in g.edges() if u in s and v in s)
            best = max(best, Fraction(2 * m, r))
    return best


def literal_pcf(g: Graph, phi: dict) -> bool:
    """PCF straight from the definition."""
    for u, v in g.edges():
        if phi[u] == phi[v]:
            return False
    for v in g.adj:
        nb = list(g.neighbors(v))
        if nb and 1 not in Counter(phi[u] for u in nb).values():
            return False
    return True


def brute_has_pcf(g: Graph, c: int) -> bool:
    verts = g.vertices()
    for cols in itertools.product(range(1, c + 1), repeat=len(verts)):
        if literal_pcf(g, dict(zip(verts, cols))):
            return True
    return False


def brute_chi_pcf(g: Graph) -> int:
    if g.n == 0:
        return 0
    c = 1
    while not brute_has_pcf(g, c):
        c += 1
    return c


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.adj)
    h.add_edges_from(g.edges())
    return h


def from_nx(h) -> Graph:
    return Graph.from_edges(h.edges(), h.nodes())


def small_connected_graphs(max_n: int, max_extra: int):
    """Every spanning tree on <= max_n vertices plus up to max_extra added edges.

    Covers every connected graph with m <= n - 1 + max_extra up to
    isomorphism (duplicates are kept).
    """
    yield Graph.from_edges([], [0])
    for n in range(2, max_n + 1):
        for tree in nx.nonisomorphic_trees(n):
            t = from_nx(tree)
            non = [(a, b) for a, b in itertools.combinations(range(n), 2) if not t.has_edge(a, b)]
            for k in range(max_extra + 1):
                for add in itertools.combinations(non, k):
                    yield t.add_edges(add)


def random_small_graph(rng: random.Random, n_max: int = 7) -> Graph:
    n = rng.randint(1, n_max)
    pairs = list(itertools.combinations(range(n), 2))
    m = rng.randint(0, len(pairs))
    return Graph.from_edges(rng.sample(pairs, m), range(n))


def dense_planar(n: int, rng: random.Random) -> nx.Graph:
    """Random maximal planar graph: add shuffled pairs while planarity holds."""
    h = nx.Graph()
    h.add_nodes_from(range(n))
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    for a, b in pairs:
        h.add_edge(a, b)
        if not nx.check_planarity(h)[0]:
            h.remove_edge(a, b)
    return h


def planar_girth5(n: int, seed: int, p_delete: float = 0.0) -> Graph:
    """Random planar graph of girth >= 5: delete some edges, then subdivide short cycles."""
    rng = random.Random(seed)
    h = dense_planar(n, rng)
    for e in list(h.edges()):
        if rng.random() < p_delete:
            h.remove_edge(*e)
    nxt = n
    while True:
        short = None
        for u, v in rng.sample(sorted(h.edges()), h.number_of_edges()):
            h.remove_edge(u, v)
            try:
                d = nx.shortest_path_length(h, u, v)
            except nx.NetworkXNoPath:
                d = None
            h.add_edge(u, v)
            if d is not None and d < 4:
                short = (u, v)
                break
        if short is None:
            return from_nx(h)
        u, v = short
        h.remove_edge(u, v)
        h.add_edge(u, nxt)
        h.add_edge(nxt, v)
        nxt += 1


def subdivided_regular(rng: random.Random, r: int, p_keep: float = 0.7) -> Graph:
    """Random r-regular graph with each edge subdivided with probability p_keep."""
    from pcfcolor.generators import random_regular

    n0 = rng.randint(r + 1, 14)
    if (n0 * r) % 2:
        n0 += 1
    base = random_regular(n0, r, rng.randrange(2**31))
    nxt = n0
    edges = []
    for u, v in base.edges():
        if rng.random() < p_keep:
            edges += [(u, nxt), (nxt, v)]
            nxt += 1
        else:
            edges.append((u, v))
    return Graph.from_edges(edges, range(n0))


@pytest.fixture
def rng():
    return random.Random(20241016)


# acceptance summary: test_acceptance records one line per criterion here
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
