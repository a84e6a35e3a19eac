import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from pcfcolor import generators as gen
from pcfcolor.errors import IncompleteColoringError, NotAForestError, TooLargeError
from pcfcolor.graph import Graph
from pcfcolor.pcf import (
    Coloring,
    chi_pcf_exact,
    is_proper,
    pcf_color_exact,
    singleton_colors,
    tree_pcf3,
    unique_color,
    verify_pcf,
)

from conftest import brute_chi_pcf, brute_has_pcf, literal_pcf, random_small_graph


@st.composite
def colored_graphs(draw):
    n = draw(st.integers(1, 8))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    cols = draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))
    return Graph.from_edges(chosen, range(n)), dict(enumerate(cols))


@settings(max_examples=300, deadline=None)
@given(colored_graphs())
def test_checker_matches_definition(gc):
    g, phi = gc
    bad = verify_pcf(g, phi, 4)
    assert (bad is None) == literal_pcf(g, phi)
    if bad is not None and bad.kind == "improper-edge":
        u, v = bad.witness
        assert phi[u] == phi[v] and g.has_edge(u, v)
    if bad is not None and bad.kind == "no-unique-color":
        assert singleton_colors(g, phi, bad.witness[0]) == []


def test_unique_color_is_smallest_singleton():
    g = gen.complete(1).add_edges([(0, i) for i in range(1, 6)])
    phi = {0: 1, 1: 2, 2: 2, 3: 4, 4: 3, 5: 3}
    assert singleton_colors(g, phi, 0) == [4]
    assert unique_color(g, phi, 0) == 4
    assert unique_color(g, {0: 1, 1: 2}, 0) == 2
    assert unique_color(g, {0: 1}, 0) is None


def test_verify_errors():
    g = gen.path(3)
    with pytest.raises(IncompleteColoringError):
        verify_pcf(g, {0: 1, 1: 2})
    with pytest.raises(ValueError):
        verify_pcf(g, {0: 1, 1: 2, 2: 5}, 4)
    v = verify_pcf(g, {0: 1, 1: 2, 2: 1})
    assert v.kind == "no-unique-color" and v.witness == (1,)
    assert str(v) == "no unique color at vertex 1"


def test_isolated_vertex_needs_no_unique_color():
    g = Graph.from_edges([(0, 1)], [2])
    assert verify_pcf(g, {0: 1, 1: 2, 2: 1}) is None


def test_coloring_range_checked():
    with pytest.raises(ValueError):
        Coloring({0: 4}, 3)


def test_exact_solver_matches_brute_force():
    rng = random.Random(11)
    for _ in range(80):
        g = random_small_graph(rng, 6)
        for c in (2, 3, 4):
            phi = pcf_color_exact(g, c)
            assert (phi is not None) == brute_has_pcf(g, c)
            if phi is not None:
                assert literal_pcf(g, phi.assignment)
                assert max(phi.assignment.values(), default=1) <= c


def test_chi_matches_brute_force():
    rng = random.Random(12)
    for _ in range(40):
        g = random_small_graph(rng, 6)
        assert chi_pcf_exact(g) == brute_chi_pcf(g)


@pytest.mark.parametrize("n, expect", [(3, 3), (4, 4), (5, 5), (6, 3), (7, 4), (8, 4), (9, 3), (10, 4)])
def test_cycle_values(n, expect):
    assert chi_pcf_exact(gen.cycle(n)) == expect


def test_small_values():
    assert chi_pcf_exact(Graph.from_edges([], [0])) == 1
    assert chi_pcf_exact(gen.path(2)) == 2
    assert chi_pcf_exact(gen.path(3)) == 3
    assert chi_pcf_exact(gen.complete(4)) == 4
    assert chi_pcf_exact(gen.kstar(5)) == 5


def test_guard():
    with pytest.raises(TooLargeError):
        chi_pcf_exact(gen.cycle(30), guard=24)
    with pytest.raises(TooLargeError):
        pcf_color_exact(gen.cycle(30), 4, guard=24)


def test_tree_colorer():
    for seed in range(50):
        t = gen.random_tree(1 + seed * 3, seed)
        phi = tree_pcf3(t)
        assert literal_pcf(t, phi.assignment)
        assert set(phi.assignment.values()) <= {1, 2, 3}


def test_tree_colorer_on_forest():
    f = Graph.from_edges([(0, 1), (1, 2), (5, 6)], [9])
    assert verify_pcf(f, tree_pcf3(f), 3) is None


def test_tree_colorer_rejects_cycles():
    with pytest.raises(NotAForestError):
        tree_pcf3(gen.cycle(4))


def test_is_proper():
    assert is_proper(gen.cycle(4), {0: 1, 1: 2, 2: 1, 3: 2})
    assert not is_proper(gen.cycle(3), {0: 1, 1: 2, 2: 1})
