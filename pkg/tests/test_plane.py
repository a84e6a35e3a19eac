import random

import pytest

from pcfcolor import generators as gen
from pcfcolor.errors import GraphParseError, GraphValidityError, NonPlanarEmbeddingError
from pcfcolor.graph import Graph, girth
from pcfcolor.io import emit_plane_graph, parse_plane_graph
from pcfcolor.planar import classify
from pcfcolor.plane import PlaneGraph, one_subdivision_plane, plane_from_planar


def euler(pg):
    g = pg.graph
    return g.n - g.m + len(pg.faces)


def test_cycle_has_two_faces():
    pg = plane_from_planar(gen.cycle(6))
    assert sorted(len(f) for f in pg.faces) == [6, 6]


def test_tree_has_one_face_walking_each_edge_twice():
    t = gen.random_tree(12, 4)
    pg = plane_from_planar(t)
    assert len(pg.faces) == 1 and len(pg.faces[0]) == 2 * t.m


def test_dodecahedron_faces():
    pg = plane_from_planar(gen.dodecahedron())
    assert len(pg.faces) == 12
    assert {len(f) for f in pg.faces} == {5}
    assert euler(pg) == 2


def test_face_lengths_sum_to_twice_edges():
    for seed in range(10):
        pg = gen.random_outerplanar_girth5(25, seed)
        assert sum(len(f) for f in pg.faces) == 2 * pg.graph.m
        assert euler(pg) == 2


def test_bad_rotation_rejected():
    # K4 with a rotation that is not planar
    rot = {0: [1, 2, 3], 1: [0, 2, 3], 2: [0, 1, 3], 3: [0, 1, 2]}
    with pytest.raises(NonPlanarEmbeddingError):
        PlaneGraph(rot)


def test_nonplanar_graph_rejected():
    with pytest.raises(GraphValidityError):
        plane_from_planar(gen.petersen())


def test_subdivision_doubles_faces():
    pg = plane_from_planar(gen.dodecahedron())
    sub = one_subdivision_plane(pg)
    assert sub.graph.n == 50 and sub.graph.m == 60
    assert sorted(len(f) for f in sub.faces) == [10] * 12
    assert girth(sub.graph) == 10


def test_faces_at_and_boundary_neighbors():
    pg = plane_from_planar(gen.cycle(5))
    assert len(pg.faces_at(0)) == 2
    for fi in pg.faces_at(0):
        assert pg.boundary_neighbors(0, pg.faces[fi]) == {1, 4}


def test_rotation_roundtrip():
    pg = gen.random_outerplanar_girth5(20, 2)
    assert parse_plane_graph(emit_plane_graph(pg)) == pg


@pytest.mark.parametrize(
    "text, exc",
    [("0 1 2\n", GraphParseError), ("0: 1\n1: 2\n2: 1\n", GraphValidityError), ("0: 1\n0: 1\n1: 0\n", GraphParseError)],
)
def test_rotation_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_plane_graph(text)


def test_removal_keeps_rotation_order():
    pg = plane_from_planar(gen.dodecahedron())
    h = pg.remove_vertices([0])
    assert h.graph.n == 19
    for v, nb in h.rotation.items():
        assert [u for u in pg.rotation[v] if u != 0] == list(nb)


# classification


def pentagon_with_pendants():
    # inner 5-face 0..4; 0 and 2 keep degree 2, 1 and 3 get one leaf, 4 gets two
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5), (3, 6), (4, 7), (4, 8)])
    return plane_from_planar(g)


def test_terrible_face_and_bad_vertex():
    pg = pentagon_with_pendants()
    pc = classify(pg)
    inner = [fi for fi, f in enumerate(pg.faces) if len(f) == 5]
    assert len(inner) == 1
    assert pc.terrible[inner[0]]
    assert pc.X[3] == [4] and pc.X[4] == [3] and pc.X[1] == []
    assert pc.t[4] == 1
    assert pc.bad[4] and not pc.good[4]
    assert pc.f5star[4] == inner
    assert pc.giving(4, inner[0]) and not pc.giving(1, inner[0])


def test_high_degree_spoils_terrible():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)] + [(4, 10 + i) for i in range(7)] + [(1, 5), (3, 6)])
    pc = classify(plane_from_planar(g))
    assert not any(pc.terrible.values())
    assert pc.good[4] and not pc.bad[4]


def test_dodecahedron_has_no_terrible_faces():
    pc = classify(plane_from_planar(gen.dodecahedron()))
    assert not any(pc.terrible.values())
    assert not any(pc.bad.values()) and not any(pc.good.values())


def test_classification_invariants_on_random_plane_graphs():
    rng = random.Random(5)
    for _ in range(20):
        pg = gen.random_outerplanar_girth5(rng.randint(10, 40), rng.randrange(10**6))
        pc = classify(pg)
        g = pg.graph
        for fi, bad in pc.terrible.items():
            if bad:
                f = pg.faces[fi]
                assert sum(1 for x in f if g.degree(x) == 2) == 2
        for v in g.adj:
            assert not (pc.bad[v] and pc.good[v])
            if pc.bad[v]:
                assert g.degree(v) in (4, 5)
            assert all(g.degree(x) >= 3 for x in pc.X[v])
