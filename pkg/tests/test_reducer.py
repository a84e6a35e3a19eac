import json
import random
from collections import Counter
from fractions import Fraction

import pytest

from pcfcolor import generators as gen
from pcfcolor.errors import BrooksPreconditionError, HypothesisError, PCFError, StuckError
from pcfcolor.graph import Graph, find_induced_c5
from pcfcolor.mad import mad_less_than
from pcfcolor.pcf import is_proper, verify_pcf
from pcfcolor.planar import classify
from pcfcolor.plane import plane_from_planar
from pcfcolor.reducer import (
    Kind,
    brooks_proper_color,
    check_hypotheses,
    color,
    color_planar7,
    cycle_coloring,
    extend,
    find_config,
    iter_configs,
)
from pcfcolor.reducer.colorer import TERMINALS

from conftest import literal_pcf, planar_girth5, to_nx


def sparse_corpus(c, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        if c == 4:
            g = gen.random_sparse(rng.randint(8, 24), Fraction(239, 100), rng.randrange(10**6))
            if find_induced_c5(g) or not mad_less_than(g, Fraction(12, 5)):
                continue
        else:
            g = gen.random_sparse(rng.randint(8, 24), Fraction(4 * c, c + 2), rng.randrange(10**6))
        out.append(g)
    return out


def planar_corpus(count, seed):
    rng = random.Random(seed)
    return [plane_from_planar(planar_girth5(rng.randint(8, 16), rng.randrange(10**6))) for _ in range(count)]


# configuration finder


def test_leaf_is_found_first():
    star = Graph.from_edges([(0, 1), (0, 2), (0, 3)])
    cfg = find_config(star, 4)
    assert cfg.kind is Kind.DEG1
    assert cfg.actors == {"v": 1, "u": 0} and cfg.deletion_set == {1}


def test_long_cycle_gives_four_thread():
    cfg = find_config(gen.cycle(8), 4)
    assert cfg.kind is Kind.FOUR_THREAD
    assert len(cfg.deletion_set) == 4


def test_subdivided_regular_has_no_configuration():
    assert find_config(gen.kstar(6), 5) is None
    assert find_config(gen.one_subdivision(gen.petersen()), 4) is None


def test_planar_first_step_on_dodecahedron():
    pg = plane_from_planar(gen.dodecahedron())
    cfg = find_config(pg.graph, 7, "planar7", pg)
    assert cfg.kind is Kind.TWO_THREE_NEIGHBOR


def test_config_record_is_json():
    cfg = find_config(gen.path(4), 5)
    rec = json.loads(str(cfg))
    assert rec["kind"] == "Deg1" and rec["S"] == sorted(cfg.deletion_set)


def test_mode_validation():
    g = gen.cycle(6)
    with pytest.raises(PCFError):
        find_config(g, 4, "weird")
    with pytest.raises(PCFError):
        find_config(g, 7, "planar7")
    with pytest.raises(PCFError):
        find_config(g, 3)
    pg = plane_from_planar(g)
    with pytest.raises(PCFError):
        find_config(g, 6, "planar7", pg)
    with pytest.raises(PCFError):
        find_config(g, 5, "sparse", pg)


def test_priority_order_per_mode():
    order = {
        4: [Kind.DEG1, Kind.THREE_VX_TWO_THREAD, Kind.FOUR_THREAD, Kind.THREAD_LEMMA],
        7: [Kind.DEG1, Kind.TWO_NEIGHBOR, Kind.TWO_THREE_NEIGHBOR, Kind.COMBINE],
    }
    for c, kinds in order.items():
        for g in sparse_corpus(c, 30, c):
            seen = [cfg.kind for cfg in iter_configs(g, c)]
            ranks = [kinds.index(k) for k in seen]
            assert ranks == sorted(ranks)


def test_bad_vertex_instances_meet_their_condition():
    count = 0
    for pg in planar_corpus(40, 3):
        pc = classify(pg)
        g = pg.graph
        for cfg in iter_configs(g, 7, "planar7", pg):
            if cfg.kind is not Kind.BAD_VERTEX_TERRIBLE:
                continue
            count += 1
            v = cfg.actors["v"]
            assert pc.bad[v]
            d = g.degree(v)
            assert 2 * d - pc.n2[v] - pc.n3[v] - pc.t[v] <= 6
            for u1, u2, u3, u4 in cfg.actors["faces"]:
                assert g.degree(u1) == 2 and g.degree(u3) == 2 and g.degree(u4) >= 3
    assert count > 0


# extension out of context


def _check_extension(cfg, g, c, pg=None):
    S = cfg.deletion_set
    rest = g.remove_vertices(S)
    base, _ = color(rest, c, fallback_exact=True) if pg is None else color_planar7(pg.remove_vertices(S), True)
    ext = extend(cfg, g, c, base)
    assert literal_pcf(g, ext.assignment)
    allowed = set(S)
    if cfg.kind is Kind.BAD_VERTEX_TERRIBLE:
        allowed |= {f[2] for f in cfg.actors["faces"]}
    changed = {v for v in rest.adj if ext[v] != base[v]}
    assert changed <= allowed


@pytest.mark.parametrize("c", [4, 5, 6, 7])
def test_every_instance_extends(c):
    kinds = Counter()
    for g in sparse_corpus(c, 60, 100 + c):
        for cfg in iter_configs(g, c):
            kinds[cfg.kind] += 1
            _check_extension(cfg, g, c)
    expected = {
        4: {Kind.DEG1, Kind.THREE_VX_TWO_THREAD, Kind.FOUR_THREAD},
        5: {Kind.DEG1, Kind.TWO_NEIGHBOR, Kind.COMBINE},
        6: {Kind.DEG1, Kind.TWO_NEIGHBOR, Kind.COMBINE},
        7: {Kind.DEG1, Kind.TWO_NEIGHBOR, Kind.TWO_THREE_NEIGHBOR, Kind.COMBINE},
    }[c]
    assert expected <= set(kinds)


def test_thread_at_low_vertex_instances_extend():
    seen = 0
    for g in sparse_corpus(4, 400, 9):
        for cfg in iter_configs(g, 4):
            if cfg.kind is Kind.THREAD_LEMMA:
                seen += 1
                _check_extension(cfg, g, 4)
    assert seen > 0


def test_every_planar_instance_extends():
    kinds = Counter()
    for pg in planar_corpus(30, 21):
        for cfg in iter_configs(pg.graph, 7, "planar7", pg):
            kinds[cfg.kind] += 1
            _check_extension(cfg, pg.graph, 7, pg)
    assert {Kind.TWO_THREE_NEIGHBOR, Kind.COMBINE, Kind.BAD_VERTEX_TERRIBLE} <= set(kinds)


def test_extend_requires_coverage():
    g = gen.path(4)
    cfg = find_config(g, 4)
    with pytest.raises(PCFError):
        extend(cfg, g, 4, {})


# whole colorer


@pytest.mark.parametrize("c", [4, 5, 6, 7])
def test_colorer_on_corpus(c):
    for g in sparse_corpus(c, 40, 200 + c):
        phi, trace = color(g, c, check=True)
        assert verify_pcf(g, phi, c) is None


def test_trace_sizes_decrease_and_serialize():
    g = gen.random_sparse(40, Fraction(5, 2), 4)
    phi, trace = color(g, 5)
    sizes = [st.size_before for st in trace.steps]
    assert sizes == sorted(sizes, reverse=True) and len(set(sizes)) == len(sizes)
    assert sizes[0] <= g.n
    lines = [json.loads(x) for x in trace.to_lines().splitlines()]
    assert len(lines) == len(trace.steps) + len(trace.terminals)
    for rec in lines:
        assert "step" in rec or rec["terminal"] in TERMINALS


def test_terminal_cases():
    _, tr = color(gen.cycle(7), 4)
    assert tr.steps == [] or tr.steps[0].config.kind is Kind.FOUR_THREAD
    _, tr = color(gen.cycle(5), 5)
    assert tr.terminals == [("cycle-component", [0, 1, 2, 3, 4])]
    _, tr = color(gen.one_subdivision(gen.petersen()), 4)
    assert tr.terminals[0][0] == "regular-subdivision+Brooks"
    _, tr = color(Graph.from_edges([], [3]), 4)
    assert tr.terminals == [("single-vertex", [3])]
    phi, tr = color(Graph.from_edges([]), 4)
    assert len(phi) == 0 and tr.terminals == [("empty", [])]


@pytest.mark.parametrize("n", range(3, 31))
def test_cycle_coloring(n):
    c = 5 if n == 5 else 4
    cols = cycle_coloring(n, c)
    assert literal_pcf(gen.cycle(n), dict(enumerate(cols)))
    assert max(cols) <= c


def test_five_cycle_with_four_colors_is_stuck():
    with pytest.raises(StuckError):
        cycle_coloring(5, 4)
    with pytest.raises(StuckError):
        color(gen.cycle(5), 4)


def test_kstar_outside_guarantee_is_stuck():
    with pytest.raises(StuckError) as exc:
        color(gen.kstar(6), 5)
    assert isinstance(exc.value.__cause__, BrooksPreconditionError)
    with pytest.raises(StuckError):
        color(gen.kstar(6), 5, fallback_exact=True)


def test_planar_corpus():
    for pg in planar_corpus(40, 33):
        phi, _ = color_planar7(pg)
        assert verify_pcf(pg.graph, phi, 7) is None


def test_planar_girth_check():
    with pytest.raises(PCFError):
        color_planar7(plane_from_planar(gen.cycle(4)))


def test_colorer_needs_four_colors():
    with pytest.raises(PCFError):
        color(gen.path(3), 3)


# hypotheses


@pytest.mark.parametrize("c", [4, 5, 6])
def test_kstar_witness_reported(c):
    with pytest.raises(HypothesisError) as exc:
        check_hypotheses(gen.kstar(c + 1), c)
    w = exc.value.witness
    assert len(w.branch) == c + 1


def test_other_hypothesis_failures():
    with pytest.raises(HypothesisError, match="induced 5-cycle"):
        check_hypotheses(gen.cycle(5), 4)
    with pytest.raises(HypothesisError, match="mad"):
        check_hypotheses(gen.petersen(), 4)
    with pytest.raises(HypothesisError, match="mad"):
        check_hypotheses(gen.complete(5), 5)
    check_hypotheses(gen.random_tree(30, 2), 4)
    check_hypotheses(gen.petersen(), 6)


# Brooks


def _size(rng):
    n = rng.randint(5, 14)
    return n, rng.randint(n, min(30, n * (n - 1) // 2))


def test_brooks_random():
    rng = random.Random(8)
    done = 0
    while done < 150:
        g = gen.random_gnm(*_size(rng), rng.randrange(10**6))
        k = g.max_degree()
        if k < 3 or any(c.m == c.n * (c.n - 1) // 2 and c.n == k + 1 for c in g.components()):
            continue
        phi = brooks_proper_color(g, k)
        assert is_proper(g, phi)
        assert set(phi.assignment.values()) <= set(range(1, k + 1))
        done += 1


def test_brooks_with_cut_vertex():
    # two K4 minus an edge joined at a vertex: 3-regular-ish with a cut vertex
    g = Graph.from_edges([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7)])
    phi = brooks_proper_color(g, 3)
    assert is_proper(g, phi)


def test_brooks_regular():
    for seed in range(20):
        g = gen.random_regular(12, 4, seed)
        assert is_proper(g, brooks_proper_color(g, 4))
    assert is_proper(gen.petersen(), brooks_proper_color(gen.petersen(), 3))


@pytest.mark.parametrize(
    "g, k",
    [(gen.complete(4), 3), (gen.complete(6), 5), (gen.cycle(5), 2), (gen.petersen(), 2), (gen.path(2), 1)],
)
def test_brooks_rejects(g, k):
    with pytest.raises(BrooksPreconditionError):
        brooks_proper_color(g, k)


def test_brooks_even_cycle_two_colors():
    assert is_proper(gen.cycle(6), brooks_proper_color(gen.cycle(6), 2))
