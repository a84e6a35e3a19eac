"""Reducible configurations: what they look like and how to find them.

A configuration names a handful of vertices (its actors) and a deletion set
``S``. Any PCF coloring of ``g - S`` extends to ``g`` by the matching
procedure in :mod:`pcfcolor.reducer.extend`.

Search order is fixed per mode. Within a kind, instances come out ordered by
their actor ids, so ``find_config`` is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from ..errors import PCFError
from ..graph import Graph, ThreadIndex
from ..plane import PlaneGraph
from ..planar import PlanarClassification, classify


class Kind(str, Enum):
    DEG1 = "Deg1"
    THREE_VX_TWO_THREAD = "ThreeVxTwoThread"
    FOUR_THREAD = "FourThread"
    THREAD_LEMMA = "ThreadLemma"
    COMBINE = "Combine"
    TWO_NEIGHBOR = "TwoNeighbor"
    TWO_THREE_NEIGHBOR = "TwoThreeNeighbor"
    BAD_VERTEX_TERRIBLE = "BadVertexTerrible"


MODES = ("sparse", "planar7")


@dataclass(frozen=True)
class Config:
    """One instance of a reducible configuration.

    ``actors`` maps role names to a vertex id, a tuple of ids, or (for
    ``faces``) a tuple of 4-tuples. ``deletion_set`` is ``S``.
    """

    kind: Kind
    actors: dict = field(hash=False, compare=True)
    deletion_set: frozenset = frozenset()

    def to_record(self) -> dict:
        def norm(x):
            if isinstance(x, (tuple, list, frozenset, set)):
                items = sorted(x) if isinstance(x, (set, frozenset)) else x
                return [norm(y) for y in items]
            return x

        return {
            "kind": self.kind.value,
            "actors": {k: norm(v) for k, v in self.actors.items()},
            "S": sorted(self.deletion_set),
        }

    def __str__(self):
        return json.dumps(self.to_record(), separators=(",", ":"))


# helpers


def _other(g: Graph, x: int, not_this: int) -> int:
    """The neighbor of the 2-vertex ``x`` that is not ``not_this``."""
    a, b = sorted(g.neighbors(x))
    return b if a == not_this else a


def _partners(g: Graph, members, v: int, S) -> dict:
    """For each neighbor ``w`` of ``v``, one neighbor of ``w`` other than ``v``.

    Prefers a partner outside ``S``, then the smallest id.
    """
    out = {}
    for w in members:
        cands = sorted(u for u in g.neighbors(w) if u != v)
        outside = [u for u in cands if u not in S]
        out[w] = (outside or cands)[0]
    return out


# c = 4


def _deg1(g: Graph) -> Iterator[Config]:
    for v in sorted(g.adj):
        if g.degree(v) == 1:
            (u,) = g.neighbors(v)
            yield Config(Kind.DEG1, {"v": v, "u": u}, frozenset({v}))


def _three_vx_two_thread(g: Graph) -> Iterator[Config]:
    for u1 in sorted(g.adj):
        if g.degree(u1) != 3:
            continue
        for v1 in g.nbrs_of_degree(u1, 2):
            v2 = _other(g, v1, u1)
            if g.degree(v2) != 2:
                continue
            u2 = _other(g, v2, v1)
            actors = {"u1": u1, "v1": v1, "v2": v2, "u2": u2}
            yield Config(Kind.THREE_VX_TWO_THREAD, actors, frozenset({v1, v2}))


def _four_thread(g: Graph, ti: ThreadIndex) -> Iterator[Config]:
    found = []
    for t in ti.threads:
        p = t.path
        k = len(p)
        if t.is_cycle:
            if k < 6:
                continue
            windows = [
                (p[(i - 1) % k], tuple(p[(i + j) % k] for j in range(4)), p[(i + 4) % k])
                for i in range(k)
            ]
        else:
            if k < 4:
                continue
            full = (t.ends[0],) + p + (t.ends[1],)
            windows = [(full[i], full[i + 1 : i + 5], full[i + 5]) for i in range(k - 3)]
        for u1, vs, u2 in windows:
            if u1 == u2:
                continue
            found.append((min(vs), vs, u1, u2))
    for _, vs, u1, u2 in sorted(found):
        actors = {"u1": u1, "v1": vs[0], "v2": vs[1], "v3": vs[2], "v4": vs[3], "u2": u2}
        yield Config(Kind.FOUR_THREAD, actors, frozenset(vs))


def _thread_at_low_vertex(g: Graph, ti: ThreadIndex) -> Iterator[Config]:
    for v in sorted(g.adj):
        d = g.degree(v)
        if d not in (4, 5):
            continue
        entries = ti.threads_at(v)
        three = [(t, u) for t, u in entries if t.k == 3]
        if not three:
            continue
        t_single = sorted(u for t, u in entries if t.k == 1)
        ends_2plus = sum(1 for t, _ in entries if t.k >= 2)
        n3p = g.n_min_deg(v, 3)
        if ends_2plus < 3 * d + n3p - 10:
            continue
        # prefer a 3-thread that does not come back to v
        three.sort(key=lambda e: (e[0].is_loop, e[1]))
        t, u = three[0]
        path = t.path if t.path[0] == u else t.path[::-1]
        _, x, y = path
        z = _other(g, y, x)
        t_double = sorted({w for tt, _ in entries if tt.k >= 2 for w in tt.path})
        S = frozenset(t_single) | frozenset(t_double) | {v, y}
        actors = {
            "v": v,
            "d": d,
            "u": u,
            "x": x,
            "y": y,
            "z": z,
            "T1": tuple(t_single),
            "T2": tuple(t_double),
        }
        yield Config(Kind.THREAD_LEMMA, actors, S)


# c >= 5


def _two_neighbor(g: Graph, c: int) -> Iterator[Config]:
    for v in sorted(g.adj):
        n2 = g.nbrs_of_degree(v, 2)
        if not n2 or 2 * g.degree(v) > len(n2) + c - 1:
            continue
        S = frozenset(n2) | {v}
        partner = {u: _other(g, u, v) for u in n2}
        # an adjacent pair inside N2(v) is picked up from the other side
        if any(p in S for p in partner.values()):
            continue
        actors = {"v": v, "N2": tuple(n2), "partner": partner}
        yield Config(Kind.TWO_NEIGHBOR, actors, S)


def _two_three_neighbor(g: Graph, c: int) -> Iterator[Config]:
    if c < 7:
        return
    for v in sorted(g.adj):
        n2 = g.nbrs_of_degree(v, 2)
        n3 = g.nbrs_of_degree(v, 3)
        if not n2 and not n3:
            continue
        if 2 * g.degree(v) > len(n2) + len(n3) + c - 1:
            continue
        S = frozenset(n2) | frozenset(n3) | {v}
        partner = {u: _other(g, u, v) for u in n2}
        if any(p in S for p in partner.values()):
            continue
        partner.update(_partners(g, n3, v, S))
        actors = {"v": v, "N2": tuple(n2), "N3": tuple(n3), "partner": partner}
        yield Config(Kind.TWO_THREE_NEIGHBOR, actors, S)


def _combine(g: Graph, c: int) -> Iterator[Config]:
    def slack(w):
        return 2 * g.degree(w) - g.n_deg(w, 2) - 2

    for v1 in sorted(g.adj):
        if g.degree(v1) < 3 or slack(v1) > c - 1:
            continue
        for v2 in g.nbrs_min_degree(v1, 3):
            if slack(v2) > c - 2:
                continue
            a, b = g.n_deg(v1, 2), g.n_deg(v2, 2)
            if not (g.degree(v1) == 3 or (a and b)):
                continue
            S = frozenset(g.nbrs_of_degree(v1, 2)) | frozenset(g.nbrs_of_degree(v2, 2)) | {v1, v2}
            yield Config(Kind.COMBINE, {"v1": v1, "v2": v2}, S)


# planar, seven colors


def _terrible_paths(pc: PlanarClassification, v: int) -> list[tuple[int, int, int, int]]:
    """``(u1, u2, u3, u4)`` for each terrible face ``v u1 u2 u3 u4`` with u4 3+."""
    g = pc.pg.graph
    out = []
    for fi in pc.terrible_at[v]:
        f = pc.pg.faces[fi]
        i = f.index(v)
        walk = [f[(i + j) % 5] for j in range(1, 5)]
        for w in (walk, walk[::-1]):
            if g.degree(w[0]) == 2 and g.degree(w[2]) == 2 and g.degree(w[3]) >= 3:
                out.append(tuple(w))
                break
    return sorted(set(out))


def _bad_vertex_terrible(g: Graph, pc: PlanarClassification) -> Iterator[Config]:
    for v in sorted(g.adj):
        if not pc.bad[v]:
            continue
        n2 = g.nbrs_of_degree(v, 2)
        n3 = g.nbrs_of_degree(v, 3)
        t = len(pc.X[v])
        if 2 * g.degree(v) - len(n2) - len(n3) - t > 6:
            continue
        S = frozenset(n2) | frozenset(n3) | {v}
        partner = _partners(g, n2 + n3, v, S)
        actors = {
            "v": v,
            "N2": tuple(n2),
            "N3": tuple(n3),
            "X": tuple(pc.X[v]),
            "faces": tuple(_terrible_paths(pc, v)),
            "partner": partner,
        }
        yield Config(Kind.BAD_VERTEX_TERRIBLE, actors, S)


def iter_configs(
    g: Graph, c: int, mode: str = "sparse", pg: PlaneGraph | None = None
) -> Iterator[Config]:
    """Every configuration instance in priority order (lazily)."""
    if mode not in MODES:
        raise PCFError(f"unknown mode {mode!r}")
    if mode == "planar7":
        if pg is None:
            raise PCFError("planar7 mode needs a plane embedding")
        if c != 7:
            raise PCFError("planar7 mode colors with exactly 7 colors")
        if pg.graph != g:
            raise PCFError("plane embedding does not match the graph")
    elif pg is not None:
        raise PCFError("a plane embedding is only used in planar7 mode")
    if c < 4:
        raise PCFError("the reducer needs c >= 4")

    yield from _deg1(g)
    if mode == "planar7":
        yield from _two_three_neighbor(g, 7)
        yield from _combine(g, 7)
        yield from _bad_vertex_terrible(g, classify(pg))
    elif c == 4:
        ti = ThreadIndex(g)
        yield from _three_vx_two_thread(g)
        yield from _four_thread(g, ti)
        yield from _thread_at_low_vertex(g, ti)
    else:
        yield from _two_neighbor(g, c)
        yield from _two_three_neighbor(g, c)
        yield from _combine(g, c)


def find_config(
    g: Graph, c: int, mode: str = "sparse", pg: PlaneGraph | None = None
) -> Config | None:
    """The first configuration in priority order, or None."""
    return next(iter_configs(g, c, mode, pg), None)
