"""Extending a PCF coloring of ``g - S`` back to ``g``.

Every procedure states, per step, the set of colors the vertex being colored
must avoid. On top of that set, :meth:`_Painter.pick` always forbids the
colors of already-colored neighbors (properness) and, when it can afford to,
also steers clear of colors that would destroy the unique color of a colored
neighbor or that would fail to give one to a neighbor lacking it. Those
extra colors are only a preference: if nothing is left, the pick falls back
to the stated set. The smallest remaining color wins.
"""

from __future__ import annotations

from collections import Counter

from ..errors import ExtensionFailed, PCFError
from ..graph import Graph
from ..pcf import Coloring, verify_pcf
from ..plane import PlaneGraph
from .configs import Config, Kind


class _Painter:
    def __init__(self, g: Graph, c: int, phi):
        self.g = g
        self.c = c
        self.phi = dict(phi.assignment if isinstance(phi, Coloring) else phi)

    # reading the coloring

    def col(self, v):
        return self.phi.get(v)

    def cols(self, vs) -> set:
        return {self.phi[v] for v in vs if v in self.phi}

    def around(self, v) -> Counter:
        return Counter(self.phi[u] for u in self.g.neighbors(v) if u in self.phi)

    def star(self, v):
        """Smallest color seen exactly once around ``v``, or None."""
        singles = [k for k, n in self.around(v).items() if n == 1]
        return min(singles) if singles else None

    def stars(self, vs) -> set:
        return {s for s in (self.star(v) for v in vs) if s is not None}

    def n_and_star(self, v) -> set:
        """phi(N(v)) together with phi*(N(v))."""
        nb = self.g.neighbors(v)
        return self.cols(nb) | self.stars(nb)

    # writing the coloring

    def _soft(self, x) -> set:
        soft = set()
        for y in self.g.neighbors(x):
            if y not in self.phi:
                continue
            s = self.star(y)
            if s is not None:
                soft.add(s)
            else:
                soft |= set(self.around(y))
        return soft

    def choose(self, targets, avoid, step) -> int:
        targets = list(targets)
        hard = set(avoid)
        soft = set()
        for x in targets:
            hard |= self.cols(self.g.neighbors(x))
            soft |= self._soft(x)
        hard.discard(None)
        for pool in (hard | soft, hard):
            for k in range(1, self.c + 1):
                if k not in pool:
                    return k
        raise ExtensionFailed(step, targets[0], f"all {self.c} colors excluded")

    def paint(self, x, avoid, step) -> int:
        k = self.choose([x], avoid, step)
        self.phi[x] = k
        return k

    def assign(self, x, k, step):
        if k is None or any(self.phi.get(u) == k for u in self.g.neighbors(x)):
            raise ExtensionFailed(step, x, f"color {k} is not available")
        self.phi[x] = k

    def erase(self, x):
        self.phi.pop(x, None)

    def fill_rest(self, vertices, step):
        for u in sorted(vertices):
            if u not in self.phi:
                self.paint(u, self.n_and_star(u), step)


def _other(g: Graph, x: int, not_this: int) -> int:
    a, b = sorted(g.neighbors(x))
    return b if a == not_this else a


# one procedure per kind


def _deg1(p: _Painter, a: dict):
    v, u = a["v"], a["u"]
    p.paint(v, {p.col(u), p.star(u)}, "deg1")


def _three_vx_two_thread(p: _Painter, a: dict):
    u1, v1, v2, u2 = a["u1"], a["v1"], a["v2"], a["u2"]
    p.paint(v2, {p.col(u2), p.star(u2), p.col(u1)}, "v2")
    p.paint(v1, {p.col(v2), p.col(u2), p.col(u1)}, "v1")


def _four_thread(p: _Painter, a: dict):
    u1, u2 = a["u1"], a["u2"]
    v1, v2, v3, v4 = a["v1"], a["v2"], a["v3"], a["v4"]
    A1 = {p.col(u1), p.star(u1)} - {None}
    A2 = {p.col(u2), p.star(u2)} - {None}
    if A1 & A2:
        k = p.choose([v1, v4], A1 | A2, "ends-shared")
        p.assign(v1, k, "ends-shared")
        p.assign(v4, k, "ends-shared")
    else:
        p.assign(v1, p.col(u2), "ends-swapped")
        p.assign(v4, p.col(u1), "ends-swapped")
    p.fill_rest([v2, v3], "middle")


def _thread_at_low_vertex(p: _Painter, a: dict):
    g = p.g
    v, d, u, x, y, z = a["v"], a["d"], a["u"], a["x"], a["y"], a["z"]
    t1 = a["T1"]
    high = g.nbrs_min_degree(v, 3)
    far_t1 = {_other(g, w, v) for w in t1}
    C = p.cols(set(high) | far_t1) | p.stars(high)
    loop = z == v

    if loop:
        p.paint(v, C, "v-loop")
    elif d == 5:
        p.assign(v, p.col(z), "case1-v")
        case = 1
    elif p.star(z) is not None:
        p.assign(x, p.star(z), "case2-x")
        p.paint(v, C | {p.col(x)}, "case2-v")
        case = 2
    else:
        k = p.choose([v, y], C | {p.col(z)}, "case3-vy")
        p.assign(v, k, "case3-vy")
        p.assign(y, k, "case3-vy")
        case = 3

    # back-color every other thread at v, far end first
    done = {u, x, y}
    for w in g.neighbors(v):
        if w in done or g.degree(w) != 2:
            continue
        run = [w]
        prev, cur = v, w
        while True:
            nxt = _other(g, cur, prev)
            if g.degree(nxt) != 2 or nxt == v:
                break
            run.append(nxt)
            prev, cur = cur, nxt
        done.update(run)
        tail = _other(g, run[-1], run[-2] if len(run) > 1 else v)
        chain = run + [tail]
        for i in range(len(run) - 1, -1, -1):
            nb = chain[i + 1]
            p.paint(run[i], {p.col(nb), p.star(nb), p.col(v)}, "back-color")

    others = [w for w in g.neighbors(v) if w != u and w in p.phi and not (loop and w == y)]
    alpha = {p.star(v)} if p.star(v) is not None else p.cols(others)
    if loop:
        p.paint(u, {p.col(v)} | alpha, "loop-u")
        p.paint(y, {p.col(v), p.col(u)}, "loop-y")
        p.paint(x, {p.col(v), p.col(u), p.col(y)}, "loop-x")
    elif case == 1:
        p.paint(u, {p.col(v)} | alpha, "case1-u")
        p.paint(y, {p.col(z), p.star(z), p.col(u)}, "case1-y")
        p.paint(x, {p.col(v), p.col(u), p.col(y)}, "case1-x")
    elif case == 2:
        p.paint(u, {p.col(v), p.col(x)} | alpha, "case2-u")
        p.paint(y, {p.col(z), p.star(z), p.col(u)}, "case2-y")
    else:
        p.paint(u, {p.col(v)} | alpha, "case3-u")
        p.paint(x, {p.col(v), p.col(u), p.col(z)}, "case3-x")


def _neighbor_count(p: _Painter, a: dict):
    """Shared body for TwoNeighbor and TwoThreeNeighbor."""
    g = p.g
    v = a["v"]
    n2 = list(a["N2"])
    n3 = list(a.get("N3", ()))
    partner = a["partner"]
    floor = 4 if "N3" in a else 3
    high = g.nbrs_min_degree(v, floor)
    p.paint(v, p.cols(partner.values()) | p.cols(high) | p.stars(high), "v")
    if n2:
        u0 = n2[0]
        w = partner[u0]
        p.paint(u0, p.cols(high) | {p.col(v), p.col(w), p.star(w)}, "u0")
        for u in n2[1:]:
            w = partner[u]
            p.paint(u, {p.col(w), p.star(w), p.col(v), p.col(u0)}, "N2")
    for w in n3:
        p.paint(w, p.n_and_star(w), "N3")


def _combine(p: _Painter, a: dict):
    g = p.g
    v1, v2 = a["v1"], a["v2"]
    n2 = {1: g.nbrs_of_degree(v1, 2), 2: g.nbrs_of_degree(v2, 2)}
    vs = {1: v1, 2: v2}
    rest = {i: [w for w in g.nbrs_min_degree(vs[i], 3) if w != vs[3 - i]] for i in (1, 2)}
    C = {i: p.cols(rest[i]) | p.stars(rest[i] + n2[i]) for i in (1, 2)}

    if n2[1] and n2[2]:
        p.paint(v1, C[1], "both-v1")
        p.paint(v2, C[2] | {p.col(v1)}, "both-v2")
        for i in (1, 2):
            if p.star(vs[i]) is None:
                ui = n2[i][0]
                xi = _other(g, ui, vs[i])
                avoid = p.cols(g.nbrs_min_degree(vs[i], 3)) | {p.col(vs[i]), p.col(xi), p.star(xi)}
                p.paint(ui, avoid, f"both-u{i}")
    else:
        C1s = set(C[1])
        if p.star(v2) is None:
            C1s |= p.cols(rest[2])
        p.paint(v1, C1s, "v1")
        if p.star(v1) is None:
            lone = sorted(w for w in g.neighbors(v1) if w != v2 and w in p.phi)
            p.paint(v2, C[2] | p.cols(lone[:1]), "v2-first")
            p.erase(v1)
            p.paint(v1, C1s | {p.col(v2)}, "v1-recolor")
        else:
            p.paint(v2, C[2] | {p.col(v1)}, "v2")
    p.fill_rest(n2[1] + n2[2], "claim")


def _bad_vertex_terrible(p: _Painter, a: dict):
    g = p.g
    v = a["v"]
    X = set(a["X"])
    partner = a["partner"]
    high = g.nbrs_min_degree(v, 4)
    p.paint(
        v,
        p.cols(partner.values()) | p.cols(high) | p.stars(set(high) - X),
        "v",
    )
    for u1, u2, u3, u4 in a["faces"]:
        p.erase(u3)
        if u1 not in p.phi:
            avoid = p.n_and_star(u1)
            for w in (v, u2):
                if p.star(w) is None:
                    avoid |= set(p.around(w))
            p.paint(u1, avoid, "face-u1")
        avoid = p.n_and_star(u3)
        if p.star(u4) is None:
            avoid |= set(p.around(u4))
        p.paint(u3, avoid, "face-u3")
    p.fill_rest(list(a["N2"]) + list(a["N3"]), "rest")


_PROCEDURES = {
    Kind.DEG1: _deg1,
    Kind.THREE_VX_TWO_THREAD: _three_vx_two_thread,
    Kind.FOUR_THREAD: _four_thread,
    Kind.THREAD_LEMMA: _thread_at_low_vertex,
    Kind.TWO_NEIGHBOR: _neighbor_count,
    Kind.TWO_THREE_NEIGHBOR: _neighbor_count,
    Kind.COMBINE: _combine,
    Kind.BAD_VERTEX_TERRIBLE: _bad_vertex_terrible,
}


def extend(config: Config, g: Graph, c: int, phi, pg: PlaneGraph | None = None) -> Coloring:
    """Extend a PCF c-coloring of ``g - S`` to ``g`` and verify the result."""
    S = config.deletion_set
    base = phi.assignment if isinstance(phi, Coloring) else phi
    rest = g.remove_vertices(S)
    missing = [v for v in rest.adj if v not in base]
    if missing:
        raise PCFError(f"coloring does not cover g - S (missing {sorted(missing)[:5]})")
    p = _Painter(g, c, {v: k for v, k in base.items() if v in rest.adj})
    _PROCEDURES[config.kind](p, config.actors)
    p.fill_rest([v for v in S if v not in p.phi], "leftover")
    bad = verify_pcf(g, p.phi, c)
    if bad is not None:
        raise ExtensionFailed(f"{config.kind.value}:verify", bad.witness[0], str(bad))
    return Coloring(p.phi, c)
