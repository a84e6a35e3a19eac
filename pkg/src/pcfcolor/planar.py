"""Vertex and face classification on plane graphs of girth at least 5.

Terminology used by the seven-color discharging rules:

* ``u`` is a boundary neighbor of ``v`` on face ``f`` when the edge ``uv``
  lies on the boundary of ``f``.
* a 4+-vertex is *giving* on ``f`` when it has a boundary 3+-neighbor there;
  ``f5star[v]`` lists the 5-faces on which ``v`` is giving.
* a 5-face is *terrible* when it carries exactly two 2-vertices and its other
  three vertices have degree at most 8.
* a vertex is *bad* when it is a 4-vertex with one 2-neighbor, a 5-vertex
  with two 2-neighbors giving on all five incident 5-faces, or a 5-vertex
  with three 2-neighbors. *good* means 4+ and not bad.
* ``t[v]`` counts the boundary 3+-neighbors of ``v`` over terrible faces at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .plane import PlaneGraph


@dataclass
class PlanarClassification:
    pg: PlaneGraph
    n2: dict
    n3: dict
    terrible: dict  # face index -> bool (5-faces only)
    f5star: dict  # vertex -> list of face indices
    bad: dict
    good: dict
    X: dict  # vertex -> sorted boundary 3+-neighbors on terrible faces
    terrible_at: dict  # vertex -> list of terrible face indices incident with it

    @property
    def t(self) -> dict:
        return {v: len(xs) for v, xs in self.X.items()}

    def giving(self, v: int, fi: int) -> bool:
        g = self.pg.graph
        if g.degree(v) < 4:
            return False
        face = self.pg.faces[fi]
        return any(g.degree(u) >= 3 for u in self.pg.boundary_neighbors(v, face))


def classify(pg: PlaneGraph) -> PlanarClassification:
    g = pg.graph
    deg = {v: g.degree(v) for v in g.adj}
    n2 = {v: g.n_deg(v, 2) for v in g.adj}
    n3 = {v: g.n_deg(v, 3) for v in g.adj}
    faces = pg.faces
    terrible = {}
    for fi, f in enumerate(faces):
        if len(f) != 5:
            continue
        twos = sum(1 for x in f if deg[x] == 2)
        rest_ok = all(3 <= deg[x] <= 8 for x in f if deg[x] != 2)
        terrible[fi] = len(set(f)) == 5 and twos == 2 and rest_ok

    faces_at: dict[int, list[int]] = {v: [] for v in g.adj}
    for fi, f in enumerate(faces):
        for x in set(f):
            faces_at[x].append(fi)

    f5star = {}
    X = {}
    terrible_at = {}
    for v in g.adj:
        terrible_at[v] = [fi for fi in faces_at[v] if terrible.get(fi)]
        xs = set()
        for fi in terrible_at[v]:
            xs |= {u for u in pg.boundary_neighbors(v, faces[fi]) if deg[u] >= 3}
        X[v] = sorted(xs)
        if deg[v] >= 4:
            f5star[v] = [
                fi
                for fi in faces_at[v]
                if len(faces[fi]) == 5
                and any(deg[u] >= 3 for u in pg.boundary_neighbors(v, faces[fi]))
            ]
        else:
            f5star[v] = []

    bad = {}
    good = {}
    for v in g.adj:
        d = deg[v]
        b = (
            (d == 4 and n2[v] == 1)
            or (d == 5 and n2[v] == 2 and len(f5star[v]) == 5)
            or (d == 5 and n2[v] == 3)
        )
        bad[v] = b
        good[v] = d >= 4 and not b
    return PlanarClassification(pg, n2, n3, terrible, f5star, bad, good, X, terrible_at)
