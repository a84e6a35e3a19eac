"""Plane graphs given by a rotation system, and face tracing.

Convention: ``rotation[v]`` lists the neighbors of ``v`` in clockwise order.
The dart ``(u, v)`` is followed by ``(v, w)`` where ``w`` is the neighbor
after ``u`` in ``rotation[v]`` (cyclically). Each face is recorded as the
sequence of dart tails along its boundary walk, so ``len(face)`` is the face
length with bridges counted twice.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import GraphValidityError, NonPlanarEmbeddingError
from .graph import Graph


class PlaneGraph:
    __slots__ = ("graph", "rotation", "faces", "_pos")

    def __init__(self, rotation: Mapping[int, Iterable[int]], check_euler: bool = True):
        rot = {v: tuple(nb) for v, nb in rotation.items()}
        for v, nb in rot.items():
            if len(set(nb)) != len(nb):
                raise GraphValidityError(f"rotation at {v} repeats a neighbor")
        self.graph = Graph({v: set(nb) for v, nb in rot.items()})
        self.rotation = rot
        self._pos = {v: {u: i for i, u in enumerate(nb)} for v, nb in rot.items()}
        self.faces = self._trace()
        if check_euler:
            self._check_euler()

    def _next_dart(self, u: int, v: int) -> tuple[int, int]:
        rv = self.rotation[v]
        w = rv[(self._pos[v][u] + 1) % len(rv)]
        return v, w

    def _trace(self) -> list[tuple[int, ...]]:
        faces = []
        used: set[tuple[int, int]] = set()
        for u in sorted(self.rotation):
            for v in sorted(self.rotation[u]):
                if (u, v) in used:
                    continue
                walk = []
                dart = (u, v)
                while dart not in used:
                    used.add(dart)
                    walk.append(dart[0])
                    dart = self._next_dart(*dart)
                faces.append(tuple(walk))
        return faces

    def _check_euler(self):
        for comp in self.graph.components():
            if comp.m == 0:
                continue
            vs = set(comp.adj)
            nf = sum(1 for f in self.faces if f[0] in vs)
            if comp.n - comp.m + nf != 2:
                raise NonPlanarEmbeddingError(
                    f"component at {min(vs)}: V - E + F = {comp.n - comp.m + nf}, expected 2"
                )

    def __repr__(self):
        return f"PlaneGraph(n={self.graph.n}, m={self.graph.m}, faces={len(self.faces)})"

    def __eq__(self, other):
        return isinstance(other, PlaneGraph) and self.rotation == other.rotation

    def face_darts(self, face: tuple[int, ...]) -> list[tuple[int, int]]:
        return [(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]

    def faces_at(self, v: int) -> list[int]:
        """Indices of faces incident with ``v`` (each listed once)."""
        return [i for i, f in enumerate(self.faces) if v in f]

    def boundary_neighbors(self, v: int, face: tuple[int, ...]) -> set[int]:
        """Neighbors of ``v`` joined to it by an edge on the face boundary."""
        out = set()
        L = len(face)
        for i, x in enumerate(face):
            if x == v:
                out.add(face[(i - 1) % L])
                out.add(face[(i + 1) % L])
        out.discard(v)
        return out

    def remove_vertices(self, removed: Iterable[int]) -> "PlaneGraph":
        removed = set(removed)
        rot = {
            v: [u for u in nb if u not in removed]
            for v, nb in self.rotation.items()
            if v not in removed
        }
        return PlaneGraph(rot, check_euler=False)

    def induced(self, keep: Iterable[int]) -> "PlaneGraph":
        keep = set(keep)
        return self.remove_vertices(set(self.rotation) - keep)


def one_subdivision_plane(pg: PlaneGraph) -> PlaneGraph:
    """Subdivide every edge once; new vertices numbered after the maximum id in edge order."""
    nxt = max(pg.rotation, default=-1) + 1
    mid = {}
    for u, v in pg.graph.edges():
        mid[(u, v)] = mid[(v, u)] = nxt
        nxt += 1
    rot: dict[int, list[int]] = {v: [mid[(v, u)] for u in nb] for v, nb in pg.rotation.items()}
    for (u, v), x in mid.items():
        if u < v:
            rot[x] = [u, v]
    return PlaneGraph(rot)


def plane_from_planar(g: Graph) -> PlaneGraph:
    """Embed a planar graph (via networkx's planarity test) as a PlaneGraph."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.adj)
    h.add_edges_from(g.edges())
    ok, emb = nx.check_planarity(h)
    if not ok:
        raise GraphValidityError("graph is not planar")
    rot = {v: list(emb.neighbors_cw_order(v)) for v in g.adj}
    return PlaneGraph(rot)
