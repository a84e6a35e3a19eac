"""Text formats: edge lists, rotation systems and colorings.

Edge list::

    # comment
    p 4 3        (optional header: n vertices 0..n-1, m edges)
    0 1
    1 2
    3            (a lone id declares an isolated vertex)

Rotation system, one line per vertex, neighbors clockwise::

    0: 1 3 2

Coloring::

    0 1
    1 2
"""

from __future__ import annotations

from typing import Mapping

from .errors import GraphParseError, GraphValidityError
from .graph import Graph
from .plane import PlaneGraph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _int(tok: str, lineno: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise GraphParseError(f"expected a non-negative integer, got {tok!r}", lineno) from None
    if val < 0:
        raise GraphParseError(f"negative vertex id {val}", lineno)
    return val


def parse_graph(text: str) -> Graph:
    header = None
    vertices: set[int] = set()
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in _content_lines(text):
        toks = line.split()
        if toks[0] == "p":
            if header is not None or edges or vertices:
                raise GraphParseError("header must come first and only once", lineno)
            if len(toks) != 3:
                raise GraphParseError("header must be 'p <n> <m>'", lineno)
            header = (_int(toks[1], lineno), _int(toks[2], lineno))
            vertices.update(range(header[0]))
            continue
        if len(toks) == 1:
            vertices.add(_int(toks[0], lineno))
            continue
        if len(toks) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        if u == v:
            raise GraphValidityError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphValidityError(f"line {lineno}: duplicate edge {u}-{v}")
        if header is not None and max(u, v) >= header[0]:
            raise GraphParseError(f"vertex {max(u, v)} outside header range", lineno)
        seen.add(key)
        edges.append((u, v))
    if header is not None and header[1] != len(edges):
        raise GraphParseError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(edges, vertices)


def emit_graph(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges()]
    lines += [str(v) for v in g.vertices() if g.degree(v) == 0]
    return "\n".join(lines) + "\n"


def parse_plane_graph(text: str) -> PlaneGraph:
    rot: dict[int, list[int]] = {}
    for lineno, line in _content_lines(text):
        head, sep, rest = line.partition(":")
        if not sep:
            raise GraphParseError(f"expected 'v: a b c', got {line!r}", lineno)
        v = _int(head.strip(), lineno)
        if v in rot:
            raise GraphParseError(f"vertex {v} listed twice", lineno)
        rot[v] = [_int(t, lineno) for t in rest.split()]
    for v, nb in rot.items():
        for u in nb:
            if u not in rot or v not in rot[u]:
                raise GraphValidityError(f"rotation of {v} names {u}, which does not list {v} back")
    return PlaneGraph(rot)


def emit_plane_graph(pg: PlaneGraph) -> str:
    return "".join(
        f"{v}: {' '.join(map(str, pg.rotation[v]))}".rstrip() + "\n" for v in sorted(pg.rotation)
    )


def parse_coloring(text: str) -> dict[int, int]:
    out = {}
    for lineno, line in _content_lines(text):
        toks = line.split()
        if len(toks) != 2:
            raise GraphParseError(f"expected 'v color', got {line!r}", lineno)
        v, col = _int(toks[0], lineno), _int(toks[1], lineno)
        if v in out:
            raise GraphParseError(f"vertex {v} colored twice", lineno)
        out[v] = col
    return out


def emit_coloring(phi: Mapping[int, int]) -> str:
    return "".join(f"{v} {phi[v]}\n" for v in sorted(phi))
