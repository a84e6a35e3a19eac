"""Constructive proper k-coloring of graphs with maximum degree k (Brooks)."""

from __future__ import annotations

from collections import deque

from ..errors import BrooksPreconditionError
from ..graph import Graph
from ..pcf import Coloring


def _bfs_order(g: Graph, root: int, allowed=None) -> list[int]:
    seen = {root}
    order = [root]
    q = deque([root])
    while q:
        x = q.popleft()
        for y in sorted(g.neighbors(x)):
            if y not in seen and (allowed is None or y in allowed):
                seen.add(y)
                order.append(y)
                q.append(y)
    return order


def _greedy(g: Graph, order, k: int, phi: dict) -> dict:
    for v in order:
        if v in phi:
            continue
        used = {phi[u] for u in g.neighbors(v) if u in phi}
        col = next((i for i in range(1, k + 1) if i not in used), None)
        if col is None:
            raise BrooksPreconditionError(f"greedy step ran out of colors at vertex {v}")
        phi[v] = col
    return phi


def _cut_vertex(g: Graph) -> int | None:
    """Smallest articulation point of a connected graph, or None."""
    verts = sorted(g.adj)
    disc, low = {}, {}
    cuts = set()
    timer = 0
    root = verts[0]
    # iterative Tarjan
    stack = [(root, None, iter(sorted(g.neighbors(root))))]
    disc[root] = low[root] = timer
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w in disc:
                low[v] = min(low[v], disc[w])
            else:
                timer += 1
                disc[w] = low[w] = timer
                stack.append((w, v, iter(sorted(g.neighbors(w)))))
                if v == root:
                    root_children += 1
                advanced = True
                break
        if advanced:
            continue
        stack.pop()
        if parent is not None:
            low[parent] = min(low[parent], low[v])
            if parent != root and low[v] >= disc[parent]:
                cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return min(cuts) if cuts else None


def _color_component(g: Graph, k: int) -> dict:
    verts = sorted(g.adj)
    if len(verts) == 1:
        return {verts[0]: 1}
    if k == 2:
        # paths and even cycles
        phi = {}
        for v in _bfs_order(g, verts[0]):
            if v == verts[0]:
                phi[v] = 1
                continue
            parent_cols = {phi[u] for u in g.neighbors(v) if u in phi}
            phi[v] = 2 if 1 in parent_cols else 1
        if any(phi[a] == phi[b] for a, b in g.edges()):
            raise BrooksPreconditionError("odd cycle needs 3 colors", component=g)
        return phi

    low = [v for v in verts if g.degree(v) < k]
    if low:
        order = _bfs_order(g, low[0])
        return _greedy(g, reversed(order), k, {})

    x = _cut_vertex(g)
    if x is not None:
        rest = g.remove_vertices([x])
        phi = {x: 1}
        for comp in rest.components():
            piece = g.induced(set(comp.adj) | {x})
            sub = _color_component(piece, k)
            # permute colors of this piece so that x gets color 1
            swap = {sub[x]: 1, 1: sub[x]}
            for v in comp.adj:
                phi[v] = swap.get(sub[v], sub[v])
        return phi

    if g.n == k + 1 and g.m == (k + 1) * k // 2:
        raise BrooksPreconditionError(f"component is K_{k + 1}", component=g)

    # 2-connected, k-regular, not complete: find y with non-adjacent
    # neighbors a, b such that g - {a, b} stays connected
    for y in verts:
        ny = sorted(g.neighbors(y))
        for i, a in enumerate(ny):
            for b in ny[i + 1 :]:
                if g.has_edge(a, b):
                    continue
                h = g.remove_vertices([a, b])
                if not h.is_connected():
                    continue
                order = _bfs_order(h, y)
                phi = {a: 1, b: 1}
                # farthest from y first, y last
                return _greedy(g, list(reversed(order)), k, phi)
    raise BrooksPreconditionError("no suitable vertex triple found", component=g)


def brooks_proper_color(g0: Graph, k: int) -> Coloring:
    """Proper k-coloring of ``g0``; needs max degree <= k, no K_{k+1}, no odd cycle at k = 2."""
    if k < 1:
        raise BrooksPreconditionError("k must be positive")
    if g0.max_degree() > k:
        raise BrooksPreconditionError(f"maximum degree {g0.max_degree()} exceeds {k}")
    phi: dict = {}
    for comp in g0.components():
        if k == 1 and comp.m:
            raise BrooksPreconditionError("an edge needs 2 colors", component=comp)
        if comp.n == k + 1 and comp.m == (k + 1) * k // 2:
            raise BrooksPreconditionError(f"component is K_{k + 1}", component=comp)
        phi.update(_color_component(comp, k))
    return Coloring(phi, k)
