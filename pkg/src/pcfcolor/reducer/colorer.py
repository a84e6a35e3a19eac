"""Constructive colorer: reduce, color the rest, extend."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import BrooksPreconditionError, HypothesisError, PCFError, StuckError
from ..graph import Graph, find_induced_c5, find_kstar_subgraph, girth, recognize_one_subdivision_of_regular
from ..mad import mad_exact
from ..pcf import Coloring, pcf_color_exact, verify_pcf
from ..plane import PlaneGraph
from .brooks import brooks_proper_color
from .configs import Config, find_config
from .extend import _Painter, extend

TERMINALS = ("empty", "single-vertex", "cycle-component", "regular-subdivision+Brooks", "exact-fallback")


@dataclass
class TraceStep:
    config: Config
    size_before: int


@dataclass
class ReductionTrace:
    steps: list = field(default_factory=list)
    terminals: list = field(default_factory=list)  # (descriptor, sorted vertices)

    def to_lines(self) -> str:
        """One JSON object per line: reductions, then terminal cases."""
        out = []
        for st in self.steps:
            rec = st.config.to_record()
            rec["size_before"] = st.size_before
            out.append(json.dumps({"step": rec}, separators=(",", ":")))
        for kind, verts in self.terminals:
            out.append(json.dumps({"terminal": kind, "vertices": verts}, separators=(",", ":")))
        return "\n".join(out) + ("\n" if out else "")


def cycle_coloring(n: int, c: int) -> list[int]:
    """PCF coloring of C_n along the cycle order, using at most 4 colors unless n = 5."""
    if n % 3 == 0:
        return [1, 2, 3] * (n // 3)
    if n % 3 == 1:
        return [1, 2, 3] * (n // 3) + [4]
    if n == 5:
        if c < 5:
            raise StuckError("the 5-cycle needs 5 colors")
        return [1, 2, 3, 4, 5]
    return [1, 2, 3] * (n // 3 - 2) + [1, 2, 3, 4] * 2


def check_hypotheses(g: Graph, c: int):
    """Raise HypothesisError when ``g`` falls outside the guarantee for ``c`` colors."""
    w = find_kstar_subgraph(g, c + 1)
    if w is not None:
        raise HypothesisError(f"contains K*_{c + 1} as a subgraph", witness=w)
    if g.n == 0:
        return
    mad = mad_exact(g)
    if c == 4:
        if mad.value >= Fraction(12, 5):
            raise HypothesisError(f"mad {mad} is not below 12/5", witness=mad)
        c5 = find_induced_c5(g)
        if c5 is not None:
            raise HypothesisError("contains an induced 5-cycle", witness=c5)
    elif mad.value > Fraction(4 * c, c + 2):
        bound = Fraction(4 * c, c + 2)
        raise HypothesisError(f"mad {mad} exceeds {bound.numerator}/{bound.denominator}", witness=mad)


class _Colorer:
    """Reduce until every piece is terminal, then extend in reverse order.

    ``size_before`` in the trace is the number of vertices still in the
    residual graph (all pieces together) when the reduction was applied.
    """

    def __init__(self, c: int, mode: str, fallback_exact: bool):
        self.c = c
        self.mode = mode
        self.fallback_exact = fallback_exact
        self.trace = ReductionTrace()

    def solve(self, g: Graph, pg: PlaneGraph | None) -> dict:
        phi: dict = {}
        undo = []
        residual = g.n
        work = [(g, pg)]
        if g.n == 0:
            self.trace.terminals.append(("empty", []))
        while work:
            h, hpg = work.pop()
            comps = h.components()
            if len(comps) > 1:
                for comp in reversed(comps):
                    work.append((comp, hpg.induced(comp.adj) if hpg is not None else None))
                continue
            if h.n == 0:
                continue
            cfg = self._terminal(h, hpg, phi)
            if cfg is None:
                residual -= h.n
                continue
            self.trace.steps.append(TraceStep(cfg, residual))
            residual -= len(cfg.deletion_set)
            undo.append((cfg, h))
            S = cfg.deletion_set
            rest = h.remove_vertices(S)
            if rest.n == 0:
                self.trace.terminals.append(("empty", []))
            work.append((rest, hpg.remove_vertices(S) if hpg is not None else None))
        for cfg, h in reversed(undo):
            sub = {v: phi[v] for v in h.adj if v not in cfg.deletion_set}
            phi.update(extend(cfg, h, self.c, sub).assignment)
        return phi

    def _terminal(self, h: Graph, hpg, phi: dict) -> Config | None:
        """Color ``h`` outright into ``phi`` (returns None) or return a configuration."""
        c = self.c
        if h.n == 1:
            self.trace.terminals.append(("single-vertex", h.vertices()))
            phi[h.vertices()[0]] = 1
            return None
        if h.is_cycle():
            order = h.cycle_order()
            self.trace.terminals.append(("cycle-component", sorted(order)))
            phi.update(zip(order, cycle_coloring(len(order), c)))
            return None

        cfg = find_config(h, c, self.mode, hpg)
        if cfg is not None:
            return cfg

        rec = recognize_one_subdivision_of_regular(h)
        if rec is not None and rec[1] <= c:
            g0, _ = rec
            try:
                base = brooks_proper_color(g0, c)
            except BrooksPreconditionError as exc:
                raise StuckError(f"terminal case blocked: {exc}", residual=h) from exc
            p = _Painter(h, c, base)
            p.fill_rest([v for v in h.adj if h.degree(v) == 2], "subdivision")
            if verify_pcf(h, p.phi, c) is None:
                self.trace.terminals.append(("regular-subdivision+Brooks", h.vertices()))
                phi.update(p.phi)
                return None

        if self.fallback_exact:
            sol = pcf_color_exact(h, c)
            if sol is not None:
                self.trace.terminals.append(("exact-fallback", h.vertices()))
                phi.update(sol.assignment)
                return None
        raise StuckError(f"no reducible configuration in a component of {h.n} vertices", residual=h)


def _run(g: Graph, c: int, mode: str, pg, check: bool, fallback_exact: bool):
    if c < 4:
        raise PCFError("the constructive colorer needs c >= 4")
    if check:
        check_hypotheses(g, c)
    worker = _Colorer(c, mode, fallback_exact)
    phi = worker.solve(g, pg)
    bad = verify_pcf(g, phi, c)
    if bad is not None:
        raise PCFError(f"internal error, produced coloring fails: {bad}")
    return Coloring(phi, c), worker.trace


def color(g: Graph, c: int, check: bool = False, fallback_exact: bool = False):
    """PCF c-coloring of ``g`` built by reductions; returns (Coloring, ReductionTrace)."""
    return _run(g, c, "sparse", None, check, fallback_exact)


def color_planar7(pg: PlaneGraph, fallback_exact: bool = False):
    """PCF 7-coloring of a plane graph of girth at least 5."""
    gr = girth(pg.graph)
    if gr < 5:
        raise PCFError(f"girth {gr} is below 5")
    return _run(pg.graph, 7, "planar7", pg, False, fallback_exact)

