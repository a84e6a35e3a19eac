"""Discharging engine: the four fixed rule systems, ledgers and audits.

Elements are ``("v", id)`` for vertices and ``("f", index)`` for faces of a
plane graph (index into ``PlaneGraph.faces``). All charges are Fractions.

Rule systems
------------
``C4``      charge d(v); every 3+-vertex sends 1/5 to each 2-vertex on each
            thread leaving it (a thread with both ends at v pays twice).
``C5``      charge d(v); R1: 3+-vertices send 3/7 to each 2-neighbor;
            R2: 4+-vertices send 1/7 to each 3-neighbor with a 2-neighbor and
            to each 4-neighbor with at least three 2-neighbors.
``C6+(c)``  charge d(v); R1: 4+-vertices send (c-2)/(c+2) to each 2-neighbor;
            R2: 4+-vertices send (c-6)/(3(c+2)) to each 3-neighbor.
``PLANAR5`` charge 2d(v)-6 on vertices and d(f)-6 on faces;
            R1: 4+-vertices send 1 to each 2-neighbor;
            R2: good vertices send 1/2 to each face they give on;
            R3: bad vertices send 1/2 to each terrible face they give on, and
            to the other faces they give on 1/3 (R3A: a 5-vertex with exactly
            two 2-neighbors) or 1/4 (R3B: otherwise);
            R4: 9+-vertices send 1/3 to each incident 5-face.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice

from .errors import PCFError
from .graph import Graph, ThreadIndex, ball, girth, recognize_one_subdivision_of_regular
from .plane import PlaneGraph
from .planar import classify


@dataclass(frozen=True)
class RuleSet:
    name: str  # "C4" | "C5" | "C6PLUS" | "PLANAR5"
    c: int

    @classmethod
    def c4(cls) -> "RuleSet":
        return cls("C4", 4)

    @classmethod
    def c5(cls) -> "RuleSet":
        return cls("C5", 5)

    @classmethod
    def c6plus(cls, c: int) -> "RuleSet":
        if c < 6:
            raise PCFError("the C6+ rules need c >= 6")
        return cls("C6PLUS", c)

    @classmethod
    def planar5(cls) -> "RuleSet":
        return cls("PLANAR5", 7)

    @classmethod
    def parse(cls, text: str) -> "RuleSet":
        """Parse ``c4``, ``c5``, ``c6:<c>`` or ``planar5``."""
        t = text.strip().lower()
        if t == "c4":
            return cls.c4()
        if t == "c5":
            return cls.c5()
        if t == "planar5":
            return cls.planar5()
        if t.startswith("c6:"):
            try:
                c = int(t[3:])
            except ValueError:
                raise PCFError(f"bad color count in {text!r}") from None
            return cls.c6plus(c)
        raise PCFError(f"unknown rule set {text!r} (use c4, c5, c6:<c> or planar5)")

    @property
    def bound(self) -> Fraction:
        if self.name == "C4":
            return Fraction(12, 5)
        if self.name == "PLANAR5":
            return Fraction(0)
        return Fraction(4 * self.c, self.c + 2)

    @property
    def needs_plane(self) -> bool:
        return self.name == "PLANAR5"

    def __str__(self):
        return f"C6PLUS({self.c})" if self.name == "C6PLUS" else self.name


def _elem_str(e) -> str:
    return f"{e[0]}{e[1]}"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class ChargeLedger:
    rules: RuleSet
    initial: dict
    transfers: list  # (from, to, amount, rule)
    final: dict

    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    def is_conserved(self) -> bool:
        return self.total_initial() == self.total_final()

    def vertex_final(self, v: int) -> Fraction:
        return self.final[("v", v)]

    def to_lines(self) -> str:
        """Machine-readable form, one record per line."""
        out = [f"rules {self.rules}"]
        for e in sorted(self.initial):
            out.append(f"initial {_elem_str(e)} {_frac_str(self.initial[e])}")
        for a, b, amt, rule in self.transfers:
            out.append(f"transfer {rule} {_elem_str(a)} {_elem_str(b)} {_frac_str(amt)}")
        for e in sorted(self.final):
            out.append(f"final {_elem_str(e)} {_frac_str(self.final[e])}")
        return "\n".join(out) + "\n"


def _graph_of(g) -> Graph:
    return g.graph if isinstance(g, PlaneGraph) else g


def _check_kind(g, rs: RuleSet):
    if rs.needs_plane:
        if not isinstance(g, PlaneGraph):
            raise PCFError("the PLANAR5 rules need a plane graph (rotation system)")
        if girth(g.graph) < 5:
            raise PCFError("the PLANAR5 rules need girth at least 5")


def initial_charges(g, rs: RuleSet) -> dict:
    _check_kind(g, rs)
    gr = _graph_of(g)
    if rs.needs_plane:
        ch = {("v", v): Fraction(2 * gr.degree(v) - 6) for v in gr.adj}
        for i, f in enumerate(g.faces):
            ch[("f", i)] = Fraction(len(f) - 6)
        return ch
    return {("v", v): Fraction(gr.degree(v)) for v in gr.adj}


def _transfers_c4(g: Graph):
    ti = ThreadIndex(g)
    amt = Fraction(1, 5)
    for v in g.adj:
        if g.degree(v) < 3:
            continue
        for t, _ in ti.threads_at(v):
            for w in t.path:
                yield v, w, amt, "R1"


def _transfers_c5(g: Graph):
    for v in g.adj:
        d = g.degree(v)
        if d >= 3:
            for u in g.nbrs_of_degree(v, 2):
                yield v, u, Fraction(3, 7), "R1"
        if d >= 4:
            for u in g.nbrs_of_degree(v, 3):
                if g.n_deg(u, 2) >= 1:
                    yield v, u, Fraction(1, 7), "R2"
            for w in g.nbrs_of_degree(v, 4):
                if g.n_deg(w, 2) >= 3:
                    yield v, w, Fraction(1, 7), "R2"


def _transfers_c6plus(g: Graph, c: int):
    a1 = Fraction(c - 2, c + 2)
    a2 = Fraction(c - 6, 3 * (c + 2))
    for v in g.adj:
        if g.degree(v) < 4:
            continue
        for u in g.nbrs_of_degree(v, 2):
            yield v, u, a1, "R1"
        if a2:
            for u in g.nbrs_of_degree(v, 3):
                yield v, u, a2, "R2"


def _transfers_planar5(pg: PlaneGraph):
    g = pg.graph
    pc = classify(pg)
    for v in g.adj:
        d = g.degree(v)
        if d < 4:
            continue
        for u in g.nbrs_of_degree(v, 2):
            yield ("v", v), ("v", u), Fraction(1), "R1"
        for fi in pc.f5star[v]:
            if pc.good[v]:
                yield ("v", v), ("f", fi), Fraction(1, 2), "R2"
            elif pc.bad[v] and d in (4, 5):
                if pc.terrible.get(fi):
                    yield ("v", v), ("f", fi), Fraction(1, 2), "R3"
                elif d == 5 and pc.n2[v] == 2:
                    yield ("v", v), ("f", fi), Fraction(1, 3), "R3A"
                else:
                    yield ("v", v), ("f", fi), Fraction(1, 4), "R3B"
        if d >= 9:
            for fi in sorted(set(pg.faces_at(v))):
                if len(pg.faces[fi]) == 5:
                    yield ("v", v), ("f", fi), Fraction(1, 3), "R4"


def run(g, rs: RuleSet) -> ChargeLedger:
    """Apply every rule once; transfers merged per (rule, from, to)."""
    init = initial_charges(g, rs)
    gr = _graph_of(g)
    if rs.name == "PLANAR5":
        raw = list(_transfers_planar5(g))
    else:
        gen = {
            "C4": lambda: _transfers_c4(gr),
            "C5": lambda: _transfers_c5(gr),
            "C6PLUS": lambda: _transfers_c6plus(gr, rs.c),
        }[rs.name]
        raw = [(("v", a), ("v", b), amt, rule) for a, b, amt, rule in gen()]
    merged: dict = defaultdict(Fraction)
    for a, b, amt, rule in raw:
        merged[(rule, a, b)] += amt
    transfers = [(a, b, amt, rule) for (rule, a, b), amt in sorted(merged.items())]
    final = dict(init)
    for a, b, amt, _ in transfers:
        final[a] -= amt
        final[b] += amt
    ledger = ChargeLedger(rs, init, transfers, final)
    if not ledger.is_conserved():
        raise PCFError("internal error: discharging did not conserve charge")
    return ledger


# audit


@dataclass
class AuditReport:
    rules: RuleSet
    conserved: bool
    total_initial: Fraction
    total_final: Fraction
    bound: Fraction
    min_final: Fraction | None
    deficient: list = field(default_factory=list)
    pairings: dict = field(default_factory=dict)  # element -> Config | None
    all_at_bound: bool = False
    tight_structure: tuple | None = None  # (G0, r) when recognized
    exception_structure: bool = False  # G0 has a K_{c+1} component

    @property
    def unpaired(self) -> list:
        return [e for e in self.deficient if self.pairings.get(e) is None]

    def to_text(self) -> str:
        lines = [
            f"rules: {self.rules}",
            f"conservation: {'ok' if self.conserved else 'VIOLATED'} "
            f"(initial {_frac_str(self.total_initial)}, final {_frac_str(self.total_final)})",
            f"bound: {_frac_str(self.bound)}",
            "min final charge: " + ("none" if self.min_final is None else _frac_str(self.min_final)),
            f"deficient elements: {len(self.deficient)}",
        ]
        for e in self.deficient:
            cfg = self.pairings.get(e)
            lines.append(f"  {_elem_str(e)}: {cfg if cfg is not None else 'no configuration nearby'}")
        if self.all_at_bound:
            lines.append("every vertex sits exactly at the bound")
        if self.tight_structure is not None:
            g0, r = self.tight_structure
            lines.append(f"tight structure: 1-subdivision of a {r}-regular graph on {g0.n} vertices")
            if self.exception_structure:
                lines.append(f"exception: the base graph has a K_{self.rules.c + 1} component")
        return "\n".join(lines) + "\n"


def _element_ball(g, e, radius: int) -> set:
    gr = _graph_of(g)
    if e[0] == "v":
        return ball(gr, [e[1]], radius)
    return ball(gr, set(g.faces[e[1]]), radius)


def audit(g, rs: RuleSet, c: int | None = None, radius: int = 2, scan_limit: int = 10_000) -> AuditReport:
    """Run the rules and pair each deficient element with a nearby configuration.

    A deficient element is paired with the first configuration, in the
    finder's priority order, whose deletion set meets the ball of the given
    radius around it (the ball around a face is taken from its boundary).
    """
    from .reducer.configs import iter_configs

    c = rs.c if c is None else c
    ledger = run(g, rs)
    gr = _graph_of(g)
    bound = rs.bound
    finals = ledger.final
    rep = AuditReport(
        rules=rs,
        conserved=ledger.is_conserved(),
        total_initial=ledger.total_initial(),
        total_final=ledger.total_final(),
        bound=bound,
        min_final=min(finals.values()) if finals else None,
    )
    rep.deficient = sorted(e for e, q in finals.items() if q < bound)
    if rep.deficient:
        if rs.needs_plane:
            configs = list(islice(iter_configs(gr, 7, "planar7", g), scan_limit))
        else:
            configs = list(islice(iter_configs(gr, c, "sparse"), scan_limit))
        for e in rep.deficient:
            near = _element_ball(g, e, radius)
            rep.pairings[e] = next((cfg for cfg in configs if cfg.deletion_set & near), None)

    vfinals = [q for e, q in finals.items() if e[0] == "v"]
    rep.all_at_bound = bool(vfinals) and all(q == bound for q in vfinals)
    if rs.name in ("C5", "C6PLUS") and rep.all_at_bound:
        rec = recognize_one_subdivision_of_regular(gr)
        if rec is not None:
            rep.tight_structure = rec
            g0, r = rec
            k = rs.c + 1
            rep.exception_structure = any(
                comp.n == k and comp.m == k * (k - 1) // 2 for comp in g0.components()
            )
    return rep
