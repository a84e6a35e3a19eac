"""Command-line entry point ``pcfcolor``.

Exit codes: 0 success, 1 domain error (bad graph, failed verification,
stuck colorer, ...), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import generators as gen
from .discharge import RuleSet, audit, run
from .errors import PCFError
from .graph import Graph
from .io import emit_coloring, emit_graph, emit_plane_graph, parse_coloring, parse_graph, parse_plane_graph
from .mad import mad_exact
from .pcf import DEFAULT_GUARD, chi_pcf_exact, verify_pcf
from .plane import PlaneGraph, one_subdivision_plane, plane_from_planar


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise PCFError(f"cannot read {path}: {exc.strerror}") from None


def _looks_plane(text: str) -> bool:
    return any(":" in line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#"))


def _load_graph(path: str) -> Graph:
    text = _read(path)
    return parse_plane_graph(text).graph if _looks_plane(text) else parse_graph(text)


def _load_plane(path: str) -> PlaneGraph:
    text = _read(path)
    return parse_plane_graph(text) if _looks_plane(text) else plane_from_planar(parse_graph(text))


# subcommands


def cmd_mad(args, out):
    res = mad_exact(_load_graph(args.input))
    out.write(f"{res}\n")
    out.write("witness: " + " ".join(map(str, sorted(res.witness))) + "\n")


def cmd_chi_pcf(args, out):
    out.write(f"{chi_pcf_exact(_load_graph(args.input), guard=args.guard)}\n")


def cmd_color(args, out):
    from .reducer import color, color_planar7

    if args.planar:
        if args.colors != 7:
            raise UsageError("--planar colors with exactly 7 colors")
        pg = _load_plane(args.input)
        g = pg.graph
        phi, trace = color_planar7(pg, fallback_exact=args.fallback_exact)
    else:
        g = _load_graph(args.input)
        phi, trace = color(g, args.colors, check=args.check, fallback_exact=args.fallback_exact)
    bad = verify_pcf(g, phi, args.colors)
    if bad is not None:
        raise PCFError(f"produced coloring fails verification: {bad}")
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(trace.to_lines())
    out.write(emit_coloring(phi.assignment))


def cmd_verify(args, out):
    g = _load_graph(args.input)
    phi = parse_coloring(_read(args.coloring))
    try:
        bad = verify_pcf(g, phi, args.colors)
    except ValueError as exc:
        out.write(f"VIOLATION out-of-range {exc}\n")
        return 1
    if bad is None:
        out.write("OK\n")
        return 0
    out.write(f"VIOLATION {bad.kind} {' '.join(map(str, bad.witness))}\n")
    return 1


_FAMILIES = {
    "cycle": (["n"], lambda a: gen.cycle(a.n)),
    "path": (["n"], lambda a: gen.path(a.n)),
    "complete": (["n"], lambda a: gen.complete(a.n)),
    "kstar": (["k"], lambda a: gen.kstar(a.k)),
    "petersen": ([], lambda a: gen.petersen()),
    "dodecahedron": ([], lambda a: gen.dodecahedron()),
    "tree": (["n"], lambda a: gen.random_tree(a.n, a.seed)),
    "gnm": (["n", "m"], lambda a: gen.random_gnm(a.n, a.m, a.seed)),
    "regular": (["n", "r"], lambda a: gen.random_regular(a.n, a.r, a.seed)),
    "sparse": (["n", "mad"], lambda a: gen.random_sparse(a.n, a.mad, a.seed)),
    "outerplanar": (["n"], lambda a: gen.random_outerplanar_girth5(a.n, a.seed)),
}


def cmd_generate(args, out):
    if args.family not in _FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(sorted(_FAMILIES))}")
    names, build = _FAMILIES[args.family]
    if len(args.params) != len(names):
        want = " ".join(f"<{n}>" for n in names) or "no parameters"
        raise UsageError(f"{args.family} takes {want}")
    ns = argparse.Namespace(seed=args.seed)
    for name, raw in zip(names, args.params):
        try:
            val = Fraction(raw) if name == "mad" else int(raw)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad value {raw!r} for <{name}>") from None
        setattr(ns, name, val)
    try:
        obj = build(ns)
    except ValueError as exc:
        raise PCFError(str(exc)) from None
    if args.plane and not isinstance(obj, PlaneGraph):
        obj = plane_from_planar(obj)
    if args.subdivide:
        obj = one_subdivision_plane(obj) if isinstance(obj, PlaneGraph) else gen.one_subdivision(obj)
    out.write(emit_plane_graph(obj) if isinstance(obj, PlaneGraph) else emit_graph(obj))


def cmd_discharge(args, out):
    rs = RuleSet.parse(args.rules)
    g = _load_plane(args.input) if rs.needs_plane else _load_graph(args.input)
    ledger = run(g, rs)
    if not args.audit_only:
        out.write(ledger.to_lines())
    if not args.ledger_only:
        out.write(audit(g, rs).to_text())


def cmd_find_config(args, out):
    from .reducer import find_config

    if args.planar:
        if args.colors != 7:
            raise UsageError("--planar works with exactly 7 colors")
        pg = _load_plane(args.input)
        cfg = find_config(pg.graph, 7, "planar7", pg)
    else:
        cfg = find_config(_load_graph(args.input), args.colors)
    out.write(f"{cfg}\n" if cfg is not None else "NONE\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pcfcolor", description="Proper conflict-free coloring toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mad", help="exact maximum average degree")
    s.add_argument("input", help="graph file or '-'")
    s.set_defaults(func=cmd_mad)

    s = sub.add_parser("chi-pcf", help="exact PCF chromatic number")
    s.add_argument("input")
    s.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="largest vertex count to search")
    s.set_defaults(func=cmd_chi_pcf)

    s = sub.add_parser("color", help="constructive PCF coloring")
    s.add_argument("input")
    s.add_argument("--colors", "-c", type=int, required=True)
    s.add_argument("--check", action="store_true", help="check the hypotheses first")
    s.add_argument("--planar", action="store_true", help="plane girth-5 mode (7 colors)")
    s.add_argument("--trace", metavar="PATH", help="write the reduction trace (JSON lines)")
    s.add_argument("--fallback-exact", action="store_true", help="exact search when no reduction applies")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", help="check a coloring")
    s.add_argument("input")
    s.add_argument("coloring", help="coloring file or '-'")
    s.add_argument("--colors", "-c", type=int, default=None)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("generate", help="print a graph from a named family")
    s.add_argument("family")
    s.add_argument("params", nargs="*")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--plane", action="store_true", help="emit a rotation system")
    s.add_argument("--subdivide", action="store_true", help="subdivide every edge once")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("discharge", help="run a discharging rule set and audit it")
    s.add_argument("input")
    s.add_argument("--rules", required=True, help="c4, c5, c6:<c> or planar5")
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--ledger-only", action="store_true")
    grp.add_argument("--audit-only", action="store_true")
    s.set_defaults(func=cmd_discharge)

    s = sub.add_parser("find-config", help="first reducible configuration, or NONE")
    s.add_argument("input")
    s.add_argument("--colors", "-c", type=int, required=True)
    s.add_argument("--planar", action="store_true")
    s.set_defaults(func=cmd_find_config)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rc = args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except PCFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RecursionError:
        print("error: graph too large for the colorer", file=sys.stderr)
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
