"""Command-line front end: ``vlgraph {build,metrics,centrality,census,compare,walks}``.

Exit codes: 0 success, 1 usage error, 2 computation cut short (Hamiltonian
enumeration cap), 3 census counts differ from the published reference.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from . import census as census_mod
from .centrality import (
    DEFAULT_ALPHA,
    centrality_report,
    communicability,
    degree_centrality,
    katz_centrality,
    spectral_radius,
)
from .classical import (
    INFINITE,
    eccentricity_summary,
    euler_classify,
    find_isomorphism,
    find_subgraph_isomorphism,
    hamiltonian_circuits,
    is_connected,
    is_regular,
)
from .export import GraphDocument, centrality_table, fmt3, format_table, graph_table, to_dot
from .graph import VoiceLeadingGraph, adjacency_matrix, build_graph, count_walks
from .pitch import ScaleParseError, parse_scale

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _graph(spec: str, transpose: int) -> VoiceLeadingGraph:
    try:
        scale = parse_scale(spec)
    except ScaleParseError as exc:
        raise UsageError(str(exc)) from None
    return build_graph(scale.transpose(transpose))


def _fmt(x) -> str:
    if x is None:
        return "n/a"
    if x == INFINITE:
        return "inf"
    return str(int(x)) if float(x).is_integer() else fmt3(x)


def cmd_build(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args.scale, args.transpose)
    if g.order >= 2 and not is_connected(g):
        print("warning: graph is disconnected", file=err)
    if args.format == "dot":
        out.write(to_dot(g, unicode=args.unicode))
    elif args.format == "structured":
        out.write(GraphDocument.from_graph(g).to_json() + "\n")
    else:
        out.write(graph_table(g, unicode=args.unicode) + "\n")
    return EXIT_OK


def cmd_metrics(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args.scale, args.transpose)
    names = g.names(unicode=args.unicode)
    ecc = eccentricity_summary(g)
    if args.format == "structured":
        out.write(GraphDocument.from_graph(g, eccentricity=ecc).to_json() + "\n")
        return EXIT_OK
    regular, common = is_regular(g)
    ham = hamiltonian_circuits(g, max_witnesses=1, max_steps=args.ham_steps)
    self_centred = {True: "yes", False: "no", None: "n/a"}[ecc.self_centred]
    lines = [
        f"scale: {g.scale}",
        f"vertices: {g.order}",
        f"edges: {g.size}",
        f"degree sequence: {sorted(g.degrees(), reverse=True)}",
        f"regular: {'yes (degree ' + str(common) + ')' if regular and common is not None else 'yes' if regular else 'no'}",
        f"radius: {_fmt(ecc.radius)}",
        f"diameter: {_fmt(ecc.diameter)}",
        f"self-centred: {self_centred}",
        f"central: {', '.join(names[v] for v in ecc.central_vertices) or 'n/a'}",
        f"peripheral: {', '.join(names[v] for v in ecc.peripheral_vertices) or 'n/a'}",
        f"Euler: {euler_classify(g).value}",
        f"Hamiltonian circuits (undirected): {ham.undirected_count}",
        f"Hamiltonian circuits (directed): {ham.directed_count}",
        f"Hamiltonian enumeration capped: {'yes' if ham.capped else 'no'}",
    ]
    out.write("\n".join(lines) + "\n")
    if ham.capped:
        print("Hamiltonian enumeration hit its step cap; counts are lower bounds", file=err)
        return EXIT_INFEASIBLE
    return EXIT_OK


def _partial_centrality(g: VoiceLeadingGraph, alpha: float, unicode: bool) -> str:
    a = adjacency_matrix(g)
    katz = katz_centrality(a, alpha)
    dc = degree_centrality(g)
    rows = [
        [name, d, str(c), fmt3(katz.raw[i]), fmt3(katz.normalized[i])]
        for i, (name, d, c) in enumerate(zip(g.names(unicode=unicode), g.degrees(), dc))
    ]
    head = f"alpha = {alpha}, spectral radius = {fmt3(spectral_radius(a))}"
    return head + "\n\n" + format_table(["triad", "degree", "deg.c", "katz", "katz(unit)"], rows)


def cmd_centrality(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args.scale, args.transpose)
    alpha = DEFAULT_ALPHA if args.alpha is None else args.alpha
    if g.order < 3:
        print(f"graph has {g.order} vertex(es); centrality measures suppressed", file=err)
        out.write(f"vertices: {g.order}; centrality measures need at least three vertices\n")
        return EXIT_OK
    try:
        if not is_connected(g):
            print("graph is disconnected; closeness and betweenness suppressed", file=err)
            out.write(_partial_centrality(g, alpha, args.unicode) + "\n")
            return EXIT_OK
        report = centrality_report(g, alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    comm = communicability(adjacency_matrix(g)) if args.communicability else None
    if args.format == "structured":
        doc = GraphDocument.from_graph(g, centrality=report, communicability=comm)
        out.write(doc.to_json() + "\n")
        return EXIT_OK
    out.write(centrality_table(g, report, unicode=args.unicode) + "\n")
    if comm is not None:
        names = g.names(unicode=args.unicode)
        rows = [[names[i]] + [fmt3(x) for x in comm[i]] for i in range(g.order)]
        out.write("\ncommunicability exp(A):\n" + format_table([""] + names, rows) + "\n")
    return EXIT_OK


def cmd_census(args, out: TextIO, err: TextIO) -> int:
    details = args.details is not None
    summary = census_mod.run_census(args.min, args.max, record_details=details)
    out.write(f"total: {summary.total_sets}\n{summary.format_counts()}\n")
    if details:
        try:
            with open(args.details, "w", newline="") as fh:
                census_mod.write_records(summary.records, fh)
        except OSError as exc:
            raise UsageError(f"cannot write {args.details}: {exc}") from None
    default_bounds = (args.min, args.max) == (3, 12)
    if not (default_bounds and args.check):
        return EXIT_OK
    mismatches = summary.mismatches()
    if not mismatches:
        out.write("matches reference counts\n")
        return EXIT_OK
    for cat, (got, want) in mismatches.items():
        print(f"mismatch in {cat.value}: got {got}, expected {want}", file=err)
    if summary.records is None:
        summary = census_mod.run_census(args.min, args.max, record_details=True)
    for r in summary.records:
        if r.category in mismatches:
            print(f"  {r.scale.mask_string()} {r.category.value}", file=err)
    return EXIT_MISMATCH


def _mapping_lines(small: VoiceLeadingGraph, big: VoiceLeadingGraph, mapping: dict, unicode: bool) -> list[str]:
    a, b = small.names(unicode=unicode), big.names(unicode=unicode)
    return [f"  {a[v]} -> {b[w]}" for v, w in sorted(mapping.items())]


def cmd_compare(args, out: TextIO, err: TextIO) -> int:
    ga = _graph(args.scale_a, args.transpose)
    gb = _graph(args.scale_b, args.transpose)
    lines = [
        f"A: {ga.scale} ({ga.order} vertices, {ga.size} edges)",
        f"B: {gb.scale} ({gb.order} vertices, {gb.size} edges)",
    ]
    iso = find_isomorphism(ga, gb)
    if iso is not None:
        lines.append("isomorphic: yes")
        lines += _mapping_lines(ga, gb, iso, args.unicode)
    else:
        lines.append("isomorphic: no")
        small, big, label = (ga, gb, "A into B") if (ga.order, ga.size) <= (gb.order, gb.size) else (gb, ga, "B into A")
        emb = find_subgraph_isomorphism(small, big)
        lines.append(f"subgraph embedding ({label}): {'yes' if emb is not None else 'no'}")
        if emb is not None:
            lines += _mapping_lines(small, big, emb, args.unicode)
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def _vertex(g: VoiceLeadingGraph, token: str) -> int:
    if token.isdigit():
        i = int(token)
        if i >= g.order:
            raise UsageError(f"vertex index {i} out of range (graph has {g.order} vertices)")
        return i
    for names in (g.names(), g.names(unicode=True)):
        if token in names:
            return names.index(token)
    raise UsageError(f"no triad named {token!r} in this scale; have {', '.join(g.names())}")


def cmd_walks(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args.scale, args.transpose)
    i, j = _vertex(g, args.source), _vertex(g, args.target)
    if args.length < 0:
        raise UsageError("walk length must be non-negative")
    names = g.names(unicode=args.unicode)
    out.write(f"walks of length {args.length} from {names[i]} to {names[j]}: {count_walks(g, i, j, args.length)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vlgraph", description="Parsimonious voice-leading graphs of triads.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--transpose", type=int, default=0, metavar="K", help="transpose scales by K semitones")
    common.add_argument("--unicode", action="store_true", help="use ♭ and ° in triad names")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", parents=[common], help="print the voice-leading graph")
    p.add_argument("scale")
    p.add_argument("--format", choices=["dot", "structured", "table"], default="table")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("metrics", parents=[common], help="classical graph diagnostics")
    p.add_argument("scale")
    p.add_argument("--format", choices=["structured", "table"], default="table")
    p.add_argument("--ham-steps", type=int, default=2_000_000, help="search-step cap for Hamiltonian enumeration")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("centrality", parents=[common], help="centrality measures and communicability")
    p.add_argument("scale")
    p.add_argument("--alpha", type=float, default=None, help=f"Katz attenuation (default {DEFAULT_ALPHA})")
    p.add_argument("--communicability", action="store_true")
    p.add_argument("--format", choices=["structured", "table"], default="table")
    p.set_defaults(func=cmd_centrality)

    p = sub.add_parser("census", help="classify every pitch-class set")
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=12)
    p.add_argument("--details", metavar="PATH", help="write per-set CSV records")
    p.add_argument("--no-check", dest="check", action="store_false", help="skip the reference-count check")
    p.set_defaults(func=cmd_census, transpose=0, unicode=False)

    p = sub.add_parser("compare", parents=[common], help="isomorphism and subgraph embedding")
    p.add_argument("scale_a")
    p.add_argument("scale_b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("walks", parents=[common], help="count walks between two triads")
    p.add_argument("scale")
    p.add_argument("source", help="triad name or vertex index")
    p.add_argument("target", help="triad name or vertex index")
    p.add_argument("-k", "--length", type=int, required=True)
    p.set_defaults(func=cmd_walks)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "census" and not 0 <= args.min <= args.max <= 12:
        print(f"vlgraph: error: bad census bounds ({args.min}, {args.max})", file=err)
        return EXIT_USAGE
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        print(f"vlgraph: error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
