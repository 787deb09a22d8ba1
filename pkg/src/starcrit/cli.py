"""``starcrit`` command line.

Exit codes: 0 success / claim holds, 1 claim fails or counterexample found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families
from .coloring import (
    ColoringError,
    chromatic_number,
    find_bicolored_p4,
    is_proper,
    is_star_coloring,
    star_chromatic_number,
    star_chromatic_number_oracle,
    ORACLE_MAX_ORDER,
)
from .criticality import classify_critical, is_k_critical_direct
from .enumeration import EnumerationError, enumerate_all, enumerate_connected
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    decode_graph6,
    encode_graph6,
    format_edge_list,
    parse_edge_list,
)
from .patterns import PatternKind, find_induced, find_p4_subgraph
from .verify import (
    BoundKind,
    ClaimId,
    audit_bounds,
    audit_complement_conditions,
    summarize,
    verify_claim,
)

SCHEMA = 1


class UsageError(Exception):
    pass


def _emit(args, record: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **record}))
    else:
        for line in lines:
            print(line)


def _label(args, v: int) -> int:
    return v + 1 if args.one_based else v


def _format_coloring(args, colors: list[int]) -> str:
    return " ".join(f"{_label(args, v)}:{c}" for v, c in enumerate(colors))


def _load_graph(args) -> Graph:
    sources = [args.graph6 is not None, args.edgelist is not None, args.family is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one of --graph6, --edgelist, --family")
    if args.graph6 is not None:
        return decode_graph6(args.graph6.strip())
    if args.edgelist is not None:
        text = sys.stdin.read() if args.edgelist == "-" else Path(args.edgelist).read_text()
        return parse_edge_list(text)
    if args.n is None:
        raise UsageError("--family needs --n")
    return families.build(args.family, args.n)


def _read_graph6_file(path: str) -> list[Graph]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    graphs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(decode_graph6(line))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from None
    return graphs


def cmd_chis(args) -> int:
    g = _load_graph(args)
    solve = star_chromatic_number if args.command == "chis" else chromatic_number
    k, colors = solve(g)
    if args.self_check:
        check = is_star_coloring if args.command == "chis" else is_proper
        if not check(g, colors):
            print("self-check failed: certificate does not validate", file=sys.stderr)
            return 1
        if args.command == "chis" and g.n <= ORACLE_MAX_ORDER and star_chromatic_number_oracle(g) != k:
            print("self-check failed: oracle disagrees", file=sys.stderr)
            return 1
    key = "chi_s" if args.command == "chis" else "chi"
    _emit(args, {"n": g.n, "m": g.m, key: k, "coloring": colors},
          [str(k), _format_coloring(args, colors)])
    return 0


def _parse_coloring(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"malformed coloring {text!r}") from None


def cmd_check_coloring(args) -> int:
    g = _load_graph(args)
    colors = _parse_coloring(args.coloring)
    if len(colors) != g.n:
        raise UsageError(f"coloring has {len(colors)} entries for {g.n} vertices")
    if not is_proper(g, colors):
        bad = next((u, v) for u, v in g.edges() if colors[u] == colors[v])
        edge = [_label(args, x) for x in bad]
        _emit(args, {"proper": False, "star": False, "monochromatic_edge": edge},
              [f"not proper: edge ({edge[0]},{edge[1]}) is monochromatic"])
        return 1
    w = find_bicolored_p4(g, colors)
    if w is None:
        _emit(args, {"proper": True, "star": True, "colors": len(set(colors))},
              [f"star coloring with {len(set(colors))} colors"])
        return 0
    path = [_label(args, v) for v in w.path]
    _emit(args, {"proper": True, "star": False, "bicolored_p4": path, "p4_colors": list(w.colors)},
          [f"not a star coloring: path {'-'.join(map(str, path))} uses only colors {w.colors[0]},{w.colors[1]}"])
    return 1


_PATTERN_NAMES = {k.value: k for k in PatternKind}


def cmd_detect(args) -> int:
    g = _load_graph(args)
    names = list(_PATTERN_NAMES) + ["p4"] if args.pattern == "all" else [args.pattern]
    records, lines = [], []
    for name in names:
        if name == "p4":
            path = find_p4_subgraph(g)
            text = "none" if path is None else "(" + ",".join(str(_label(args, v)) for v in path) + ")"
            records.append({"pattern": "p4", "subgraph": True,
                            "witness": None if path is None else [_label(args, v) for v in path]})
        else:
            w = find_induced(g, _PATTERN_NAMES[name])
            text = "none" if w is None else w.format(args.one_based)
            records.append({"pattern": name, "subgraph": False,
                            "witness": None if w is None else [_label(args, v) for v in w.vertices]})
        lines.append(text if len(names) == 1 else f"{name}: {text}")
    _emit(args, {"results": records}, lines)
    return 0


def cmd_critical(args) -> int:
    g = _load_graph(args)
    if g.m == 0:
        raise UsageError("criticality needs a graph with at least one edge")
    report = is_k_critical_direct(g, args.k)
    if args.self_check and not is_star_coloring(g, report.coloring):
        print("self-check failed: certificate does not validate", file=sys.stderr)
        return 1
    lines = [f"chi_s = {report.chi_s}"]
    if not report.premise_holds:
        lines.append(f"premise fails: chi_s != {report.k}")
    for (u, v), value in report.per_edge:
        lines.append(f"  chi_s(G - ({_label(args, u)},{_label(args, v)})) = {value}")
    if report.failing_edge is not None:
        u, v = report.failing_edge
        lines.append(f"edge ({_label(args, u)},{_label(args, v)}) does not lower chi_s")
    lines.append(f"{report.k}-critical: {'yes' if report.is_critical else 'no'}")
    _emit(args, report.to_dict(), lines)
    return 0 if report.is_critical else 1


def cmd_classify(args) -> int:
    g = _load_graph(args)
    result = classify_critical(g)
    _emit(args, result.to_dict(), [result.label])
    for message in result.mismatches:
        print(f"characterization mismatch: {message}", file=sys.stderr)
    return 1 if result.mismatches else 0


def _format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return encode_graph6(g).decode("ascii")
    return format_edge_list(g).rstrip("\n")


def cmd_gen(args) -> int:
    g = families.build(args.family, args.n)
    print(_format_graph(g, args.format))
    return 0


def cmd_enumerate(args) -> int:
    stream = enumerate_connected(args.n) if args.connected else enumerate_all(args.n)
    for g in stream:
        print(_format_graph(g, args.format))
    return 0


def cmd_verify(args) -> int:
    claims = list(ClaimId) if args.claim == "all" else [ClaimId(args.claim)]
    graphs = _read_graph6_file(args.input) if args.input else None
    if graphs is None and args.n is None:
        raise UsageError("verify needs --n or --input")
    runs = [verify_claim(c, args.n, graphs=graphs, jobs=args.jobs) for c in claims]
    lines = []
    for run in runs:
        if graphs is not None:
            scope = f"{run.examined} input graphs examined"
        elif run.claim is ClaimId.THREE_CRITICAL:
            scope = f"{run.examined} connected graphs of order <= {args.n} examined"
        else:
            scope = f"{run.examined} connected graphs of order {args.n} examined"
        lines.append(f"{run.claim.value}: {len(run.counterexamples)} counterexamples / {scope}"
                     f" ({run.applicable} applicable)")
        lines += [f"  counterexample {s}" for s in run.counterexamples]
    _emit(args, summarize(runs), lines)
    return 0 if all(r.verified for r in runs) else 1


def cmd_audit(args) -> int:
    g = _load_graph(args)
    report = audit_bounds(g, args.kind)
    comp = audit_complement_conditions(g)
    lines = [f"n = {g.n}, m = {g.m}"]
    for q in report.inequalities:
        lines.append(f"  {q.bound}: {'ok' if q.satisfied else 'VIOLATED'}")
    lines.append(f"complement: {comp.complement_edges} edges, (C3,C4)-free {comp.c3c4_free}, "
                 f"<= n*sqrt(n-1)/2 {comp.c3c4_edge_bound}, K4-free {comp.k4_free}, "
                 f"<= n^2/3 {comp.turan_edge_bound}")
    _emit(args, {"bounds": report.to_dict(), "complement": comp.to_dict()}, lines)
    return 0 if report.satisfied else 1


def cmd_convert(args) -> int:
    g = _load_graph(args)
    print(_format_graph(g, args.to))
    return 0


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="graph as a graph6 string")
    p.add_argument("--edgelist", metavar="FILE", help="edge-list file ('n m' header), '-' for stdin")
    p.add_argument("--family", choices=[f.value for f in families.Family])
    p.add_argument("--n", type=int, help="order for --family")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--one-based", action="store_true", help="print vertices as 1..n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starcrit", description="Exact star coloring and criticality toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (("chis", "star chromatic number"), ("chi", "chromatic number")):
        p = sub.add_parser(name, help=text)
        _add_graph_input(p)
        _add_output(p)
        p.add_argument("--self-check", action="store_true")
        p.set_defaults(func=cmd_chis)

    p = sub.add_parser("check-coloring", help="validate a star coloring")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument("--coloring", required=True, help="colors per vertex, e.g. '1 2 1 3'")
    p.set_defaults(func=cmd_check_coloring)

    p = sub.add_parser("detect", help="find a forbidden induced pattern")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument("--pattern", required=True, choices=list(_PATTERN_NAMES) + ["p4", "all"])
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("critical", help="direct k-criticality check")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument("--k", type=int, help="expected chi_s (default: computed)")
    p.add_argument("--self-check", action="store_true")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("classify", help="criticality label")
    _add_graph_input(p)
    _add_output(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="generate a family member")
    p.add_argument("--family", required=True, choices=[f.value for f in families.Family])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="non-isomorphic graphs of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check a claim over all connected graphs of order n")
    p.add_argument("--claim", required=True, choices=[c.value for c in ClaimId] + ["all"])
    p.add_argument("--n", type=int)
    p.add_argument("--input", metavar="FILE", help="graph6 file (one per line) instead of enumeration")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify, one_based=False)

    p = sub.add_parser("audit", help="edge bounds and complement conditions")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument("--kind", choices=[k.value for k in BoundKind], default="n1")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("convert", help="convert between graph6 and edge lists")
    _add_graph_input(p)
    p.add_argument("--to", choices=["graph6", "edgelist"], required=True)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"malformed graph6: {exc}", file=sys.stderr)
        return 2
    except (UsageError, GraphError, ColoringError, EnumerationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
