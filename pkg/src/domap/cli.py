"""Command-line interface.

Machine-first output: every subcommand prints tab-separated values (pass
--pretty for aligned columns where available).  Exit codes: 0 for success
or a positive existence verdict, 1 for a clean negative verdict, 2 for
usage, parse, or resource errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import constructions as cons
from .asymptotic import check_cond1, check_cond2, psi, psi_brute
from .errors import DecodeError, DomapError
from .graphs import DominationGraph
from .mapping import decode, encode, load_mapping, save_mapping, verify_mapping
from .matching import DEFAULT_MAX_EDGES, decide_all_graphs, decide_graph
from .reduced_lp import build_reduced_lp, decide_lp, dump_astar, solve_reduced_lp
from .words import word_from_str, word_to_str

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _parse_graph(args, m: int, n: int) -> DominationGraph:
    if args.degrees:
        degrees = tuple(int(t) for t in args.degrees.split(","))
        return DominationGraph.from_degrees(degrees)
    return DominationGraph.equitable(m, n)


def _emit(rows, pretty: bool) -> None:
    rows = [tuple(str(c) for c in row) for row in rows]
    if pretty and rows:
        widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
        for r in rows:
            print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    else:
        for r in rows:
            print("\t".join(r))


def cmd_bounds(args) -> int:
    report = bounds_mod.BoundReport.for_params(args.m, args.n, args.w)
    print(report.as_tsv())
    return EXIT_OK


def cmd_bounds_sweep(args) -> int:
    rows = []
    for m in range(args.m_from, args.m_to + 1):
        lower = bounds_mod.nu_lower_bound(m, args.w)
        upper = bounds_mod.nu_upper_bound(m, args.w)
        rows.append((m, lower, upper if upper is not None else "inf"))
    _emit(rows, args.pretty)
    return EXIT_OK


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "identity":
        mapping = cons.identity_mapping(args.m)
    elif kind == "w1":
        mapping = cons.w1_perfect(args.m)
    elif kind == "w2":
        mapping = cons.w2_recursive(args.level)
    elif kind == "product":
        f = load_mapping(args.inputs[0])
        g = load_mapping(args.inputs[1])
        mapping = cons.product(f, g)
    elif kind == "shorten":
        mapping = cons.shorten(load_mapping(args.inputs[0]), args.vertex)
    elif kind == "extend":
        mapping = cons.extend_n(load_mapping(args.inputs[0]))
    elif kind == "relax":
        mapping = cons.relax_w(load_mapping(args.inputs[0]))
    else:  # pragma: no cover - argparse restricts choices
        raise DomapError(f"unknown kind {kind}")
    verdict = verify_mapping(mapping)
    if not verdict.ok:
        print(str(verdict), file=sys.stderr)
        return EXIT_ERROR
    if args.out:
        save_mapping(mapping, args.out)
    print(f"{mapping.m}\t{mapping.n}\t{mapping.w}\tACCEPT")
    return EXIT_OK


def cmd_verify(args) -> int:
    mapping = load_mapping(args.file)
    verdict = verify_mapping(mapping)
    print(str(verdict))
    return EXIT_OK if verdict.ok else EXIT_NEGATIVE


def cmd_decide_matching(args) -> int:
    m, n, w = args.m, args.n, args.w
    picked = sum(1 for flag in (args.equitable, bool(args.degrees), args.all_graphs) if flag)
    if picked > 1:
        raise DomapError("pick one of --equitable, --degrees, --all-graphs")
    if args.all_graphs:
        result = decide_all_graphs(m, n, w, max_edges=args.max_edges)
        exists, mapping = result.exists, result.mapping
        layout = "all-graphs"
        extra = f"equitable_ok={result.equitable_succeeded}"
    else:
        graph = _parse_graph(args, m, n)
        exists, mapping = decide_graph(graph, w, max_edges=args.max_edges)
        layout = ",".join(str(d) for d in graph.degrees)
        extra = ""
    print(f"{m}\t{n}\t{w}\t{layout}\t{int(exists)}\t{extra}".rstrip())
    if exists and args.emit:
        save_mapping(mapping, args.emit)
    return EXIT_OK if exists else EXIT_NEGATIVE


def cmd_decide_lp(args) -> int:
    lp = build_reduced_lp(args.m, args.n, args.w)
    if args.dump_astar:
        with open(args.dump_astar, "w", encoding="ascii") as fh:
            fh.write(dump_astar(lp))
    solution = solve_reduced_lp(lp)
    exists = solution.optimum == (1 << args.m)
    print(f"{args.m}\t{args.n}\t{args.w}\t{solution.optimum}\t{int(exists)}")
    return EXIT_OK if exists else EXIT_NEGATIVE


def cmd_psi(args) -> int:
    v, length = word_from_str(args.word)
    if length != args.m:
        raise DomapError(f"word length {length} does not match m={args.m}")
    graph = _parse_graph(args, args.m, args.n)
    value = psi_brute(v, graph, args.w) if args.brute else psi(v, graph, args.w)
    print(value)
    return EXIT_OK


def cmd_cond1(args) -> int:
    ok = check_cond1(args.m, args.delta, args.w)
    print(int(ok))
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_cond2(args) -> int:
    ok = check_cond2(args.m, args.delta, args.w, Fraction(args.epsilon))
    print(int(ok))
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_encode(args) -> int:
    mapping = load_mapping(args.file)
    verdict = verify_mapping(mapping)
    if not verdict.ok:
        raise DomapError(f"mapping file fails verification: {verdict}")
    x, length = word_from_str(args.x)
    if length != mapping.m:
        raise DomapError(f"input length {length}, domain length {mapping.m}")
    print(word_to_str(encode(mapping, x), mapping.n))
    return EXIT_OK


def cmd_decode(args) -> int:
    mapping = load_mapping(args.file)
    verdict = verify_mapping(mapping)
    if not verdict.ok:
        raise DomapError(f"mapping file fails verification: {verdict}")
    y, length = word_from_str(args.y)
    if length != mapping.n:
        raise DomapError(f"input length {length}, image length {mapping.n}")
    try:
        x = decode(mapping, y)
    except DecodeError:
        print("not-in-image", file=sys.stderr)
        return EXIT_NEGATIVE
    print(word_to_str(x, mapping.m))
    return EXIT_OK


def cmd_report(args) -> int:
    w = args.w
    rows = [
        (
            "m",
            "counting_bound",
            "tight_bound",
            "lower",
            "construction",
            "lp_at_lower",
            "matching_at_lower",
        )
    ]
    for m in range(args.m_from, args.m_to + 1):
        counting = bounds_mod.min_length_by_counting(m, w)
        tight = 2 * m - w
        lower = max(counting, tight)
        upper = bounds_mod.nu_upper_bound(m, w)
        try:
            lp_ok = int(decide_lp(m, lower, w)) if lower >= m else "SKIPPED"
        except DomapError:
            lp_ok = "SKIPPED"
        try:
            graph = DominationGraph.equitable(m, lower)
            ok, _ = decide_graph(graph, w, max_edges=args.max_edges, extract=False)
            match_ok = int(ok)
        except DomapError:
            match_ok = "SKIPPED"
        rows.append(
            (m, counting, tight, lower, upper if upper is not None else "inf",
             lp_ok, match_ok)
        )
    _emit(rows, args.pretty)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domap",
        description="Construct, verify, and decide domination mappings into Hamming balls.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def mnw(p):
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)
        p.add_argument("w", type=int)

    p = sub.add_parser("bounds", help="necessary-condition report for one triple")
    mnw(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("bounds-sweep", help="(m, lower, upper) rows")
    p.add_argument("w", type=int)
    p.add_argument("--m-from", type=int, default=1)
    p.add_argument("--m-to", type=int, default=12)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_bounds_sweep)

    p = sub.add_parser("construct", help="build a mapping and write a .dmap file")
    p.add_argument(
        "--kind",
        required=True,
        choices=["identity", "w1", "w2", "product", "shorten", "extend", "relax"],
    )
    p.add_argument("--m", type=int, help="domain size for identity/w1")
    p.add_argument("--level", type=int, help="recursion level for w2")
    p.add_argument("--inputs", nargs="*", default=[], help="input .dmap files")
    p.add_argument("--vertex", type=int, help="left vertex for shorten (1-based)")
    p.add_argument("--out", help="output .dmap path")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a .dmap file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decide-matching", help="existence by maximum matching")
    mnw(p)
    p.add_argument("--equitable", action="store_true", help="equitable graph (default)")
    p.add_argument("--degrees", help="explicit degree sequence d1,d2,...")
    p.add_argument("--all-graphs", action="store_true")
    p.add_argument("--emit", help="write the extracted mapping here")
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.set_defaults(func=cmd_decide_matching)

    p = sub.add_parser("decide-lp", help="existence by the reduced linear program")
    mnw(p)
    p.add_argument("--dump-astar", help="write the dense reduced matrix here")
    p.set_defaults(func=cmd_decide_lp)

    p = sub.add_parser("psi", help="additional-neighbourhood count of one word")
    mnw(p)
    p.add_argument("--word", required=True)
    p.add_argument("--degrees", help="explicit degree sequence d1,d2,...")
    p.add_argument("--brute", action="store_true", help="scan the ball instead")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("cond1", help="first sufficient condition, exact")
    p.add_argument("m", type=int)
    p.add_argument("delta", type=int)
    p.add_argument("w", type=int)
    p.set_defaults(func=cmd_cond1)

    p = sub.add_parser("cond2", help="second sufficient condition, exact")
    p.add_argument("m", type=int)
    p.add_argument("delta", type=int)
    p.add_argument("w", type=int)
    p.add_argument("--epsilon", required=True)
    p.set_defaults(func=cmd_cond2)

    p = sub.add_parser("encode", help="apply the mapping of a .dmap file")
    p.add_argument("file")
    p.add_argument("x")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="invert the mapping of a .dmap file")
    p.add_argument("file")
    p.add_argument("y")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("report", help="bounds, constructions, and verdicts per m")
    p.add_argument("w", type=int)
    p.add_argument("--m-from", type=int, default=1)
    p.add_argument("--m-to", type=int, default=9)
    p.add_argument("--max-edges", type=int, default=2_000_000)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
