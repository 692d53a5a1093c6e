"""Command line surface.

Commands: check, stone, catalog, cantor, graph.  Exit code 0 means the
run completed with nothing violated, 1 means a genuine property
violation (suite counterexamples or an internal cross-check firing), and
2 means the input could not be used.  Output is deterministic: identical
inputs and seeds render byte-identical reports.
"""

from __future__ import annotations

import argparse
import sys

from . import cantor, classify, pathlat, stone
from .catalog import CatalogSpec
from .core import EXHAUSTIVE_SIZE_TARGET, Semilattice, parse_semilattice
from .errors import SlatError, TheoremViolationError
from .filters import enumerate_filters, is_tight, is_ultrafilter, tight_violations
from .suite import run_suite


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_semilattice(path: str) -> Semilattice:
    S = parse_semilattice(_read(path))
    if len(S) > EXHAUSTIVE_SIZE_TARGET:
        print(f"warning: {len(S)} elements; exhaustive scans may be slow "
              f"(target is {EXHAUSTIVE_SIZE_TARGET})", file=sys.stderr)
    return S


def _fmt_set(S: Semilattice, xs) -> str:
    return "{" + ",".join(S.labels_for(xs)) + "}"


def cmd_check(args: argparse.Namespace) -> int:
    S = _load_semilattice(args.file)
    report = classify.is_compactable_finite(S)
    if args.report == "kv":
        for key, val in report.booleans().items():
            print(f"{key}={'true' if val else 'false'}")
        return 0
    print(f"semilattice: {len(S)} elements, zero={S.labels[S.zero]}, one={S.labels[S.one]}")
    for key, val in report.booleans().items():
        print(f"{key}={'true' if val else 'false'}")
    print("filters:")
    for F in enumerate_filters(S):
        ultra = is_ultrafilter(S, F)
        tight = is_tight(S, F)
        note = ""
        if not tight:
            fails = list(tight_violations(S, F))
            if fails and all(v.vacuous for v in fails):
                note = " (fails only through vacuous covers)"
        print(f"  {_fmt_set(S, F.carrier)} ultrafilter={str(ultra).lower()} "
              f"tight={str(tight).lower()}{note}")
    print("trapping witnesses:")
    for (e, f), W in report.witnesses:
        shown = " ".join(S.labels_for(W)) if W else ("-" if W is not None else "none")
        print(f"  ({S.labels[e]},{S.labels[f]}) -> {shown}")
    return 0


def cmd_stone(args: argparse.Namespace) -> int:
    S = _load_semilattice(args.file)
    space = stone.build_space(S)
    algebra = stone.clopen_algebra(space)
    print(f"points: {len(space.points)}")
    for i, F in enumerate(space.points):
        print(f"  point {i}: {_fmt_set(S, F.carrier)}")
    print("base sets:")
    for e in S.elements():
        inside = ",".join(str(i) for i in sorted(space.base[e]))
        print(f"  K[{S.labels[e]}] = {{{inside}}}")
    print(f"clopens: {len(algebra.elements)}")
    print(f"separative={'true' if stone.kappa_injective(space) else 'false'}")
    print(f"dense={'true' if stone.dense_check(space) else 'false'}")
    if len(space.points) <= 6:
        print("decompositions:")
        for C in algebra.elements:
            parts = stone.join_decomposition(space, C)
            inside = ",".join(str(i) for i in sorted(C))
            shown = " ".join(S.labels_for(parts)) if parts else "-"
            print(f"  {{{inside}}} = {shown}")
    else:
        print("decompositions: omitted (more than 6 points)")
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.random is not None:
        spec = CatalogSpec(max_size=args.max_size, mode="random",
                           sample_count=args.random, seed=args.seed)
    else:
        spec = CatalogSpec(max_size=args.max_size)
    report = run_suite(spec)
    sys.stdout.write(report.render(kv=args.report == "kv"))
    return 0 if report.ok() else 1


def cmd_cantor(args: argparse.Namespace) -> int:
    if cantor.is_degenerate_alphabet(args.alphabet):
        print("note: one-symbol alphabet, the algebra degenerates to two elements",
              file=sys.stderr)
    result = cantor.eval_expr(args.alphabet, args.expr)
    print(result.render())
    return 0


def cmd_graph(args: argparse.Namespace) -> int:
    G = pathlat.parse_rooted_graph(_read(args.file))
    if not pathlat.validate_rooted(G):
        print("rooted=false")
        print("unreachable: " + " ".join(pathlat.unreachable_vertices(G)))
        return 2
    print("rooted=true")
    print(f"zero_disjunctive_graph={'true' if pathlat.zero_disjunctive_graph(G) else 'false'}")
    print(f"pseudofinite_graph={'true' if pathlat.pseudofinite_graph(G) else 'false'}")
    S = pathlat.truncate(G, args.depth)
    report = classify.is_compactable_finite(S)
    print(f"depth={args.depth} elements={len(S)}")
    for key, val in report.booleans().items():
        print(f"{key}={'true' if val else 'false'}")
    print("witnesses:")
    for e in S.nonzero():
        for f in S.nonzero():
            if f == e or not S.leq(f, e):
                continue
            if pathlat.level(S, f) > args.depth:
                continue  # frontier pairs are excluded from the table
            W = pathlat.sibling_cover_witness(S, e, f)
            shown = " ".join(S.labels_for(W)) if W else "-"
            print(f"  ({S.labels[e]},{S.labels[f]}) -> {shown}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slat",
        description="finite bounded meet semilattices: filters, ultrafilter "
                    "spaces, clopen algebras, and verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a semilattice file")
    p.add_argument("file")
    p.add_argument("--report", choices=["text", "kv"], default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("stone", help="ultrafilter space and clopen algebra of a file")
    p.add_argument("file")
    p.set_defaults(func=cmd_stone)

    p = sub.add_parser("catalog", help="run the verification suite over small instances")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--random", type=int, default=None, metavar="M",
                   help="sample M random instances of exactly max-size elements")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", choices=["text", "kv"], default="text")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("cantor", help="evaluate a clopen expression to normal form")
    p.add_argument("--alphabet", required=True)
    p.add_argument("expr")
    p.set_defaults(func=cmd_cantor)

    p = sub.add_parser("graph", help="graph criteria and truncation reports")
    p.add_argument("file")
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolationError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    except (SlatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
