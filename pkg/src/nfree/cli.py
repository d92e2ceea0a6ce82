"""Command-line front end.

Every command that takes a poset reads it from a file argument or, if the
argument is omitted or ``-``, from standard input.  Files ending in ``.json``
use the JSON document format.  Exit status: 0 on success (a predicate that
prints ``false`` still succeeds), 2 on bad input, 3 when verification fails.

``close --strategy random --seed S`` draws edges with Python's
``random.Random(S)``: at each step ``randrange(k)`` picks among the ``k``
diagonal edges listed in canonical order.
"""

from __future__ import annotations

import argparse
import sys

from .errors import PosetError
from .formats import emit_dot, load_poset, serialize_poset
from .npattern import NForm, a_set, find_ns, is_cac, is_n_free, is_series_parallel, n_diag, nd_diag
from .oracle import FILTERS, EnumerationSpec, enumerate_posets
from .poset import Edge, Poset
from .subdivision import (
    Lexicographic,
    SeededRandom,
    full_subdivision,
    s_n,
    sequential_closure,
    subdivide,
)
from .verify import SUITES, run_verification

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3


def read_poset(path: str) -> Poset:
    if path == "-":
        return load_poset(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return load_poset(text, json_format=path.endswith(".json"))


def _print_edges(edges) -> None:
    for e in sorted(edges):
        print(e)


def _bool(value: bool) -> None:
    print("true" if value else "false")


def _parse_edge(p: Poset, token: str) -> Edge:
    parts = token.split("<")
    if len(parts) != 2 or not all(parts):
        raise PosetError(f"malformed edge {token!r}, expected x<y")
    return Edge(p.vertex(parts[0]), p.vertex(parts[1]))


def cmd_close(args, p: Poset) -> int:
    if args.method == "sequential":
        strategy = SeededRandom(args.seed) if args.strategy == "random" else Lexicographic()
        trace = sequential_closure(p, strategy)
        if args.trace:
            for step in trace.steps:
                print(f"# step {step.index}: {step.edge} -> {step.dummy}")
        result = trace.result
    else:
        if args.method == "nd":
            first = subdivide(p, nd_diag(p))
            result = subdivide(first, nd_diag(first))
            passes = [nd_diag(p), nd_diag(first)]
        else:
            first = s_n(p)
            result = s_n(first)
            passes = [n_diag(p), n_diag(first)]
        if args.trace:
            for k, edges in enumerate(passes, start=1):
                print(" ".join([f"# pass {k}:", *(str(e) for e in sorted(edges))]))
    sys.stdout.write(serialize_poset(result))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = EnumerationSpec(args.n, args.filter, args.long)
    if args.count_only:
        print(sum(1 for _ in enumerate_posets(spec)))
        return EXIT_OK
    for k, p in enumerate(enumerate_posets(spec)):
        if k:
            print()
        sys.stdout.write(serialize_poset(p))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verification(args.n, [args.suite], long_running=args.long)
    for failure in report.failures:
        print(failure)
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nfree",
        description="N patterns, Grillet closures and N-free subdivisions of finite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def poset_command(name, help):
        cmd = sub.add_parser(name, help=help)
        cmd.add_argument("input", nargs="?", default="-", help="poset file (default: stdin)")
        return cmd

    poset_command("ndiag", "diagonal edges of the N's")
    poset_command("aset", "edges that become diagonal after one pass")
    poset_command("nddiag", "diagonal edges of the diagram N's")
    witnesses = poset_command("witnesses", "list N witnesses as 'a b c d'")
    witnesses.add_argument("--form", choices=[f.value for f in NForm], default=NForm.N.value)
    poset_command("nfree", "is the poset N-free?")
    poset_command("cac", "is the poset chain-antichain complete?")
    poset_command("sp", "is the poset series-parallel?")
    sd = poset_command("subdivide", "add one dummy on each given cover")
    sd.add_argument("--edge", action="append", default=[], metavar="X<Y")
    close = poset_command("close", "smallest N-free barycentric subdivision")
    close.add_argument("--method", choices=["two-pass", "sequential", "nd"], default="two-pass")
    close.add_argument("--strategy", choices=["lex", "random"], default="lex")
    close.add_argument("--seed", type=int, default=0)
    close.add_argument("--trace", action="store_true", help="print steps as comment lines")
    poset_command("full-subdivide", "one dummy on every cover")
    poset_command("dual", "reverse the order")
    poset_command("dot", "Graphviz rendering of the diagram")

    en = sub.add_parser("enumerate", help="all labeled posets on n elements")
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--count-only", action="store_true")
    en.add_argument("--filter", choices=sorted(FILTERS))
    en.add_argument("--long", action="store_true", help="allow n=7 (millions of posets)")

    ver = sub.add_parser("verify", help="check every property on all posets of size n")
    ver.add_argument("--n", type=int, required=True)
    ver.add_argument("--suite", choices=["all", *SUITES], default="all")
    ver.add_argument("--long", action="store_true", help="allow n=7")
    return parser


def run(args) -> int:
    if args.command == "enumerate":
        return cmd_enumerate(args)
    if args.command == "verify":
        return cmd_verify(args)

    p = read_poset(args.input)
    command = args.command
    if command == "ndiag":
        _print_edges(n_diag(p))
    elif command == "aset":
        _print_edges(a_set(p))
    elif command == "nddiag":
        _print_edges(nd_diag(p))
    elif command == "witnesses":
        for w in find_ns(p, args.form):
            print(w.a, w.b, w.c, w.d)
    elif command == "nfree":
        _bool(is_n_free(p))
    elif command == "cac":
        _bool(is_cac(p))
    elif command == "sp":
        _bool(is_series_parallel(p))
    elif command == "subdivide":
        sys.stdout.write(serialize_poset(subdivide(p, [_parse_edge(p, e) for e in args.edge])))
    elif command == "close":
        return cmd_close(args, p)
    elif command == "full-subdivide":
        sys.stdout.write(serialize_poset(full_subdivision(p)))
    elif command == "dual":
        sys.stdout.write(serialize_poset(p.dual()))
    elif command == "dot":
        sys.stdout.write(emit_dot(p))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (PosetError, OSError) as exc:
        print(f"nfree: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
