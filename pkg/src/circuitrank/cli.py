"""Command-line entry point: ``circuitrank {invariants,verify,mult,generate}``."""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Iterator

from . import exact, families
from .cycles import DEFAULT_NODE_BUDGET
from .graph6 import emit_graph6, iter_graph6
from .scan import INVARIANT_FIELDS, RowWriter, ScanConfig, invariants_record, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_ENUMERATE = 7


class UsageError(Exception):
    pass


@contextlib.contextmanager
def _open_in(path: str):
    if path == "-":
        yield sys.stdin
        return
    try:
        fh = open(path, "r", encoding="utf-8", errors="surrogateescape")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    with fh:
        yield fh


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None
    with fh:
        yield fh


def _family_arg(args) -> object:
    if args.n is None:
        return None
    if args.family == "cactus_chain":
        return [int(x) for x in args.n.split(",")]
    return int(args.n)


@contextlib.contextmanager
def _graph_items(args) -> Iterator:
    """Numbered ``(index, graph_or_error)`` pairs from --enumerate, --family or --input."""
    if getattr(args, "enumerate", None) is not None:
        if not 0 <= args.enumerate <= MAX_ENUMERATE:
            raise UsageError(f"--enumerate must be between 0 and {MAX_ENUMERATE}")

        def gen():
            idx = 0
            for n in range(args.enumerate + 1):
                for g in families.all_labeled_graphs(n):
                    yield idx, g
                    idx += 1

        yield gen()
        return
    if getattr(args, "family", None):
        try:
            g = families.generate(args.family, _family_arg(args))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        yield iter([(0, g)])
        return
    with _open_in(args.input) as fh:
        yield ((lineno, g) for lineno, g in iter_graph6(fh))


def _parse_theorems(text: str | None):
    if not text:
        return None
    return frozenset(t.strip() for t in text.split(",") if t.strip())


def cmd_invariants(args) -> int:
    with _graph_items(args) as items, _open_out(args.output) as out:
        writer = RowWriter(out, args.format, INVARIANT_FIELDS)
        for idx, g in items:
            if isinstance(g, Exception):
                writer.write({"graph_index": idx, "error": f"line {idx}: {g}"})
                continue
            writer.write(invariants_record(g, idx, args.tau, args.tau_budget))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        config = ScanConfig(
            input=args.input,
            theorems=_parse_theorems(args.theorems),
            jobs=args.jobs,
            tau_mode=args.tau,
            tau_budget=args.tau_budget,
            output_format=args.format,
            output=args.output,
            lam=exact.as_rational(args.lam) if args.lam is not None else None,
            kinds=(args.matrix,) if args.matrix else exact.KINDS,
            alphas=(exact.as_rational(args.alpha),) if args.alpha else ScanConfig.alphas,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    with _graph_items(args) as items, _open_out(args.output) as out:
        summary = run_verify(items, config, out)
    print(summary, file=sys.stderr)
    if summary.failures:
        return EXIT_FAIL
    return EXIT_USAGE if summary.parse_errors else EXIT_OK


def cmd_mult(args) -> int:
    try:
        lam = exact.as_rational(args.lam)
        alpha = exact.as_rational(args.alpha) if args.alpha is not None else None
        if alpha is not None and not 0 <= alpha <= 1:
            raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = EXIT_OK
    with _graph_items(args) as items:
        for idx, g in items:
            if isinstance(g, Exception):
                print(f"line {idx}: {g}", file=sys.stderr)
                status = EXIT_USAGE
                continue
            if alpha is not None:
                print(exact.multiplicity_alpha(g, alpha, lam))
            else:
                print(exact.multiplicity(g, args.matrix, lam))
    return status


def cmd_generate(args) -> int:
    if args.enumerate is not None:
        with _graph_items(args) as items:
            for _, g in items:
                print(emit_graph6(g))
        return EXIT_OK
    if not args.family:
        raise UsageError("generate needs --family or --enumerate")
    try:
        g = families.generate(args.family, _family_arg(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(emit_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circuitrank", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def source(p, enumerate_=True):
        p.add_argument("--input", default="-", help="graph6 file, '-' for stdin")
        p.add_argument("--family", choices=families.FAMILIES)
        p.add_argument("--n", help="family size (comma list for cactus_chain)")
        if enumerate_:
            p.add_argument("--enumerate", type=int, metavar="N", help="all labeled graphs on <= N vertices")

    def tau_opts(p):
        p.add_argument("--tau", choices=("exact", "greedy"), default="exact")
        p.add_argument("--tau-budget", type=int, default=DEFAULT_NODE_BUDGET)

    p = sub.add_parser("invariants", help="per-graph invariants")
    source(p)
    tau_opts(p)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="check every bound, one row per (graph, case)")
    source(p)
    tau_opts(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default="-")
    p.add_argument("--theorems", help="comma-separated case ids or prefixes")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--matrix", choices=exact.KINDS)
    p.add_argument("--alpha")
    p.add_argument("--lambda", dest="lam")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mult", help="exact eigenvalue multiplicity")
    source(p, enumerate_=False)
    p.add_argument("--matrix", choices=exact.KINDS, default="A")
    p.add_argument("--alpha")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("generate", help="print graph6 for a family or an enumeration")
    p.add_argument("--family", choices=families.FAMILIES)
    p.add_argument("--n")
    p.add_argument("--enumerate", type=int, metavar="N")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("circuitrank: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "tau_budget", 0) < 0:
        print("circuitrank: --tau-budget must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"circuitrank: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
