"""Command-line interface: ``threshgraph {count,eulerian,enumerate,recognize,verify}``."""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed

from . import formats
from ._config import OracleBoundError, oracle_bounds
from .bijection import phi, selection_word
from .combinatorics import EulerianTable
from .enumeration import (
    count_labeled,
    count_unlabeled,
    enumerate_selections,
    partition_prefixes,
    verify,
)
from .graph import NotThresholdError, ThresholdPair, construct, extract_pair, forbidden_witness

ENUM_FORMATS = ("pairs", "graph6", "edges", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--bfile expects A..B, got {text!r}") from None


def cmd_count(args, out) -> int:
    if (args.labeled is None) == (args.unlabeled is None):
        raise UsageError("give exactly one of --labeled or --unlabeled")
    labeled = args.labeled is not None
    value = args.labeled if labeled else args.unlabeled
    low = 2 if labeled else 1
    func = count_labeled if labeled else count_unlabeled
    if args.bfile is not None:
        if value is not True:
            raise UsageError("--bfile replaces N; do not give both")
        lo, hi = _parse_range(args.bfile)
        if lo < low or hi < lo:
            raise UsageError(f"--bfile range must satisfy {low} <= A <= B")
        table = EulerianTable()
        for n in range(lo, hi + 1):
            v = count_labeled(n, table) if labeled else count_unlabeled(n)
            out.write(f"{n} {v}\n")
        return 0
    if value is True:
        raise UsageError("missing N")
    if value < low:
        raise UsageError(f"N must be >= {low}, got {value}")
    out.write(f"{func(value)}\n")
    return 0


def cmd_eulerian(args, out) -> int:
    if args.n < 0:
        raise UsageError(f"N must be >= 0, got {args.n}")
    table = EulerianTable()
    if args.k is not None:
        out.write(f"{table.value(args.n, args.k)}\n")
    else:
        out.write(" ".join(map(str, table.row(args.n))) + "\n")
    return 0


def _render(sel, fmt: str) -> str:
    if fmt == "pairs":
        return str(ThresholdPair(sel.perm, selection_word(sel)))
    if fmt == "json":
        return formats.dumps(formats.selection_record(sel))
    g = construct(ThresholdPair(sel.perm, selection_word(sel)))
    if fmt == "graph6":
        return formats.to_graph6(g)
    return formats.to_edge_list(g, one_line=True)


def _render_block(n: int, block, fmt: str) -> str:
    return "".join(_render(sel, fmt) + "\n" for sel in enumerate_selections(n, block))


def cmd_enumerate(args, out) -> int:
    n = args.n
    if n < 2:
        raise UsageError(f"N must be >= 2, got {n}")
    if args.parallel < 1:
        raise UsageError("--parallel must be >= 1")
    if args.parallel == 1:
        for sel in enumerate_selections(n):
            out.write(_render(sel, args.format) + "\n")
        return 0
    # one task per prefix keeps blocks small; each block is written whole
    blocks = partition_prefixes(n, n * (n - 1) // 2)
    with ProcessPoolExecutor(max_workers=args.parallel) as pool:
        futures = [pool.submit(_render_block, n, b, args.format) for b in blocks]
        for fut in as_completed(futures):
            out.write(fut.result())
    return 0


def _read_input(args) -> str:
    if args.input:
        with open(args.input, encoding="ascii") as fh:
            return fh.read()
    return sys.stdin.read()


def cmd_recognize(args, out) -> int:
    text = _read_input(args)
    try:
        if args.format == "graph6":
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if not lines:
                raise formats.FormatError("no graph6 line on input")
            g = formats.from_graph6(lines[0])
        else:
            g = formats.from_edge_list(text)
    except formats.FormatError as exc:
        raise UsageError(f"cannot parse input: {exc}") from None
    record: dict = {"threshold": True, "n": g.n}
    try:
        if g.n >= 2:
            sel = phi(g)
            record["pair"] = formats.pair_record(ThresholdPair(sel.perm, selection_word(sel)))
            record["selection"] = {"perm": list(sel.perm.entries), "marks": sorted(sel.marks)}
        else:
            record["pair"] = formats.pair_record(extract_pair(g))
            record["selection"] = None
    except NotThresholdError:
        record = {"threshold": False, "n": g.n,
                  "witness": formats.witness_record(forbidden_witness(g))}
    out.write(formats.dumps(record) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    n = args.n
    if n < 2:
        raise UsageError(f"N must be >= 2, got {n}")
    if args.census:
        bounds = oracle_bounds()
        limit = bounds.graphs_extended if args.extended else bounds.graphs
        if n > limit:
            raise UsageError(f"--census needs N <= {limit} (use --extended for one more)")
    report = verify(n, census=args.census, extended=args.extended, seed=args.seed)
    out.write(report.render())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="threshgraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="exact count of threshold graphs")
    p.add_argument("--labeled", type=int, nargs="?", const=True, metavar="N")
    p.add_argument("--unlabeled", type=int, nargs="?", const=True, metavar="N")
    p.add_argument("--bfile", metavar="A..B", help='emit "n value" lines for n in A..B')
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("eulerian", help="Eulerian numbers")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--k", type=int, metavar="K")
    p.set_defaults(func=cmd_eulerian)

    p = sub.add_parser("enumerate", help="stream every labeled threshold graph")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--format", choices=ENUM_FORMATS, default="pairs")
    p.add_argument("--parallel", type=int, default=1, metavar="P")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("recognize", help="test one graph and report its standard pair")
    p.add_argument("--format", choices=("edges", "graph6"), default="edges")
    p.add_argument("--input", metavar="FILE")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", help="cross-check formulas against brute force")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--census", action="store_true", help="include the all-graphs census")
    p.add_argument("--extended", action="store_true", help="allow the census one size further")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (UsageError, OracleBoundError, ValueError, OSError) as exc:
        if isinstance(exc, BrokenPipeError):
            return _broken_pipe()
        print(f"threshgraph {args.command}: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 130


def _broken_pipe() -> int:
    # keep the interpreter from complaining while flushing a closed stdout
    devnull = os.open(os.devnull, os.O_WRONLY)
    os.dup2(devnull, sys.stdout.fileno())
    return 0


if __name__ == "__main__":
    sys.exit(main())
