"""
Command-line entry point for fan graph spanning tree listings.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 verification failure, 2 usage or input error.
"""

import argparse
import os
import sys
import time
from itertools import islice
from typing import Iterable, Iterator, List, Optional, TextIO, Tuple

from cli.menu import run_menu
from fan.codec import format_move, parse_tree, serialize_tree
from fan.greedy import greedy_listing, iter_greedy
from fan.oracle import check_oracle_range, verify_listing
from fan.ranking import rank, tree_count, unrank
from fan.recursive import iter_steps, last_tree, listing, run
from fan.tree import EdgeMove, SpanningTree, path_tree
from shared.constants import BENCH_DEFAULT_REPEAT
from shared.enums import Engine, OutputMode
from shared.errors import FanGraphError
from shared.logging_config import configure_cli_logging, get_logger


logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

Steps = Iterator[Tuple[Optional[EdgeMove], SpanningTree]]


def engine_steps(n: int, engine: Engine, reverse: bool = False) -> Steps:
    """
    (move, tree) stream of LIST(n), or REVLIST(n) when reverse, from an engine.

    The greedy engine reaches REVLIST(n) by starting its search at L_n.
    """
    if engine is Engine.GREEDY:
        start = last_tree(n) if reverse else path_tree(n)
        return iter_greedy(start)
    return iter_steps(n, reverse)


def engine_listing(n: int, engine: Engine) -> List[SpanningTree]:
    if engine is Engine.GREEDY:
        return greedy_listing(path_tree(n))
    return listing(n)


def write_steps(steps: Iterable[Tuple[Optional[EdgeMove], SpanningTree]], mode: OutputMode, out: TextIO) -> int:
    """
    Write a (move, tree) stream in the chosen format.

    Returns:
        Number of trees consumed
    """
    count = 0
    write = out.write
    for move, tree in steps:
        count += 1
        if move is not None and mode is not OutputMode.TREES:
            write(format_move(move) + "\n")
        if mode is not OutputMode.MOVES:
            write(serialize_tree(tree) + "\n")
    return count


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    engine = Engine(args.engine)
    steps = engine_steps(args.n, engine, args.reverse)
    if args.limit is not None:
        steps = islice(steps, max(args.limit, 0))
    count = write_steps(steps, OutputMode(args.format), out)
    logger.debug("gen %d (%s): %d trees written", args.n, engine.value, count)
    return EXIT_OK


def cmd_rank(args: argparse.Namespace, out: TextIO) -> int:
    tree = parse_tree(args.n, args.tree)
    out.write(f"{rank(args.n, tree)}\n")
    return EXIT_OK


def cmd_unrank(args: argparse.Namespace, out: TextIO) -> int:
    out.write(serialize_tree(unrank(args.n, args.r)) + "\n")
    return EXIT_OK


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    out.write(f"{tree_count(args.n)}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    engine = Engine(args.engine)
    check_oracle_range(args.n)
    trees = engine_listing(args.n, engine)
    report = verify_listing(args.n, trees)
    out.write(
        f"n={report.n} engine={engine.value} trees={report.tree_total} "
        f"distinct={report.distinct} exhaustive={report.exhaustive} pivot_ok={report.pivot_ok}\n"
    )
    if not report.ok:
        index, description = report.first_violation
        out.write(f"first violation at {index}: {description}\n")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, out: TextIO) -> int:
    engine = Engine(args.engine)
    best = None
    trees = 0
    for _ in range(max(args.repeat, 1)):
        started = time.perf_counter()
        if engine is Engine.GREEDY:
            trees = sum(1 for _ in iter_greedy(path_tree(args.n)))
        else:
            trees = run(args.n).emitted
        elapsed = time.perf_counter() - started
        best = elapsed if best is None else min(best, elapsed)
    rate = trees / best if best > 0 else float("inf")
    out.write(f"trees={trees} seconds={best:.3f} trees_per_second={rate:.0f}\n")
    return EXIT_OK


def cmd_menu(args: argparse.Namespace, out: TextIO) -> int:
    return run_menu(out=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fan-trees",
        description="Pivot Gray code listing, ranking and unranking of fan graph spanning trees",
    )
    parser.add_argument(
        "--debug",
        action="store_true",
        help="Enable debug logging"
    )
    parser.add_argument(
        "--interactive",
        action="store_true",
        help="Run the interactive menu instead of a subcommand"
    )
    engines = [e.value for e in Engine]
    commands = parser.add_subparsers(dest="command", metavar="command")

    gen = commands.add_parser("gen", help="List the spanning trees of F_n")
    gen.add_argument("n", type=int, help="Number of vertices")
    gen.add_argument("--engine", choices=engines, default=Engine.RECURSIVE.value,
                     help="Listing engine (default: recursive)")
    gen.add_argument("--reverse", action="store_true", help="List REVLIST(n) instead")
    gen.add_argument("--format", choices=[m.value for m in OutputMode],
                     default=OutputMode.TREES.value, help="Output per step (default: trees)")
    gen.add_argument("--limit", type=int, default=None, help="Stop after this many trees")
    gen.set_defaults(handler=cmd_gen)

    rank_cmd = commands.add_parser("rank", help="Position of a tree in LIST(n)")
    rank_cmd.add_argument("n", type=int, help="Number of vertices")
    rank_cmd.add_argument("--tree", required=True, help="Tree as 'u,v;u,v;...' with inf for the hub")
    rank_cmd.set_defaults(handler=cmd_rank)

    unrank_cmd = commands.add_parser("unrank", help="Tree at a position of LIST(n)")
    unrank_cmd.add_argument("n", type=int, help="Number of vertices")
    unrank_cmd.add_argument("r", type=int, help="Rank, between 1 and t_n")
    unrank_cmd.set_defaults(handler=cmd_unrank)

    count = commands.add_parser("count", help="Number of spanning trees of F_n")
    count.add_argument("n", type=int, help="Number of vertices")
    count.set_defaults(handler=cmd_count)

    verify = commands.add_parser("verify", help="Check a listing against brute force")
    verify.add_argument("n", type=int, help="Number of vertices")
    verify.add_argument("--engine", choices=engines, default=Engine.RECURSIVE.value,
                        help="Listing engine (default: recursive)")
    verify.set_defaults(handler=cmd_verify)

    bench = commands.add_parser("bench", help="Time a full listing with output discarded")
    bench.add_argument("n", type=int, help="Number of vertices")
    bench.add_argument("--engine", choices=engines, default=Engine.RECURSIVE.value,
                       help="Listing engine (default: recursive)")
    bench.add_argument("--repeat", type=int, default=BENCH_DEFAULT_REPEAT,
                       help="Report the best of this many runs")
    bench.set_defaults(handler=cmd_bench)

    menu = commands.add_parser("menu", help="Interactive menu")
    menu.set_defaults(handler=cmd_menu)

    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Main entry point for the command-line tool."""
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout

    configure_cli_logging(args.debug)

    handler = cmd_menu if args.interactive else getattr(args, "handler", None)
    if handler is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        return handler(args, out)
    except FanGraphError as e:
        sys.stderr.write(f"error [{e.code}]: {e}\n")
        return EXIT_USAGE
    except BrokenPipeError:
        # Downstream closed early (e.g. piped into head)
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
