import argparse
import contextlib
import logging
import sys
from typing import Optional, TextIO

from annseq import tabulate
from annseq.closed_forms import ValidationReport, enumerate_closed
from annseq.curtis import Sequence, SequenceFormatError, check_curtis, structural_report
from annseq.engine import ResultSet, SearchConfig, SearchError, OracleCeilingError, diff, naive_oracle, search
from annseq.utils import load_config, setup_logging

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_FAILURE = 3


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return value


def _lengths(text: str) -> frozenset[int]:
    return frozenset(_positive_int(part) for part in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="TOML run profile, e.g. configs/default_config.toml")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--log-file", type=str, default=None)

    parser = argparse.ArgumentParser(prog="annseq", description="Enumerate and check sequences satisfying the Curtis annihilation conditions.")
    commands = parser.add_subparsers(dest="command", required=True)

    enumerate_parser = commands.add_parser("enumerate", parents=[common], help="run the pruned search and write the table")
    enumerate_parser.add_argument("--max-dim", type=_positive_int, required=True)
    enumerate_parser.add_argument("--min-dim", type=_positive_int, default=1)
    enumerate_parser.add_argument("--lengths", type=_lengths, default=None)
    enumerate_parser.add_argument("--format", choices=tabulate.FORMATS, default=None)
    enumerate_parser.add_argument("--group-pow2", action="store_true")
    enumerate_parser.add_argument("--shards", type=_positive_int, default=None)
    enumerate_parser.add_argument("--out", type=str, default=None)

    check_parser = commands.add_parser("check", parents=[common], help="check one sequence, e.g. 19,11,7")
    check_parser.add_argument("sequence", type=str)

    closed_parser = commands.add_parser("closed", parents=[common], help="enumerate the closed-form families")
    closed_parser.add_argument("--lengths", type=_lengths, default=frozenset({1, 3, 4, 5}))
    closed_parser.add_argument("--max-dim", type=_positive_int, required=True)
    closed_parser.add_argument("--format", choices=tabulate.FORMATS, default=None)
    closed_parser.add_argument("--report", action="store_true", help="print dropped and out-of-range instances to stderr")
    closed_parser.add_argument("--verify", action="store_true", help="diff the families against the search")
    closed_parser.add_argument("--out", type=str, default=None)

    oracle_parser = commands.add_parser("diff-oracle", parents=[common], help="compare the search with the naive oracle")
    oracle_parser.add_argument("--max-dim", type=_positive_int, required=True)

    stats_parser = commands.add_parser("stats", parents=[common], help="counts per dyadic dimension interval")
    stats_parser.add_argument("--max-dim", type=_positive_int, required=True)
    stats_parser.add_argument("--format", choices=tabulate.FORMATS, default=None)
    stats_parser.add_argument("--shards", type=_positive_int, default=None)
    return parser


@contextlib.contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii", newline="") as f:
            yield f


def _run_enumerate(args, config: dict, logger: logging.Logger) -> int:
    search_config = SearchConfig(
        max_dim=args.max_dim,
        min_dim=args.min_dim,
        lengths=args.lengths,
        shards=args.shards or config["search"]["shards"],
    )
    fmt = args.format or config["output"]["format"]
    result = search(search_config, logger.getChild("engine"))
    with _output(args.out) as out:
        if args.group_pow2:
            tabulate.emit_grouped(result, fmt, out)
        else:
            tabulate.emit(result, fmt, out)
    return EXIT_OK


def _run_check(args, out: TextIO) -> int:
    try:
        seq = Sequence.parse(args.sequence)
    except SequenceFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    report = check_curtis(seq)
    print(report.describe(), file=out)
    print(f"excess: {report.excess}", file=out)
    print(f"admissible: {str(report.admissible).lower()}", file=out)
    failure = "none" if report.failure is None else f"{report.failure.kind.value} at {report.failure.position}"
    print(f"failure: {failure}", file=out)
    for name, holds in structural_report(seq):
        print(f"{name}: {str(holds).lower()}", file=out)
    return EXIT_OK if report.accepted else EXIT_REJECTED


def _run_closed(args, config: dict, logger: logging.Logger) -> int:
    fmt = args.format or config["output"]["format"]
    report = ValidationReport()
    closed = enumerate_closed(args.lengths, args.max_dim, report, logger.getChild("closed_forms"))
    with _output(args.out) as out:
        tabulate.emit(closed, fmt, out)
    if args.report:
        for line in report.lines():
            print(line, file=sys.stderr)
        print(f"{report.count_extended()} instance(s) accepted outside the stated ranges", file=sys.stderr)
        print(f"{report.count()} instance(s) dropped", file=sys.stderr)
    if not args.verify:
        return EXIT_OK
    found = search(SearchConfig(max_dim=args.max_dim, lengths=args.lengths), logger.getChild("engine"))
    mismatch = diff(ResultSet.from_sequences(closed), found)
    for line in mismatch.lines():
        print(line, file=sys.stderr)
    print(f"closed-only {len(mismatch.left_only)}, search-only {len(mismatch.right_only)}", file=sys.stderr)
    return EXIT_OK if mismatch.empty else EXIT_REJECTED


def _run_diff_oracle(args, config: dict, logger: logging.Logger, out: TextIO) -> int:
    ceiling = config["search"]["oracle_ceiling"]
    if args.max_dim > ceiling:
        print(f"error: oracle ceiling is {ceiling}, asked for {args.max_dim}", file=sys.stderr)
        return EXIT_USAGE
    found = search(SearchConfig(max_dim=args.max_dim), logger.getChild("engine"))
    try:
        oracle = naive_oracle(args.max_dim, ceiling, logger=logger.getChild("oracle"))
    except OracleCeilingError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    report = diff(found, oracle)
    if report.empty:
        print(f"identical ({found.total} sequences)", file=out)
        return EXIT_OK
    for line in report.lines():
        print(line, file=out)
    print(f"different ({len(report.left_only)} search-only, {len(report.right_only)} oracle-only)", file=out)
    return EXIT_REJECTED


def _run_stats(args, config: dict, logger: logging.Logger, out: TextIO) -> int:
    fmt = args.format or config["output"]["format"]
    shards = args.shards or config["search"]["shards"]
    result = search(SearchConfig(max_dim=args.max_dim, shards=shards), logger.getChild("engine"))
    tabulate.emit_stats(tabulate.stats(result), fmt, out)
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    setup_logging(level, args.log_file)
    logger = logging.getLogger("annseq")
    try:
        config = load_config(args.config)
    except (OSError, ValueError) as e:
        print(f"error: cannot load config: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "enumerate":
            return _run_enumerate(args, config, logger)
        if args.command == "check":
            return _run_check(args, sys.stdout)
        if args.command == "closed":
            return _run_closed(args, config, logger)
        if args.command == "diff-oracle":
            return _run_diff_oracle(args, config, logger, sys.stdout)
        return _run_stats(args, config, logger, sys.stdout)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SearchError as e:
        logger.error(f"Search failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
