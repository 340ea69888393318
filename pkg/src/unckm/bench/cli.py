"""Command-line entry point: ``unckm-bench`` / ``python -m unckm.bench``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from ..errors import ContractViolation, UnckmError
from ..lloyd import DEFAULT_MAX_ITER
from .config import BUILTIN_PREFIX, FORMATS, INITIALIZERS, SCALINGS, ExperimentConfig
from .report import write_report
from .runner import resolve_path, run_experiment


def _uint64(s: str) -> int:
    v = int(s, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"{s} is not an unsigned 64-bit integer")
    return v


def _init_list(s: str) -> tuple[str, ...]:
    names = tuple(x.strip() for x in s.split(",") if x.strip())
    if "all" in names:
        return INITIALIZERS
    return names


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="unckm-bench",
        description="Compare k-means initializers: repeated seeded runs, mean SSEDM and wall time.",
    )
    p.add_argument("--data", required=True, metavar="PATH",
                   help=f"delimited numeric file, or {BUILTIN_PREFIX}iris for the bundled iris data")
    p.add_argument("--header", action="store_true", help="first line is a header")
    p.add_argument("--delimiter", default=",", metavar="CHAR",
                   help="field separator; ' ' or 'whitespace' splits on runs of whitespace")
    p.add_argument("--drop-col", type=int, action="append", default=[], metavar="IDX",
                   dest="drop_col", help="0-based column to drop (repeatable)")
    p.add_argument("--scale", choices=SCALINGS, default="none")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--init", type=_init_list, default=("random", "kmeanspp", "unc"), metavar="LIST",
                   help=f"comma-separated subset of {','.join(INITIALIZERS)} (or 'all')")
    p.add_argument("--runs", type=int, default=50)
    p.add_argument("--seed", type=_uint64, default=0, metavar="UINT64")
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--out", metavar="PATH", help="report file (default: print summary only)")
    p.add_argument("--format", choices=FORMATS, default=None,
                   help="report format (default: from --out suffix, else json)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    fmt = args.format or ("csv" if args.out and args.out.endswith(".csv") else "json")
    try:
        config = ExperimentConfig(
            dataset_path=args.data,
            k=args.k,
            initializers=args.init,
            runs=args.runs,
            base_seed=args.seed,
            max_iter=args.max_iter,
            has_header=args.header,
            delimiter=args.delimiter,
            drop_columns=args.drop_col,
            scale=args.scale,
            output_path=args.out,
            output_format=fmt,
        )
    except ContractViolation as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2
    try:
        data_path = resolve_path(config.dataset_path)
    except UnckmError as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2
    if not data_path.is_file():
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: dataset not found: {data_path}", file=sys.stderr)
        return 2

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        report = run_experiment(config)
        if config.output_path:
            write_report(report, config.output_format, config.output_path)
    except (UnckmError, OSError) as e:
        print(f"{parser.prog}: {e}", file=sys.stderr)
        return 1
    print(report.summary_table())
    if config.output_path:
        print(f"report written to {Path(config.output_path)}")
    return 0


def main():
    sys.exit(cli_main())
