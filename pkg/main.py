"""
Command-line front end of the run-length DTW toolkit.

Commands:
1. dtw        distance between two series (raw files or run-length encodings)
2. compress   APCA-compress every series of a dataset into RLE text lines
3. bench      speedup / bound-error sweep over space-saving ratios
4. gen        synthetic piecewise constant datasets
5. summarize  re-aggregate a benchmark CSV

Exit codes: 0 success, 2 usage or validation error, 1 internal error.
"""

import sys
import argparse
import traceback
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

env_path = Path(__file__).parent / '.env'
load_dotenv(dotenv_path=env_path)

from config.logger import setup_logging
from src.config import ALGORITHMS, BENCH_RATIOS, BENCH_REPETITIONS, BENCH_SAMPLE_SIZE, BENCH_SEED
from src.baselines import bdtw_bounds, dtw_boundary, dtw_naive
from src.bench import (
    BenchConfig, read_records_csv, run_sweep, summarize, write_records_csv, write_summary_svg,
)
from src.compress import apca, ratio_to_k
from src.data_sources import SyntheticSource, format_ucr_lines, load_ucr, write_ucr
from src.exceptions import ParseError, RleDtwError, ValidationError
from src.rle_core import RunLengthEncoding, decode, encode, format_rle, parse_rle
from src.rledtw import rle_dtw

import logging

# Initialize logger
logger = logging.getLogger(__name__)


def _format_distance(value: float) -> str:
    return f"{value:.12g}"


def _read_rle_argument(argument: str, index: int) -> RunLengthEncoding:
    """An RLE file (line ``index``) if the argument names one, else inline RLE text."""
    path = Path(argument)
    if not path.is_file():
        return parse_rle(argument)

    lines = [(number, line) for number, line in
             enumerate(path.read_text(encoding='utf-8').splitlines(), start=1) if line.strip()]
    if index >= len(lines):
        raise ValidationError(f"{path} has {len(lines)} encodings, index {index} requested")
    number, line = lines[index]
    return parse_rle(line, line=number)


def _read_series_argument(argument: str, index: int, labeled: bool):
    dataset = load_ucr(argument, labeled=labeled)
    if index >= len(dataset):
        raise ValidationError(f"{argument} has {len(dataset)} series, index {index} requested")
    return dataset.series[index]


def compute_distance(first: str, second: str, algo: str = 'rledtw', rle: bool = False,
                     index: int = 0, labeled: bool = True) -> List[str]:
    """
    Compute the distance between two inputs.

    Args:
        first: File or (with rle) inline run-length encoding
        second: File or (with rle) inline run-length encoding
        algo: One of naive, boundary, rledtw, bdtw
        rle: Treat the inputs as run-length encodings
        index: Which series / encoding of a file to use
        labeled: Whether raw input lines start with a class label

    Returns:
        Output lines
    """
    if rle:
        xr = _read_rle_argument(first, index)
        yr = _read_rle_argument(second, index)
    else:
        xr = encode(_read_series_argument(first, index, labeled))
        yr = encode(_read_series_argument(second, index, labeled))

    logger.info(f"Computing {algo} distance, coding lengths {xr.coding_length} and {yr.coding_length}")

    if algo == 'naive':
        return [_format_distance(dtw_naive(decode(xr), decode(yr)).distance)]
    if algo == 'boundary':
        return [_format_distance(dtw_boundary(xr, yr).distance)]
    if algo == 'bdtw':
        bounds = bdtw_bounds(xr, yr)
        return [f"{_format_distance(bounds.lower)} {_format_distance(bounds.upper)}"]

    result = rle_dtw(xr, yr)
    return [_format_distance(result.distance), f"kappa={result.kappa}"]


def compress_dataset(path: str, k: Optional[int] = None, ratio: Optional[float] = None,
                     out: Optional[str] = None, labeled: bool = True) -> List[str]:
    """
    APCA-compress every series of a dataset.

    Args:
        path: UCR-format dataset
        k: Segments per series
        ratio: Space-saving ratio, used when k is None
        out: Destination RLE file; None returns the lines only
        labeled: Whether input lines start with a class label

    Returns:
        RLE text lines, one per series
    """
    dataset = load_ucr(path, labeled=labeled)

    lines = []
    total_sse = 0.0
    for position, ts in enumerate(dataset.series):
        segments = k if k is not None else ratio_to_k(len(ts), ratio)
        segmentation, rle = apca(ts, segments)
        lines.append(format_rle(rle))
        total_sse += segmentation.sse
        print(f"series {position}: n={len(ts)} k={segments} runs={rle.coding_length} "
              f"sse={_format_distance(segmentation.sse)}", file=sys.stderr)
    print(f"total sse={_format_distance(total_sse)} over {len(lines)} series", file=sys.stderr)

    if out is not None:
        out_path = Path(out)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(''.join(line + '\n' for line in lines), encoding='utf-8')
        logger.info(f"Wrote {len(lines)} encodings to {out_path}")
    return lines


def run_benchmark(path: str, config: BenchConfig, csv_path: Optional[str] = None,
                  svg_path: Optional[str] = None, labeled: bool = True):
    """
    Run the benchmark sweep and write the requested reports.

    Files written by a failed run are removed.

    Args:
        path: UCR-format dataset
        config: Sweep configuration
        csv_path: Destination of the record CSV
        svg_path: Destination of the chart
        labeled: Whether input lines start with a class label

    Returns:
        The summary DataFrame
    """
    dataset = load_ucr(path, labeled=labeled)
    dataset.require_equal_length()

    written = []
    try:
        records = run_sweep(dataset, config)
        summary = summarize(records, series_length=dataset.length)
        if csv_path:
            written.append(Path(csv_path))
            write_records_csv(records, csv_path)
        if svg_path:
            written.append(Path(svg_path))
            write_summary_svg(summary, svg_path)
    except Exception:
        for partial in written:
            if partial.exists():
                partial.unlink()
                logger.warning(f"Removed partial output {partial}")
        raise
    return summary


def generate_dataset(kind: str, n: int, count: int, runs: int, seed: int = 0,
                     out: Optional[str] = None) -> List[str]:
    """
    Generate a synthetic dataset.

    Args:
        kind: 'staircase' or 'randomwalk-then-apca'
        n: Series length
        count: Number of series
        runs: Constant segments per series
        seed: Random seed
        out: Destination file; None returns the lines only

    Returns:
        UCR-format lines
    """
    dataset = SyntheticSource(kind, seed).load_data(n=n, runs=runs, count=count)
    if out is not None:
        write_ucr(dataset, out)
    return format_ucr_lines(dataset)


def _parse_ratios(text: str) -> List[float]:
    try:
        return [float(r) for r in text.split(',') if r.strip()]
    except ValueError:
        raise ParseError(f"ratios must be a comma separated list of numbers, got {text!r}")


def _parse_algorithms(text: str) -> List[str]:
    return [a.strip() for a in text.split(',') if a.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Exact DTW on run-length encoded time series")

    # Create subparsers for different commands
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    # Distance command
    dtw_parser = subparsers.add_parser("dtw", help="Distance between two series")
    dtw_parser.add_argument("first", help="Dataset file, or RLE text / RLE file with --rle")
    dtw_parser.add_argument("second", help="Dataset file, or RLE text / RLE file with --rle")
    dtw_parser.add_argument("--algo", choices=ALGORITHMS, default="rledtw", help="Algorithm")
    dtw_parser.add_argument("--rle", action="store_true", help="Inputs are run-length encodings")
    dtw_parser.add_argument("--index", type=int, default=0, help="Series or line to use from a file")
    dtw_parser.add_argument("--no-label", action="store_true", help="Raw lines carry no class label")

    # Compression command
    compress_parser = subparsers.add_parser("compress", help="APCA-compress a dataset to RLE lines")
    compress_parser.add_argument("file", help="UCR-format dataset")
    size_group = compress_parser.add_mutually_exclusive_group(required=True)
    size_group.add_argument("--k", type=int, help="Segments per series")
    size_group.add_argument("--ratio", type=float, help="Space-saving ratio in [0, 1)")
    compress_parser.add_argument("--out", help="Output RLE file (stdout if omitted)")
    compress_parser.add_argument("--no-label", action="store_true", help="Lines carry no class label")

    # Benchmark command
    bench_parser = subparsers.add_parser("bench", help="Speedup and bound-error sweep")
    bench_parser.add_argument("file", help="UCR-format dataset of equal-length series")
    bench_parser.add_argument("--ratios", default=','.join(str(r) for r in BENCH_RATIOS),
                              help="Comma separated space-saving ratios")
    bench_parser.add_argument("--sample", type=int, default=BENCH_SAMPLE_SIZE, help="Series to sample")
    bench_parser.add_argument("--seed", type=int, default=BENCH_SEED, help="Sampling seed")
    bench_parser.add_argument("--reps", type=int, default=BENCH_REPETITIONS, help="Timed runs per pair")
    bench_parser.add_argument("--algos", default=','.join(ALGORITHMS), help="Comma separated algorithms")
    bench_parser.add_argument("--csv", help="Record CSV output")
    bench_parser.add_argument("--svg", help="Chart output")
    bench_parser.add_argument("--workers", type=int, help="Worker processes (capped by RLEDTW_THREADS)")
    bench_parser.add_argument("--no-label", action="store_true", help="Lines carry no class label")

    # Generator command
    gen_parser = subparsers.add_parser("gen", help="Generate a synthetic dataset")
    gen_parser.add_argument("--kind", choices=["staircase", "randomwalk-then-apca"], required=True)
    gen_parser.add_argument("--n", type=int, required=True, help="Series length")
    gen_parser.add_argument("--count", type=int, default=1, help="Number of series")
    gen_parser.add_argument("--runs", type=int, required=True, help="Constant segments per series")
    gen_parser.add_argument("--seed", type=int, default=0, help="Random seed")
    gen_parser.add_argument("--out", help="Output file (stdout if omitted)")

    # Summary command
    summary_parser = subparsers.add_parser("summarize", help="Aggregate a benchmark CSV")
    summary_parser.add_argument("csv", help="CSV written by bench")
    summary_parser.add_argument("--length", type=int, help="Series length, adds the kappa caps")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main function to parse arguments and run the appropriate command.

    Returns:
        The process exit code
    """
    parser = build_parser()

    # Parse arguments
    args = parser.parse_args(argv)
    setup_logging()

    try:
        # Run the appropriate command
        if args.command == "dtw":
            lines = compute_distance(args.first, args.second, algo=args.algo, rle=args.rle,
                                     index=args.index, labeled=not args.no_label)
            print('\n'.join(lines))
        elif args.command == "compress":
            lines = compress_dataset(args.file, k=args.k, ratio=args.ratio, out=args.out,
                                     labeled=not args.no_label)
            if args.out is None:
                print('\n'.join(lines))
        elif args.command == "bench":
            config = BenchConfig(
                ratios=_parse_ratios(args.ratios),
                sample_size=args.sample,
                algorithms=_parse_algorithms(args.algos),
                seed=args.seed,
                repetitions=args.reps,
                workers=args.workers,
            )
            summary = run_benchmark(args.file, config, csv_path=args.csv, svg_path=args.svg,
                                    labeled=not args.no_label)
            print(summary.to_string(index=False))
        elif args.command == "gen":
            lines = generate_dataset(args.kind, n=args.n, count=args.count, runs=args.runs,
                                     seed=args.seed, out=args.out)
            if args.out is None:
                print('\n'.join(lines))
        elif args.command == "summarize":
            summary = summarize(read_records_csv(args.csv), series_length=args.length)
            print(summary.to_string(index=False))
        else:
            parser.print_help()
            return 2
        return 0

    except (RleDtwError, FileNotFoundError) as e:
        logger.error(f"{args.command} failed: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.error(f"Error in {args.command}: {str(e)}")
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
