"""
Benchmark output files: the record CSV and the two-panel SVG chart.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Union

import matplotlib
matplotlib.use('Agg')

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

from ..exceptions import ParseError
from .summary import COLUMNS, records_to_frame
from .sweep import BenchRecord

logger = logging.getLogger(__name__)

CSV_COLUMNS = COLUMNS


def write_records_csv(records: Iterable[BenchRecord], path: Union[str, Path]) -> Path:
    """
    Write records with the fixed header; undefined fields stay empty.

    Args:
        records: Records to write
        path: Destination file

    Returns:
        The path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = records_to_frame(records)
    frame.to_csv(path, index=False, na_rep='')
    logger.info(f"Wrote {len(frame)} records to {path}")
    return path


def read_records_csv(path: Union[str, Path]) -> List[BenchRecord]:
    """
    Read a CSV written by ``write_records_csv``.

    Args:
        path: CSV file

    Returns:
        The records, with floats restored bit for bit

    Raises:
        ParseError: If the file is empty, lacks a column or holds a malformed value
    """
    try:
        frame = pd.read_csv(
            path,
            dtype={'dataset': str, 'algorithm': str, 'kappa': 'Int64'},
            keep_default_na=False,
            na_values={'kappa': [''], 'error_pct': ['']},
            float_precision='round_trip',
        )
    except pd.errors.EmptyDataError:
        raise ParseError(f"{path} is empty")
    except (pd.errors.ParserError, ValueError, TypeError) as e:
        raise ParseError(f"{path}: {e}")

    missing = [c for c in CSV_COLUMNS if c not in frame.columns]
    if missing:
        raise ParseError(f"{path} is missing column(s) {', '.join(missing)}", 1)

    records = []
    for position, row in enumerate(frame.itertuples(index=False)):
        try:
            records.append(BenchRecord(
                dataset=row.dataset,
                rho=float(row.rho),
                k=int(row.k),
                algorithm=row.algorithm,
                pair=int(row.pair),
                wall_ns=int(row.wall_ns),
                distance=float(row.distance),
                squared_cost=float(row.squared_cost),
                kappa=None if pd.isna(row.kappa) else int(row.kappa),
                speedup=float(row.speedup),
                error_pct=None if pd.isna(row.error_pct) else float(row.error_pct),
            ))
        except (ValueError, TypeError) as e:
            # line 1 is the header
            raise ParseError(str(e), position + 2)
    return records


def write_summary_svg(summary: pd.DataFrame, path: Union[str, Path]) -> Path:
    """
    Plot log10 of the mean speedup per algorithm and log10 of the mean BDTW
    error against the space-saving ratio.

    Args:
        summary: Output of ``summarize``
        path: Destination SVG file

    Returns:
        The path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    fig, (speed_ax, error_ax) = plt.subplots(1, 2, figsize=(11, 4))
    try:
        for algorithm, group in summary.groupby('algorithm', sort=False):
            speed_ax.plot(group['rho'], np.log10(group['mean_speedup']), marker='o', label=algorithm)
        speed_ax.set_xlabel('space-saving ratio')
        speed_ax.set_ylabel('log10(mean speedup)')
        speed_ax.set_title('Speedup over the naive DP')
        speed_ax.legend()

        bounds = summary[summary['algorithm'].str.startswith('bdtw')]
        for algorithm, group in bounds.groupby('algorithm', sort=False):
            # log10 is undefined for exact bounds
            group = group[group['mean_error_pct'] > 0]
            if not group.empty:
                error_ax.plot(group['rho'], np.log10(group['mean_error_pct']), marker='o', label=algorithm)
        error_ax.set_xlabel('space-saving ratio')
        error_ax.set_ylabel('log10(mean error %)')
        error_ax.set_title('BDTW bound error')
        if error_ax.lines:
            error_ax.legend()

        fig.tight_layout()
        fig.savefig(path, format='svg')
    finally:
        plt.close(fig)

    logger.info(f"Wrote chart to {path}")
    return path
