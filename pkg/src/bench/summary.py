"""
Aggregation of benchmark records per (ratio, algorithm).
"""

from dataclasses import asdict
from typing import Iterable, Optional

import pandas as pd

from ..exceptions import ValidationError
from .sweep import RECORD_ALGORITHMS, BenchRecord

COLUMNS = ['dataset', 'rho', 'k', 'algorithm', 'pair', 'wall_ns', 'distance',
           'squared_cost', 'kappa', 'speedup', 'error_pct']


def records_to_frame(records: Iterable[BenchRecord]) -> pd.DataFrame:
    """
    One row per record, columns in CSV order.

    Undefined kappa is <NA> (nullable integer), undefined error is NaN.
    """
    frame = pd.DataFrame([asdict(r) for r in records], columns=COLUMNS)
    frame['kappa'] = frame['kappa'].astype('Int64')
    frame['error_pct'] = frame['error_pct'].astype('float64')
    return frame


def summarize(records: Iterable[BenchRecord], series_length: Optional[int] = None) -> pd.DataFrame:
    """
    Mean and median speedup, mean error and mean kappa per (rho, algorithm).

    Args:
        records: Benchmark records
        series_length: Common series length n; adds the nominal kappa caps
            kn + lm - kl and (k+l)(kl+1), evaluated with k = l = the target
            coding length of the row and m = n. Canonicalization can leave
            fewer runs than the target, so these are caps on the target, not
            on the encodings actually compared.

    Raises:
        ValidationError: If there are no records

    Returns:
        A DataFrame sorted by rho, then algorithm in report order
    """
    frame = records_to_frame(records)
    if frame.empty:
        raise ValidationError("cannot summarize an empty record set")

    frame['kappa'] = frame['kappa'].astype('float64')
    frame['algorithm'] = pd.Categorical(frame['algorithm'], categories=RECORD_ALGORITHMS, ordered=True)

    summary = (
        frame.groupby(['rho', 'algorithm'], observed=True, sort=True)
        .agg(
            k=('k', 'first'),
            count=('pair', 'size'),
            mean_speedup=('speedup', 'mean'),
            median_speedup=('speedup', 'median'),
            mean_error_pct=('error_pct', 'mean'),
            mean_kappa=('kappa', 'mean'),
        )
        .reset_index()
    )
    summary['algorithm'] = summary['algorithm'].astype(str)

    if series_length is not None:
        n = series_length
        summary['nominal_kappa_cap_boundary'] = [2 * k * n - k * k for k in summary['k']]
        summary['nominal_kappa_cap_cubic'] = [2 * k * (k * k + 1) for k in summary['k']]
    return summary
