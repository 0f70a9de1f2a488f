"""
Benchmark harness: space-saving ratio sweeps, timing, speedup and bound error.
"""

from .sweep import BenchConfig, BenchRecord, RECORD_ALGORITHMS, run_sweep
from .summary import records_to_frame, summarize
from .report import CSV_COLUMNS, write_records_csv, read_records_csv, write_summary_svg

__all__ = [
    'BenchConfig', 'BenchRecord', 'RECORD_ALGORITHMS', 'run_sweep',
    'records_to_frame', 'summarize',
    'CSV_COLUMNS', 'write_records_csv', 'read_records_csv', 'write_summary_svg',
]
