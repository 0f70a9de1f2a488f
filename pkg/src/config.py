"""
Configuration module for the run-length DTW toolkit.
Loads environment variables from .env file and provides access to configuration settings.
"""

import os
from typing import List

from dotenv import load_dotenv

from .exceptions import ValidationError

# Load environment variables from .env file
load_dotenv()

# Benchmark Configuration
BENCH_RATIOS = [
    float(r) for r in os.getenv(
        'RLEDTW_BENCH_RATIOS', '0.1,0.5,0.75,0.9,0.925,0.95,0.975,0.99'
    ).split(',') if r.strip()
]
BENCH_SAMPLE_SIZE = int(os.getenv('RLEDTW_BENCH_SAMPLE', '100'))
BENCH_REPETITIONS = int(os.getenv('RLEDTW_BENCH_REPS', '5'))
BENCH_SEED = int(os.getenv('RLEDTW_BENCH_SEED', '0'))

# Algorithms known to the benchmark, in report order
ALGORITHMS: List[str] = ['naive', 'boundary', 'rledtw', 'bdtw']


def bench_worker_count() -> int:
    """
    Number of benchmark worker processes.

    RLEDTW_THREADS is read on every call; when unset, one core is left free.

    Returns:
        A worker count >= 1
    """
    default = max(1, (os.cpu_count() or 2) - 1)
    raw = os.getenv('RLEDTW_THREADS')
    if raw is None or not raw.strip():
        return default
    try:
        threads = int(raw)
    except ValueError:
        raise ValidationError(f"RLEDTW_THREADS must be an integer, got {raw!r}")
    return max(1, threads)
