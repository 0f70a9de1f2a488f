"""
Pairwise distance sweeps over space-saving ratios.

For every ratio each sampled series is compressed with APCA, then every
unordered pair is timed with every enabled algorithm. The naive DP always
runs: it is both the speedup denominator and the exactness reference.
"""

import logging
import multiprocessing as mp
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..baselines import bdtw_bounds, dtw_boundary, dtw_naive
from ..compress import apca, ratio_to_k
from ..config import (
    ALGORITHMS, BENCH_RATIOS, BENCH_REPETITIONS, BENCH_SAMPLE_SIZE, BENCH_SEED,
    bench_worker_count,
)
from ..data_sources import Dataset
from ..exceptions import ValidationError
from ..rle_core import RunLengthEncoding, TimeSeries, decode
from ..rledtw import rle_dtw

logger = logging.getLogger(__name__)

# One record per algorithm; bdtw yields a lower and an upper record
RECORD_ALGORITHMS = ('naive', 'boundary', 'rledtw', 'bdtw_lower', 'bdtw_upper')


@dataclass(frozen=True)
class BenchConfig:
    """
    Attributes:
        ratios: Space-saving ratios, each in [0, 1)
        sample_size: Series drawn from the dataset, at least 2
        algorithms: Subset of naive, boundary, rledtw, bdtw
        seed: Seed for sampling
        repetitions: Timed runs per algorithm and pair; the best is kept
        workers: Worker processes; None means bench_worker_count()
    """

    ratios: Tuple[float, ...] = field(default_factory=lambda: tuple(BENCH_RATIOS))
    sample_size: int = BENCH_SAMPLE_SIZE
    algorithms: Tuple[str, ...] = tuple(ALGORITHMS)
    seed: int = BENCH_SEED
    repetitions: int = BENCH_REPETITIONS
    workers: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'ratios', tuple(float(r) for r in self.ratios))
        object.__setattr__(self, 'algorithms', tuple(self.algorithms))
        if not self.ratios:
            raise ValidationError("at least one space-saving ratio is required")
        for rho in self.ratios:
            if not 0 <= rho < 1:
                raise ValidationError(f"space-saving ratio must lie in [0, 1), got {rho}")
        if self.sample_size < 2:
            raise ValidationError(f"sample size must be at least 2, got {self.sample_size}")
        if self.repetitions < 1:
            raise ValidationError(f"repetitions must be at least 1, got {self.repetitions}")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise ValidationError(
                f"unknown algorithm(s) {', '.join(unknown)}; expected a subset of {', '.join(ALGORITHMS)}"
            )
        if self.workers is not None and self.workers < 1:
            raise ValidationError(f"workers must be at least 1, got {self.workers}")

    def worker_count(self) -> int:
        cap = bench_worker_count()
        return cap if self.workers is None else min(self.workers, cap)


@dataclass(frozen=True)
class BenchRecord:
    dataset: str
    rho: float
    k: int
    algorithm: str
    pair: int
    wall_ns: int
    distance: float
    squared_cost: float
    kappa: Optional[int]
    speedup: float
    error_pct: Optional[float]


class _PairTask(NamedTuple):
    dataset: str
    rho: float
    k: int
    pair: int
    xr: RunLengthEncoding
    yr: RunLengthEncoding
    algorithms: Tuple[str, ...]
    repetitions: int


def _best_of(fn: Callable, repetitions: int):
    best = None
    result = None
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        result = fn()
        elapsed = time.perf_counter_ns() - start
        if best is None or elapsed < best:
            best = elapsed
    return max(best, 1), result


def _measure_pair(task: _PairTask) -> List[BenchRecord]:
    x = decode(task.xr)
    y = decode(task.yr)

    def record(algorithm, wall_ns, distance, squared_cost, kappa=None, error_pct=None):
        return BenchRecord(
            dataset=task.dataset, rho=task.rho, k=task.k, algorithm=algorithm,
            pair=task.pair, wall_ns=wall_ns, distance=distance, squared_cost=squared_cost,
            kappa=kappa, speedup=naive_ns / wall_ns, error_pct=error_pct,
        )

    naive_ns, exact = _best_of(lambda: dtw_naive(x, y), task.repetitions)
    records = [record('naive', naive_ns, exact.distance, exact.squared_cost)]

    if 'boundary' in task.algorithms:
        wall_ns, result = _best_of(lambda: dtw_boundary(task.xr, task.yr), task.repetitions)
        records.append(record('boundary', wall_ns, result.distance, result.squared_cost))

    if 'rledtw' in task.algorithms:
        wall_ns, result = _best_of(lambda: rle_dtw(task.xr, task.yr), task.repetitions)
        records.append(record('rledtw', wall_ns, result.distance, result.squared_cost,
                              kappa=result.kappa))

    if 'bdtw' in task.algorithms:
        wall_ns, bounds = _best_of(lambda: bdtw_bounds(task.xr, task.yr), task.repetitions)
        for name, bound in (('bdtw_lower', bounds.lower), ('bdtw_upper', bounds.upper)):
            error = 100 * abs(exact.distance - bound) / exact.distance if exact.distance > 0 else None
            records.append(record(name, wall_ns, bound, bound * bound, error_pct=error))

    return records


def _sort_key(record: BenchRecord):
    return record.rho, record.pair, RECORD_ALGORITHMS.index(record.algorithm)


def run_sweep(data: Union[Dataset, Sequence[TimeSeries]], cfg: BenchConfig,
              dataset: Optional[str] = None) -> List[BenchRecord]:
    """
    Run the benchmark over all configured ratios.

    Args:
        data: Equal-length series, or a Dataset
        cfg: Sweep configuration
        dataset: Dataset id for the records; defaults to the Dataset's name

    Returns:
        Records sorted by ratio, pair and algorithm
    """
    if not isinstance(data, Dataset):
        data = Dataset(dataset or 'dataset', list(data))
    name = dataset or data.name

    sampled = data.sample(cfg.sample_size, cfg.seed)
    if len(sampled) < 2:
        raise ValidationError(f"need at least 2 series to form pairs, got {len(sampled)}")
    n = sampled.require_equal_length()

    workers = cfg.worker_count()
    pairs = list(combinations(range(len(sampled)), 2))
    logger.info(
        f"Sweeping {name}: {len(sampled)} series of length {n}, {len(pairs)} pairs, "
        f"ratios {list(cfg.ratios)}, {workers} worker(s)"
    )

    records: List[BenchRecord] = []
    for rho in cfg.ratios:
        k = ratio_to_k(n, rho)
        compressed = [apca(ts, k)[1] for ts in sampled.series]
        tasks = [
            _PairTask(name, rho, k, index, compressed[p], compressed[q], cfg.algorithms, cfg.repetitions)
            for index, (p, q) in enumerate(pairs)
        ]

        if workers > 1 and len(tasks) > 1:
            with mp.Pool(processes=min(workers, len(tasks))) as pool:
                batches = pool.map(_measure_pair, tasks)
        else:
            batches = [_measure_pair(task) for task in tasks]

        for batch in batches:
            records.extend(batch)
        logger.info(f"Finished rho={rho} (k={k})")

    records.sort(key=_sort_key)
    return records
