"""
Synthetic piecewise constant datasets.
"""

import numpy as np

from ..compress import apca
from ..exceptions import ValidationError
from ..rle_core import TimeSeries, decode
from .base import DataSource, Dataset

KINDS = ('staircase', 'randomwalk-then-apca')


class SyntheticSource(DataSource):
    """
    Seeded generator of staircase and compressed random-walk series.

    Both kinds produce series of length ``n`` with at most ``runs`` runs.
    """

    def __init__(self, kind: str, seed: int = 0):
        """
        Initialize the generator.

        Args:
            kind: 'staircase' or 'randomwalk-then-apca'
            seed: Seed for numpy's default generator
        """
        if kind not in KINDS:
            raise ValidationError(f"unknown synthetic kind {kind!r}; expected one of {', '.join(KINDS)}")
        super().__init__(name=f"synthetic-{kind}")
        self.kind = kind
        self.seed = seed

    def load_data(self, n: int, runs: int, count: int) -> Dataset:
        """
        Generate ``count`` series.

        Args:
            n: Series length
            runs: Number of constant segments, 1 <= runs <= n
            count: Number of series

        Returns:
            The Dataset, every label "1"
        """
        if not 1 <= runs <= n:
            raise ValidationError(f"need n >= runs >= 1, got n={n}, runs={runs}")
        if count < 1:
            raise ValidationError(f"count must be positive, got {count}")
        self.log_load_attempt(kind=self.kind, n=n, runs=runs, count=count, seed=self.seed)

        rng = np.random.default_rng(self.seed)
        make = self._staircase if self.kind == 'staircase' else self._random_walk
        series = [make(rng, n, runs) for _ in range(count)]

        dataset = Dataset(self.name, series, ['1'] * count)
        self.log_load_success(dataset)
        return dataset

    @staticmethod
    def _staircase(rng: np.random.Generator, n: int, runs: int) -> TimeSeries:
        # runs - 1 distinct cut points in 1..n-1
        cuts = np.sort(rng.choice(np.arange(1, n), size=runs - 1, replace=False)) if runs > 1 else []
        bounds = np.concatenate(([0], cuts, [n])).astype(np.int64)
        levels = rng.integers(0, 10, size=runs).astype(np.float64)
        return TimeSeries(np.repeat(levels, np.diff(bounds)))

    @staticmethod
    def _random_walk(rng: np.random.Generator, n: int, runs: int) -> TimeSeries:
        walk = TimeSeries(np.cumsum(rng.standard_normal(n)))
        _, rle = apca(walk, runs)
        return decode(rle)


def staircase(n: int, runs: int, count: int, seed: int = 0) -> Dataset:
    return SyntheticSource('staircase', seed).load_data(n=n, runs=runs, count=count)


def random_walk_apca(n: int, runs: int, count: int, seed: int = 0) -> Dataset:
    return SyntheticSource('randomwalk-then-apca', seed).load_data(n=n, runs=runs, count=count)
