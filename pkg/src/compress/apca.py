"""
Adaptive piecewise constant approximation (APCA).

The best k-segment approximation under squared error is found with the
O(n^2 k) dynamic program E[j][i] = min_t E[j-1][t] + S(t, i), where S(t, i)
is the squared deviation of x[t:i] from its mean, taken from prefix sums.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from ..exceptions import ValidationError
from ..rle_core import RunLengthEncoding, TimeSeries, canonicalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Segmentation:
    """
    Attributes:
        breakpoints: 0 = t_0 < t_1 < ... < t_k = n; segment s covers x[t_{s-1}:t_s]
        levels: Mean of every segment
        sse: Total squared deviation of the series from its levels
    """

    breakpoints: Tuple[int, ...]
    levels: Tuple[float, ...]
    sse: float

    @property
    def k(self) -> int:
        return len(self.levels)

    def to_rle(self) -> RunLengthEncoding:
        """Canonical encoding of the approximation; may have fewer than k runs."""
        lengths = np.diff(self.breakpoints).tolist()
        return canonicalize(RunLengthEncoding(tuple(zip(self.levels, lengths))))


def ratio_to_k(n: int, rho: float) -> int:
    """
    Coding length for a space-saving ratio rho = 1 - k/n.

    Args:
        n: Series length
        rho: Ratio in [0, 1)

    Returns:
        max(1, n(1 - rho) rounded half up)
    """
    if n < 1:
        raise ValidationError(f"series length must be positive, got {n}")
    if not 0 <= rho < 1:
        raise ValidationError(f"space-saving ratio must lie in [0, 1), got {rho}")
    return max(1, min(n, int(math.floor(n * (1 - rho) + 0.5))))


def segment_cost(prefix: np.ndarray, prefix_sq: np.ndarray,
                 t: Union[int, np.ndarray], i: Union[int, np.ndarray]) -> Union[float, np.ndarray]:
    """
    Squared deviation from the mean of x[t:i], from prefix sums.

    ``t`` and ``i`` broadcast against each other, so index grids give the
    whole cost matrix at once. Empty or reversed segments (i <= t) cost inf.

    Args:
        prefix: prefix[p] = sum(x[:p])
        prefix_sq: prefix_sq[p] = sum(x[:p] ** 2)
        t: Segment start, exclusive of earlier points
        i: Segment end, exclusive

    Returns:
        The non-negative segment cost, a float for scalar indices
    """
    t = np.asarray(t)
    i = np.asarray(i)
    length = i - t
    total = prefix[i] - prefix[t]
    with np.errstate(divide='ignore', invalid='ignore'):
        cost = np.maximum(prefix_sq[i] - prefix_sq[t] - total * total / length, 0.0)
    cost = np.where(length > 0, cost, np.inf)
    return float(cost) if cost.ndim == 0 else cost


def _segment_cost_matrix(values: np.ndarray) -> np.ndarray:
    n = values.size
    prefix = np.concatenate(([0.0], np.cumsum(values)))
    prefix_sq = np.concatenate(([0.0], np.cumsum(values * values)))
    return segment_cost(prefix, prefix_sq, np.arange(n + 1)[:, None], np.arange(n + 1)[None, :])


def apca(ts: TimeSeries, k: int) -> Tuple[Segmentation, RunLengthEncoding]:
    """
    Optimal k-segment piecewise constant approximation.

    Ties go to the shorter last segment.

    Args:
        ts: Series to compress
        k: Number of segments, 1 <= k <= len(ts)

    Returns:
        A tuple of (segmentation, canonical run-length encoding)
    """
    values = ts.values
    n = values.size
    if not 1 <= k <= n:
        raise ValidationError(f"segment count must lie in [1, {n}], got {k}")

    cost = _segment_cost_matrix(values)

    # best[i]: minimum error of x[:i] with the current number of segments
    best = cost[0].copy()
    choices = np.zeros((k + 1, n + 1), dtype=np.int64)
    for segments in range(2, k + 1):
        candidates = best[:, None] + cost
        # Reversed rows so argmin picks the largest start among equal minima
        last_start = n - np.argmin(candidates[::-1], axis=0)
        best = candidates[last_start, np.arange(n + 1)]
        choices[segments] = last_start

    breakpoints = [n]
    end = n
    for segments in range(k, 1, -1):
        end = int(choices[segments, end])
        breakpoints.append(end)
    breakpoints.append(0)
    breakpoints.reverse()

    levels = []
    sse = 0.0
    for start, stop in zip(breakpoints[:-1], breakpoints[1:]):
        segment = values[start:stop]
        # A constant segment keeps its value bit for bit
        level = float(segment[0]) if segment.min() == segment.max() else float(segment.mean())
        levels.append(level)
        sse += float(np.sum((segment - level) ** 2))

    segmentation = Segmentation(tuple(breakpoints), tuple(levels), sse)
    return segmentation, segmentation.to_rle()
