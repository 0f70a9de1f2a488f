"""
Quadratic dynamic program over the full DTW matrix.
"""

import math
from typing import NamedTuple

import numpy as np

from ..rle_core import TimeSeries

INF = math.inf


class DtwResult(NamedTuple):
    distance: float
    squared_cost: float


def dtw_naive(x: TimeSeries, y: TimeSeries) -> DtwResult:
    """
    DTW distance with squared local cost, two rows of the table at a time.

    D[i, j] = (x_i - y_j)^2 + min(D[i-1, j-1], D[i-1, j], D[i, j-1]),
    D[0, 0] = 0 and the rest of row and column 0 is infinite.

    Args:
        x: First series
        y: Second series

    Returns:
        DtwResult with sqrt(D[m, n]) and D[m, n]
    """
    xs = x.values.tolist()
    ys = y.values.tolist()
    n = len(ys)

    previous = [0.0] + [INF] * n
    for xi in xs:
        current = [INF] * (n + 1)
        left = INF
        for j in range(1, n + 1):
            d = xi - ys[j - 1]
            diag = previous[j - 1]
            up = previous[j]
            best = diag
            if up < best:
                best = up
            if left < best:
                best = left
            left = d * d + best
            current[j] = left
        previous = current

    squared_cost = previous[n]
    return DtwResult(math.sqrt(squared_cost), squared_cost)


def dtw_naive_table(x: TimeSeries, y: TimeSeries) -> np.ndarray:
    """
    The full (m+1) x (n+1) DP table, row and column 0 included.

    Args:
        x: First series
        y: Second series

    Returns:
        Array D with D[i, j] the cost of an optimal path from (1, 1) to (i, j)
    """
    xs = x.values.tolist()
    ys = y.values.tolist()
    m, n = len(xs), len(ys)

    table = np.full((m + 1, n + 1), INF)
    table[0, 0] = 0.0
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            d = xs[i - 1] - ys[j - 1]
            table[i, j] = d * d + min(table[i - 1, j - 1], table[i - 1, j], table[i, j - 1])
    return table
