"""
Block-level DTW heuristic: every block is crossed at a fixed weight.

Weighting block (i, j) by max(m_i, n_j) gives an upper bound on the DTW
distance, min(m_i, n_j) a lower bound; both are exact when all blocks are
squares.
"""

import math
from typing import NamedTuple

from ..block_grid import build_grid
from ..rle_core import RunLengthEncoding

INF = math.inf


class BdtwBounds(NamedTuple):
    lower: float
    upper: float


def bdtw_bounds(xr: RunLengthEncoding, yr: RunLengthEncoding) -> BdtwBounds:
    """
    Lower and upper BDTW bounds of two canonical run-length encodings.

    Args:
        xr: Encoding of the first series
        yr: Encoding of the second series

    Returns:
        BdtwBounds, both as distances (square roots of the block DP costs)
    """
    grid = build_grid(xr, yr)
    costs = grid.cost_rows
    x_lengths = xr.lengths.tolist()
    y_lengths = yr.lengths.tolist()
    k, l = grid.k, grid.l

    upper_prev = [0.0] + [INF] * l
    lower_prev = [0.0] + [INF] * l
    for i in range(1, k + 1):
        upper_row = [INF] * (l + 1)
        lower_row = [INF] * (l + 1)
        m_i = x_lengths[i - 1]
        for j in range(1, l + 1):
            c = costs[i - 1][j - 1]
            n_j = y_lengths[j - 1]
            upper_row[j] = max(m_i, n_j) * c + min(upper_prev[j - 1], upper_prev[j], upper_row[j - 1])
            lower_row[j] = min(m_i, n_j) * c + min(lower_prev[j - 1], lower_prev[j], lower_row[j - 1])
        upper_prev = upper_row
        lower_prev = lower_row

    return BdtwBounds(lower=math.sqrt(lower_prev[l]), upper=math.sqrt(upper_prev[l]))
