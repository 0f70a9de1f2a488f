"""
DP restricted to block boundaries.

Only cells on the top row a_i and the right column b_j of every block are
evaluated. Inside a block the local cost is constant, so a boundary cell is
reached from an earlier boundary cell of the same block by one straight
segment: horizontally along the top row, vertically along the right column,
or diagonally from where its diagonal last crossed a boundary. This touches
O(kn + lm) cells.
"""

import math

from ..block_grid import build_grid
from ..rle_core import RunLengthEncoding
from .naive import DtwResult

INF = math.inf


def dtw_boundary(xr: RunLengthEncoding, yr: RunLengthEncoding) -> DtwResult:
    """
    Exact DTW distance of two canonical run-length encodings.

    Args:
        xr: Encoding of the first series
        yr: Encoding of the second series

    Returns:
        DtwResult with distance and squared cost
    """
    grid = build_grid(xr, yr)
    a, b = grid.a, grid.b
    costs = grid.cost_rows
    k, l, m, n = grid.k, grid.l, grid.m, grid.n

    # rows[i][col]: cost at (a_i, col); cols[j][row]: cost at (row, b_j)
    rows = [[INF] * (n + 1) for _ in range(k + 1)]
    cols = [[INF] * (m + 1) for _ in range(l + 1)]
    rows[0][0] = 0.0
    cols[0][0] = 0.0

    def diagonal_source(row: int, col: int, i: int, j: int):
        # Previous crossing of the diagonal through (row, col) inside block (i, j)
        steps = min(row - a[i - 1], col - b[j - 1])
        if row - steps == a[i - 1]:
            return rows[i - 1][col - steps], steps
        return cols[j - 1][row - steps], steps

    for i in range(1, k + 1):
        a_i, a_prev = a[i], a[i - 1]
        top = rows[i]
        for j in range(1, l + 1):
            b_j, b_prev = b[j], b[j - 1]
            c = costs[i - 1][j - 1]
            right = cols[j]

            for col in range(b_prev + 1, b_j):
                source, steps = diagonal_source(a_i, col, i, j)
                top[col] = min(top[col - 1] + c, source + c * steps if source < INF else INF)

            for row in range(a_prev + 1, a_i):
                source, steps = diagonal_source(row, b_j, i, j)
                right[row] = min(right[row - 1] + c, source + c * steps if source < INF else INF)

            source, steps = diagonal_source(a_i, b_j, i, j)
            corner = min(top[b_j - 1] + c, right[a_i - 1] + c,
                         source + c * steps if source < INF else INF)
            top[b_j] = corner
            right[a_i] = corner

    squared_cost = rows[k][n]
    return DtwResult(math.sqrt(squared_cost), squared_cost)
