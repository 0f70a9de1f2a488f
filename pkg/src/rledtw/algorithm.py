"""
Exact DTW on two run-length encodings.

The DTW matrix of x (k runs, length m) and y (l runs, length n) splits into
k*l blocks of constant local cost. Some optimal warping path only moves along
block boundaries (top rows a_i, right columns b_j) and along block diagonals,
the diagonals through block corners (a_i, b_j). It is therefore enough to
know the optimal cost at every cell where a block diagonal crosses a block
boundary. Blocks are visited row by row; every crossing is computed once from
at most four earlier crossings, so the total work is linear in the number of
crossings (kappa).

Diagonals are identified by their integer offset b_j - a_i. For block (i, j)
the diagonals with offsets in (offset(i, j-1), offset(i, j)] cross its top
boundary, the ones in [offset(i, j), offset(i-1, j)) cross its right
boundary, and offset(i, j) itself passes through the corner.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ..block_grid import BlockGrid, build_grid
from ..exceptions import RleDtwError, ValidationError
from ..rle_core import RunLengthEncoding
from .diagonals import INF, Diagonal, DiagonalList, IntersectionEntry

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RleDtwResult:
    """
    Attributes:
        distance: DTW distance, sqrt(squared_cost)
        squared_cost: Sum of squared differences along an optimal path
        kappa: Intersection entries created, including the (0, 0) seed
        k, l, m, n: Coding lengths and series lengths of x and y
        diagonals: Number of block diagonals created
        diagonal_list: The final list, only when requested
    """

    distance: float
    squared_cost: float
    kappa: int
    k: int
    l: int
    m: int
    n: int
    diagonals: int
    diagonal_list: Optional[DiagonalList] = None


def kappa_bounds(k: int, l: int, m: int, n: int) -> Tuple[int, int]:
    """
    Lower and upper bound on the number of intersections.

    Every block corner is an intersection, and there are no more
    intersections than boundary cells, nor more than (k+l)(kl+1).

    Returns:
        A tuple of (k*l, min((k+l)(kl+1), kn + lm - kl))
    """
    return k * l, min((k + l) * (k * l + 1), k * n + l * m - k * l)


def _extend(cost: float, block_cost: float, steps) -> float:
    # Keeps inf * 0 and inf - inf out of the arithmetic
    if cost == INF:
        return INF
    return cost + block_cost * steps


def append_entry(diagonal: Diagonal, i: int, j: int, grid: BlockGrid,
                 diagonals: DiagonalList) -> IntersectionEntry:
    """
    Append the crossing of ``diagonal`` with the boundary of block (i, j).

    The last entry of ``diagonal`` must be its previous crossing, and the
    last entries of its neighbours must be their crossings with the same
    boundary (or anything off that boundary, which is ignored).

    Args:
        diagonal: A diagonal crossing the top or right boundary of block (i, j)
        i: Block row, 1-based
        j: Block column, 1-based
        grid: Block grid of the two series
        diagonals: The list owning ``diagonal``

    Returns:
        The appended entry
    """
    a_i = grid.a[i]
    b_j = grid.b[j]
    c = grid.cost_rows[i - 1][j - 1]
    offset = diagonal.offset
    corner = b_j - a_i
    z_l = diagonal.entries[-1]

    row, col = a_i, b_j
    cost = INF
    if offset <= corner:
        # Top boundary: horizontally from the left neighbour or along the diagonal
        col = a_i + offset
        z = diagonal.prev.entries[-1]
        if z.row == a_i:
            cost = min(cost, _extend(z.cost, c, col - z.col))
        cost = min(cost, _extend(z_l.cost, c, col - z_l.col))
    if offset >= corner:
        # Right boundary: vertically from the right neighbour or along the diagonal
        row = b_j - offset
        z = diagonal.next.entries[-1]
        if z.col == b_j:
            cost = min(cost, _extend(z.cost, c, row - z.row))
        cost = min(cost, _extend(z_l.cost, c, row - z_l.row))

    return diagonals.append(diagonal, IntersectionEntry(row, col, cost))


def trace(diagonal: Diagonal, i: int, j: int, z_p: int, z_n: int,
          grid: BlockGrid, diagonals: DiagonalList) -> float:
    """
    Fill a freshly inserted diagonal with all its crossings up to block (i, j).

    Starting at block (i, j) the diagonal is followed backwards, block by
    block, until it leaves the matrix. At every crossing the cost may come
    horizontally from the left neighbour diagonal (top boundary), vertically
    from the right neighbour diagonal (right boundary) or along the diagonal
    itself from its previous crossing. The backward walk collects the
    neighbour candidates; a forward pass then resolves the diagonal chain
    and appends the entries in increasing row order.

    Args:
        diagonal: The new diagonal, offset == grid.offset(i, j)
        i: Block row, 1-based
        j: Block column, 1-based
        z_p: Index of the last entry of ``diagonal.prev``
        z_n: Index of the last entry of ``diagonal.next``
        grid: Block grid of the two series
        diagonals: The list owning ``diagonal``

    Returns:
        Cost of the corner entry (a_i, b_j)
    """
    prev_entries = diagonal.prev.entries
    next_entries = diagonal.next.entries
    offset = diagonal.offset
    a, b = grid.a, grid.b
    costs = grid.cost_rows

    # (row, col, neighbour cost, block cost, diagonal steps from previous crossing)
    frames = []
    while i >= 1 and j >= 1:
        a_i = a[i]
        b_j = b[j]
        c = costs[i - 1][j - 1]
        corner = b_j - a_i

        # A cursor of -1 means the neighbour has no earlier entry
        while z_p >= 0 and prev_entries[z_p].row > a_i:
            z_p -= 1
        while z_n >= 0 and next_entries[z_n].col > b_j:
            z_n -= 1

        row, col = a_i, b_j
        cost = INF
        if offset <= corner:
            col = a_i + offset
            if z_p >= 0 and prev_entries[z_p].row == a_i:
                z = prev_entries[z_p]
                cost = min(cost, _extend(z.cost, c, col - z.col))
        if offset >= corner:
            row = b_j - offset
            if z_n >= 0 and next_entries[z_n].col == b_j:
                z = next_entries[z_n]
                cost = min(cost, _extend(z.cost, c, row - z.row))

        lower_left = b[j - 1] - a[i - 1]
        if offset > lower_left:
            # Previous crossing is on the top boundary of block (i-1, j)
            steps = row - a[i - 1]
            i -= 1
        elif offset < lower_left:
            # Previous crossing is on the right boundary of block (i, j-1)
            steps = col - b[j - 1]
            j -= 1
        else:
            # Through the lower-left corner, which lies on the matrix border
            steps = row - a[i - 1]
            i = 0
        frames.append((row, col, cost, c, steps))

    cost = INF
    for row, col, neighbour_cost, c, steps in reversed(frames):
        cost = min(neighbour_cost, _extend(cost, c, steps))
        diagonals.append(diagonal, IntersectionEntry(row, col, cost))
    return cost


def rle_dtw(xr: RunLengthEncoding, yr: RunLengthEncoding,
            keep_diagonals: bool = False) -> RleDtwResult:
    """
    Exact DTW distance of two canonical run-length encodings.

    Args:
        xr: Encoding of the first series
        yr: Encoding of the second series
        keep_diagonals: Attach the final DiagonalList to the result

    Returns:
        RleDtwResult with distance, squared cost and the intersection count
    """
    grid = build_grid(xr, yr)
    k, l = grid.k, grid.l

    diagonals = DiagonalList()
    origin = diagonals.insert_before(diagonals.tail, 0)
    diagonals.append(origin, IntersectionEntry(0, 0, 0.0))

    last = None
    for i in range(1, k + 1):
        current = diagonals.head
        for j in range(1, l + 1):
            if current.offset <= grid.offset(i, j - 1):
                current = current.next
            corner = grid.offset(i, j)

            # Top boundary, left to right
            while current.offset < corner:
                append_entry(current, i, j, grid, diagonals)
                current = current.next

            # Right boundary, top to bottom
            upper = grid.offset(i - 1, j)
            right = current
            while right.offset < upper:
                right = right.next
            right = right.prev
            while right.offset > corner:
                append_entry(right, i, j, grid, diagonals)
                right = right.prev

            if current.offset > corner:
                fresh = diagonals.insert_before(current, corner)
                trace(fresh, i, j, len(fresh.prev.entries) - 1,
                      len(current.entries) - 1, grid, diagonals)
                last = fresh.entries[-1]
            else:
                last = append_entry(current, i, j, grid, diagonals)

    if last is None or (last.row, last.col) != (grid.m, grid.n):
        raise ValidationError("run-length encodings produced no corner entry")
    if math.isinf(last.cost):
        logger.error(f"Corner ({grid.m}, {grid.n}) unreachable; diagonal bookkeeping is inconsistent")
        raise RleDtwError(f"corner ({grid.m}, {grid.n}) is unreachable")

    squared_cost = last.cost
    logger.debug(f"rle_dtw k={k} l={l} m={grid.m} n={grid.n} kappa={diagonals.entries_created}")
    return RleDtwResult(
        distance=math.sqrt(squared_cost),
        squared_cost=squared_cost,
        kappa=diagonals.entries_created,
        k=k,
        l=l,
        m=grid.m,
        n=grid.n,
        diagonals=len(diagonals),
        diagonal_list=diagonals if keep_diagonals else None,
    )
