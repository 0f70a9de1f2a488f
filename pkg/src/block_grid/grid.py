"""
Cumulative run boundaries and per-block local costs.

Run i of x and run j of y span the block [a[i-1]+1, a[i]] x [b[j-1]+1, b[j]]
of the DTW matrix, and every cell in it has the same local cost.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Tuple

import numpy as np

from ..exceptions import ValidationError
from ..rle_core import RunLengthEncoding


@dataclass(frozen=True, eq=False)
class BlockGrid:
    """
    Attributes:
        a: Row boundaries a_0 = 0 < a_1 < ... < a_k = m
        b: Column boundaries b_0 = 0 < b_1 < ... < b_l = n
        cost: k x l read-only array, cost[i-1, j-1] = (x_i - y_j)^2
        x_values: Run values of x
        y_values: Run values of y
    """

    a: Tuple[int, ...]
    b: Tuple[int, ...]
    cost: np.ndarray
    x_values: Tuple[float, ...]
    y_values: Tuple[float, ...]

    @property
    def k(self) -> int:
        return len(self.a) - 1

    @property
    def l(self) -> int:
        return len(self.b) - 1

    @property
    def m(self) -> int:
        return self.a[-1]

    @property
    def n(self) -> int:
        return self.b[-1]

    def block_cost(self, i: int, j: int) -> float:
        """Local cost of block (i, j), 1-based."""
        return float(self.cost[i - 1, j - 1])

    def offset(self, i: int, j: int) -> int:
        """Offset b_j - a_i of the diagonal through the upper-right corner of block (i, j)."""
        return self.b[j] - self.a[i]

    @cached_property
    def cost_rows(self) -> List[List[float]]:
        """The cost table as nested Python lists, for tight loops."""
        return self.cost.tolist()


def build_grid(xr: RunLengthEncoding, yr: RunLengthEncoding) -> BlockGrid:
    """
    Build the block grid of two canonical run-length encodings.

    Args:
        xr: Encoding of the row series
        yr: Encoding of the column series

    Returns:
        The BlockGrid
    """
    for name, rle in (('x', xr), ('y', yr)):
        if not rle.is_canonical:
            raise ValidationError(f"run-length encoding of {name} must be canonical")

    a = (0,) + tuple(int(v) for v in np.cumsum(xr.lengths))
    b = (0,) + tuple(int(v) for v in np.cumsum(yr.lengths))
    x_values = xr.values
    y_values = yr.values
    cost = np.square(x_values[:, None] - y_values[None, :])
    cost.setflags(write=False)

    return BlockGrid(
        a=a,
        b=b,
        cost=cost,
        x_values=tuple(x_values.tolist()),
        y_values=tuple(y_values.tolist()),
    )
