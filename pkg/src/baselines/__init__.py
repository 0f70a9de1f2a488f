"""
Reference DTW algorithms: the quadratic DP oracle, the block-boundary DP
and the block-level BDTW bounds.
"""

from .naive import DtwResult, dtw_naive, dtw_naive_table
from .boundary import dtw_boundary
from .bdtw import BdtwBounds, bdtw_bounds

__all__ = [
    'DtwResult', 'dtw_naive', 'dtw_naive_table',
    'dtw_boundary', 'BdtwBounds', 'bdtw_bounds',
]
