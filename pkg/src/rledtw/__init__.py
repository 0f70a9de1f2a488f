"""
Exact DTW on run-length encoded series, in time linear in the number of
block-boundary / block-diagonal intersections.
"""

from .diagonals import IntersectionEntry, Diagonal, DiagonalList
from .algorithm import RleDtwResult, rle_dtw, append_entry, trace, kappa_bounds

__all__ = [
    'IntersectionEntry', 'Diagonal', 'DiagonalList',
    'RleDtwResult', 'rle_dtw', 'append_entry', 'trace', 'kappa_bounds',
]
