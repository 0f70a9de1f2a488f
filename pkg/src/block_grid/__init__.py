"""
Block decomposition of the DTW matrix of two run-length encodings.
"""

from .grid import BlockGrid, build_grid

__all__ = ['BlockGrid', 'build_grid']
