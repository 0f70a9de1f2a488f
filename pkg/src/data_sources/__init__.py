"""
Dataset sources: UCR-format files and synthetic generators.
"""

from .base import DataSource, Dataset
from .ucr import UcrFile, format_ucr_lines, load_ucr, write_ucr
from .synthetic import SyntheticSource, staircase, random_walk_apca

__all__ = [
    'DataSource', 'Dataset', 'UcrFile', 'format_ucr_lines', 'load_ucr', 'write_ucr',
    'SyntheticSource', 'staircase', 'random_walk_apca',
]
