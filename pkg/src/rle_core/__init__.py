"""
Time series and run-length encoding value types.
"""

from .series import TimeSeries, RunLengthEncoding, same_value
from .encoding import encode, decode, canonicalize, format_rle, parse_rle, parse_series

__all__ = [
    'TimeSeries', 'RunLengthEncoding', 'same_value',
    'encode', 'decode', 'canonicalize',
    'format_rle', 'parse_rle', 'parse_series',
]
