"""
Conversions between raw series and run-length encodings, plus their text formats.

RLE text format, one series per line: ``v1:l1 v2:l2 ...`` with values in
shortest round-trip decimal. Raw format: tab, comma or blank separated reals,
optionally preceded by a class label.
"""

import io
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np
import pandas as pd

from ..exceptions import ParseError
from .series import RunLengthEncoding, TimeSeries, same_value

# pandas strips every line before splitting on this pattern
RAW_DELIMITER = r'\s*,\s*|\s+'

# First field of a row whose line had more fields than the first line
TOO_MANY_FIELDS = '\x00too-many-fields'


def encode(ts: TimeSeries) -> RunLengthEncoding:
    """
    Encode a series into its canonical (minimal) run-length encoding.

    Args:
        ts: The raw series

    Returns:
        The canonical RunLengthEncoding
    """
    values = ts.values
    # Positions where a new run starts; bit patterns, so 0.0 and -0.0 differ
    bits = values.view(np.int64)
    starts = np.flatnonzero(np.concatenate(([True], bits[1:] != bits[:-1])))
    ends = np.append(starts[1:], values.size)
    return RunLengthEncoding(tuple(
        (float(values[s]), int(e - s)) for s, e in zip(starts, ends)
    ))


def decode(rle: RunLengthEncoding) -> TimeSeries:
    """Expand every run; canonical form is not required."""
    return TimeSeries(np.repeat(rle.values, rle.lengths))


def canonicalize(rle: RunLengthEncoding) -> RunLengthEncoding:
    """Merge adjacent runs with bitwise equal values."""
    merged: List[List] = []
    for value, length in rle.runs:
        if merged and same_value(merged[-1][0], value):
            merged[-1][1] += length
        else:
            merged.append([value, length])
    return RunLengthEncoding(tuple((v, l) for v, l in merged))


def format_rle(rle: RunLengthEncoding) -> str:
    return ' '.join(f"{value!r}:{length}" for value, length in rle.runs)


def parse_rle(text: str, line: Optional[int] = None) -> RunLengthEncoding:
    """
    Parse one line of the RLE text format.

    Args:
        text: Tokens of the form ``value:length``
        line: Line number to report in errors

    Returns:
        The (not necessarily canonical) RunLengthEncoding
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty run-length encoding", line)

    runs = []
    for token in tokens:
        value_text, sep, length_text = token.rpartition(':')
        if not sep:
            raise ParseError(f"expected value:length, got {token!r}", line)
        try:
            value = float(value_text)
            length = int(length_text)
        except ValueError:
            raise ParseError(f"malformed run {token!r}", line)
        runs.append((value, length))

    try:
        return RunLengthEncoding(tuple(runs))
    except ValueError as e:
        raise ParseError(str(e), line)


def _mark_too_many_fields(fields: List[str]) -> List[str]:
    # Keeps the row, and so the row index, of an over-long line
    return [TOO_MANY_FIELDS]


def read_raw_table(source: Union[str, Path, TextIO]) -> pd.DataFrame:
    """
    Read raw-format lines into a frame of strings.

    Row r holds line r + 1: blank lines become all-NaN rows, lines shorter
    than the first line are padded with NaN, and lines longer than the
    first line are reduced to a single ``TOO_MANY_FIELDS`` field.

    Args:
        source: File path or open text stream

    Returns:
        The DataFrame; empty if the source has no fields at all
    """
    try:
        return pd.read_csv(
            source,
            sep=RAW_DELIMITER,
            engine='python',
            header=None,
            dtype=str,
            keep_default_na=False,
            na_values=[''],
            skip_blank_lines=False,
            on_bad_lines=_mark_too_many_fields,
        )
    except pd.errors.EmptyDataError:
        return pd.DataFrame()


def row_fields(row: Sequence) -> List[str]:
    """The present fields of a ``read_raw_table`` row."""
    return [field for field in row if isinstance(field, str)]


def series_from_fields(fields: Sequence[str], labeled: bool = False,
                       line: Optional[int] = None) -> Tuple[Optional[str], TimeSeries]:
    """
    Convert the fields of one raw-format line.

    Args:
        fields: Field strings, label first when ``labeled``
        labeled: Whether the first field is a class label
        line: Line number to report in errors

    Returns:
        A tuple of (label or None, series)
    """
    fields = list(fields)
    label = None
    if labeled:
        if len(fields) < 2:
            raise ParseError("a labeled line needs a label and at least one value", line)
        label, fields = fields[0], fields[1:]
    if not fields:
        raise ParseError("no values", line)

    values = pd.to_numeric(pd.Series(fields, dtype=object), errors='coerce').to_numpy(dtype=np.float64)
    bad = [field for field, value in zip(fields, values) if np.isnan(value)]
    if bad:
        raise ParseError(f"non-numeric value {bad[0]!r}", line)
    try:
        return label, TimeSeries(values)
    except ValueError as e:
        raise ParseError(str(e), line)


def parse_series(text: str, labeled: bool = False,
                 line: Optional[int] = None) -> Tuple[Optional[str], TimeSeries]:
    """
    Parse one line of the raw series format.

    Args:
        text: Tab, comma or blank separated fields
        labeled: Whether the first field is a class label
        line: Line number to report in errors

    Returns:
        A tuple of (label or None, series)
    """
    table = read_raw_table(io.StringIO(text.strip()))
    fields = row_fields(table.iloc[0]) if len(table) else []
    return series_from_fields(fields, labeled=labeled, line=line)
