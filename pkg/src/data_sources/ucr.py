"""
Reader and writer for UCR archive style files.

One series per line, fields separated by tabs, commas or whitespace, the
first field being the class label.
"""

import logging
from pathlib import Path
from typing import List, Union

from ..exceptions import ParseError
from ..rle_core.encoding import TOO_MANY_FIELDS, read_raw_table, row_fields, series_from_fields
from .base import DataSource, Dataset

logger = logging.getLogger(__name__)


class UcrFile(DataSource):
    """
    Data source for a single UCR-format file.
    """

    def __init__(self, path: Union[str, Path], labeled: bool = True):
        """
        Initialize the file source.

        Args:
            path: File to read
            labeled: Whether the first field of every line is a class label
        """
        self.path = Path(path)
        self.labeled = labeled
        super().__init__(name=self.path.stem)

    def load_data(self) -> Dataset:
        """
        Read every non-empty line as one series.

        Lines whose field count differs from the first line are skipped
        with a warning.

        Returns:
            The Dataset, labels included when ``labeled``
        """
        self.log_load_attempt(path=str(self.path), labeled=self.labeled)

        try:
            table = read_raw_table(self.path)
        except OSError as e:
            self.log_load_error(e)
            raise

        expected_fields = table.shape[1]
        series = []
        labels = []
        for position, row in enumerate(table.itertuples(index=False, name=None)):
            number = position + 1
            fields = row_fields(row)
            if not fields:
                continue
            if fields[0] == TOO_MANY_FIELDS:
                self.logger.warning(
                    f"{self.path}:{number}: more than {expected_fields} fields; line skipped"
                )
                continue
            if len(fields) != expected_fields:
                self.logger.warning(
                    f"{self.path}:{number}: expected {expected_fields} fields, found {len(fields)}; line skipped"
                )
                continue

            label, ts = series_from_fields(fields, labeled=self.labeled, line=number)
            series.append(ts)
            labels.append(label)

        if not series:
            error = ParseError(f"no series in {self.path}")
            self.log_load_error(error)
            raise error

        dataset = Dataset(self.name, series, labels if self.labeled else None)
        self.log_load_success(dataset)
        return dataset


def load_ucr(path: Union[str, Path], labeled: bool = True) -> Dataset:
    """
    Load a UCR-format dataset.

    Args:
        path: File to read
        labeled: Whether the first field of every line is a class label

    Returns:
        The Dataset
    """
    return UcrFile(path, labeled=labeled).load_data()


def format_ucr_lines(dataset: Dataset) -> List[str]:
    """Tab-separated lines, label first; series without a label get "1"."""
    labels = dataset.labels or ['1'] * len(dataset.series)
    return [
        '\t'.join([label or '1'] + [repr(v) for v in ts])
        for label, ts in zip(labels, dataset.series)
    ]


def write_ucr(dataset: Dataset, path: Union[str, Path]) -> Path:
    """
    Write a dataset as tab-separated lines, label first.

    Values use Python's shortest round-trip representation.

    Args:
        dataset: Series to write
        path: Destination file

    Returns:
        The path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        for line in format_ucr_lines(dataset):
            f.write(line + '\n')
    logger.info(f"Wrote {len(dataset.series)} series to {path}")
    return path
