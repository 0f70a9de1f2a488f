"""
Base class and container type for time-series dataset sources.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..exceptions import ValidationError
from ..rle_core import TimeSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Dataset:
    """
    A named collection of series, optionally with class labels.

    Series may differ in length; ``require_equal_length`` enforces the
    UCR convention where needed.
    """

    name: str
    series: List[TimeSeries]
    labels: Optional[List[str]] = None

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != len(self.series):
            raise ValidationError(
                f"dataset {self.name!r} has {len(self.series)} series but {len(self.labels)} labels"
            )

    def __len__(self) -> int:
        return len(self.series)

    @property
    def length(self) -> Optional[int]:
        """Common series length, or None if lengths differ or the dataset is empty."""
        lengths = {len(s) for s in self.series}
        return lengths.pop() if len(lengths) == 1 else None

    def require_equal_length(self) -> int:
        length = self.length
        if length is None:
            raise ValidationError(f"series in dataset {self.name!r} must all have the same length")
        return length

    def sample(self, size: int, seed: int) -> 'Dataset':
        """
        Seeded random subset, original order preserved.

        Args:
            size: Number of series to keep; the whole dataset if larger
            seed: Seed for numpy's default generator

        Returns:
            A new Dataset
        """
        if size >= len(self.series):
            return self
        rng = np.random.default_rng(seed)
        picked = sorted(rng.choice(len(self.series), size=size, replace=False).tolist())
        labels = [self.labels[p] for p in picked] if self.labels is not None else None
        return Dataset(self.name, [self.series[p] for p in picked], labels)


class DataSource(ABC):
    """
    Abstract base class for all dataset sources.

    All dataset sources should inherit from this class and implement the load_data method.
    """

    def __init__(self, name: str):
        """
        Initialize the data source.

        Args:
            name: A descriptive name for the data source
        """
        self.name = name
        self.logger = logger

    @abstractmethod
    def load_data(self, **kwargs) -> Dataset:
        """
        Load a dataset from the source.

        Args:
            **kwargs: Additional parameters specific to the data source

        Returns:
            The loaded Dataset
        """
        pass

    def log_load_attempt(self, **kwargs):
        """
        Log an attempt to load data.

        Args:
            **kwargs: Parameters used for the load attempt
        """
        self.logger.info(f"Loading data from {self.name} with parameters: {kwargs}")

    def log_load_success(self, dataset: Dataset):
        """
        Log a successful load.

        Args:
            dataset: The loaded dataset
        """
        self.logger.info(f"Successfully loaded {len(dataset)} series from {self.name}")

    def log_load_error(self, error: Exception):
        """
        Log an error during a load.

        Args:
            error: The exception that occurred
        """
        self.logger.error(f"Error loading data from {self.name}: {str(error)}")
