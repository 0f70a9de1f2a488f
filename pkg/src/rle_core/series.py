"""
Immutable value types for raw and run-length encoded time series.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

import numpy as np

from ..exceptions import ValidationError

Run = Tuple[float, int]


def same_value(a: float, b: float) -> bool:
    """Bitwise equality of two finite floats; 0.0 and -0.0 differ."""
    return a == b and math.copysign(1.0, a) == math.copysign(1.0, b)


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """
    A finite, nonempty sequence of finite reals.

    The values are held in a read-only float64 array.
    """

    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64).reshape(-1)
        if values.size == 0:
            raise ValidationError("time series must contain at least one value")
        if not np.all(np.isfinite(values)):
            raise ValidationError("time series values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    def __len__(self) -> int:
        return int(self.values.size)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash(self.values.tobytes())

    def __repr__(self) -> str:
        return f"TimeSeries({self.values.tolist()!r})"


@dataclass(frozen=True)
class RunLengthEncoding:
    """
    A sequence of (value, length) runs.

    Runs are validated on construction (finite values, lengths >= 1) but not
    merged; use ``canonicalize`` for the canonical form.
    """

    runs: Tuple[Run, ...]

    def __post_init__(self):
        runs = tuple((float(v), _run_length(l)) for v, l in self.runs)
        if not runs:
            raise ValidationError("run-length encoding must contain at least one run")
        for value, length in runs:
            if not math.isfinite(value):
                raise ValidationError(f"run value must be finite, got {value!r}")
            if length < 1:
                raise ValidationError(f"run length must be positive, got {length}")
        object.__setattr__(self, 'runs', runs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence]) -> 'RunLengthEncoding':
        return cls(tuple((v, l) for v, l in pairs))

    @property
    def values(self) -> np.ndarray:
        return np.array([v for v, _ in self.runs], dtype=np.float64)

    @property
    def lengths(self) -> np.ndarray:
        return np.array([l for _, l in self.runs], dtype=np.int64)

    @property
    def total_length(self) -> int:
        return sum(l for _, l in self.runs)

    @property
    def coding_length(self) -> int:
        return len(self.runs)

    @property
    def is_canonical(self) -> bool:
        return not any(same_value(self.runs[r][0], self.runs[r + 1][0]) for r in range(len(self.runs) - 1))

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self) -> Iterator[Run]:
        return iter(self.runs)


def _run_length(length) -> int:
    """Run lengths must be integral; 3.0 is accepted, 2.5 is not."""
    if isinstance(length, bool):
        raise ValidationError(f"run length must be an integer, got {length!r}")
    try:
        as_int = int(length)
    except (TypeError, ValueError):
        raise ValidationError(f"run length must be an integer, got {length!r}")
    if as_int != length:
        raise ValidationError(f"run length must be an integer, got {length!r}")
    return as_int
