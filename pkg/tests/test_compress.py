from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.compress import apca, ratio_to_k, segment_cost
from src.exceptions import ValidationError
from src.rle_core import TimeSeries, decode, encode

small_series = st.lists(st.integers(min_value=0, max_value=9).map(float), min_size=1, max_size=12)


def brute_force_sse(values, k):
    n = len(values)
    best = np.inf
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        sse = sum(float(np.sum((values[s:e] - values[s:e].mean()) ** 2)) for s, e in zip(bounds[:-1], bounds[1:]))
        best = min(best, sse)
    return best


def test_two_runs_are_recovered():
    segmentation, encoded = apca(TimeSeries([1, 1, 5, 5]), 2)
    assert segmentation.breakpoints == (0, 2, 4)
    assert segmentation.levels == (1.0, 5.0)
    assert segmentation.sse == 0.0
    assert encoded.runs == ((1.0, 2), (5.0, 2))


def test_single_segment_is_the_mean():
    segmentation, encoded = apca(TimeSeries([0, 0, 0, 10]), 1)
    assert segmentation.levels == (2.5,)
    assert segmentation.sse == pytest.approx(75.0)
    assert encoded.runs == ((2.5, 4),)


def test_segments_sharing_a_mean_are_merged():
    segmentation, encoded = apca(TimeSeries([3, 3, 3]), 3)
    assert segmentation.k == 3
    assert encoded.coding_length == 1
    assert encoded.total_length == 3


@pytest.mark.parametrize("k", [0, 5])
def test_segment_count_out_of_range(k):
    with pytest.raises(ValidationError):
        apca(TimeSeries([1, 2, 3, 4]), k)


@pytest.mark.parametrize("n, rho, expected", [
    (1024, 0.9, 102),
    (1000, 0.99, 10),
    (100, 0.999, 1),
    (10, 0.0, 10),
    (10, 0.25, 8),
])
def test_ratio_to_k(n, rho, expected):
    assert ratio_to_k(n, rho) == expected


@pytest.mark.parametrize("rho", [-0.1, 1.0, 1.5])
def test_ratio_out_of_range(rho):
    with pytest.raises(ValidationError):
        ratio_to_k(100, rho)


def test_matches_exhaustive_search():
    rng = np.random.default_rng(7)
    for _ in range(50):
        n = int(rng.integers(1, 13))
        values = rng.uniform(-10, 10, size=n)
        for k in range(1, min(4, n) + 1):
            segmentation, _ = apca(TimeSeries(values), k)
            assert segmentation.sse == pytest.approx(brute_force_sse(values, k), rel=1e-9, abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(small_series)
def test_sse_is_monotone_in_k(values):
    sse = [apca(TimeSeries(values), k)[0].sse for k in range(1, len(values) + 1)]
    for coarse, fine in zip(sse, sse[1:]):
        assert fine <= coarse + 1e-9
    assert sse[-1] == 0.0


@settings(max_examples=100, deadline=None)
@given(small_series)
def test_coding_length_segments_are_lossless(values):
    ts = TimeSeries(values)
    k = encode(ts).coding_length
    segmentation, encoded = apca(ts, k)
    assert segmentation.sse == 0.0
    assert decode(encoded) == ts


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(min_value=-100, max_value=100), min_size=1, max_size=30), st.data())
def test_segment_cost_matches_direct_sum(values, data):
    x = np.asarray(values)
    prefix = np.concatenate(([0.0], np.cumsum(x)))
    prefix_sq = np.concatenate(([0.0], np.cumsum(x * x)))
    t = data.draw(st.integers(0, len(values) - 1))
    i = data.draw(st.integers(t + 1, len(values)))
    segment = x[t:i]
    direct = float(np.sum((segment - segment.mean()) ** 2))
    assert segment_cost(prefix, prefix_sq, t, i) == pytest.approx(direct, rel=1e-9, abs=1e-6)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(min_value=-100, max_value=100), min_size=1, max_size=15))
def test_segment_cost_grid_matches_direct_sums(values):
    x = np.asarray(values)
    n = x.size
    prefix = np.concatenate(([0.0], np.cumsum(x)))
    prefix_sq = np.concatenate(([0.0], np.cumsum(x * x)))
    grid = segment_cost(prefix, prefix_sq, np.arange(n + 1)[:, None], np.arange(n + 1)[None, :])
    assert grid.shape == (n + 1, n + 1)
    for t in range(n + 1):
        for i in range(n + 1):
            if i <= t:
                assert grid[t, i] == np.inf
            else:
                segment = x[t:i]
                direct = float(np.sum((segment - segment.mean()) ** 2))
                assert grid[t, i] == pytest.approx(direct, rel=1e-9, abs=1e-6)
                assert grid[t, i] == segment_cost(prefix, prefix_sq, t, i)


def test_segment_cost_of_empty_segment_is_infinite():
    prefix = np.array([0.0, 1.0])
    assert segment_cost(prefix, prefix, 1, 1) == float('inf')
