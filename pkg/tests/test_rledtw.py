import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.baselines import bdtw_bounds, dtw_naive, dtw_naive_table
from src.block_grid import build_grid
from src.exceptions import RleDtwError, ValidationError
from src.rle_core import RunLengthEncoding, decode
from src.rledtw import DiagonalList, IntersectionEntry, append_entry, kappa_bounds, rle_dtw, trace
from strategies import real_values, rles, square_rle


def rle(*runs):
    return RunLengthEncoding(tuple(runs))


def test_reference_pair_matches_golden_and_oracle(pair_x, pair_y, golden):
    result = rle_dtw(pair_x, pair_y)
    assert result.squared_cost == float(golden('pair_squared_cost.txt'))
    assert result.squared_cost == dtw_naive(decode(pair_x), decode(pair_y)).squared_cost
    assert result.distance == math.sqrt(result.squared_cost)
    assert (result.k, result.l, result.m, result.n) == (3, 4, 16, 17)


def test_reference_pair_first_entry_on_main_diagonal(pair_x, pair_y):
    result = rle_dtw(pair_x, pair_y, keep_diagonals=True)
    main = result.diagonal_list.find(0)
    assert main.entries[0] == IntersectionEntry(0, 0, 0.0)
    assert main.entries[1] == IntersectionEntry(2, 2, 2.0)


def test_identical_single_block():
    result = rle_dtw(rle((4, 7)), rle((4, 7)))
    assert result.distance == 0.0
    # the (0, 0) seed and the corner
    assert result.kappa == 2


def test_single_cell():
    result = rle_dtw(rle((0, 1)), rle((1, 1)))
    assert result.squared_cost == 1.0
    assert result.distance == 1.0


def test_square_blocks_example():
    xr = rle((0, 3), (1, 3))
    yr = rle((1, 3), (0, 3))
    result = rle_dtw(xr, yr)
    assert result.squared_cost == dtw_naive(decode(xr), decode(yr)).squared_cost == 6.0


@pytest.mark.parametrize("xr, yr, expected", [
    (rle((0, 1)), rle((1, 2)), 2.0),
    (rle((0, 3)), rle((1, 1)), 3.0),
    (rle((0, 1), (1, 1)), rle((1, 1), (0, 1)), 2.0),
    (rle((0, 1), (1, 3)), rle((0, 3), (1, 1)), 0.0),
])
def test_small_instances(xr, yr, expected):
    assert rle_dtw(xr, yr).squared_cost == expected
    assert dtw_naive(decode(xr), decode(yr)).squared_cost == expected


def test_rejects_non_canonical():
    with pytest.raises(ValidationError):
        rle_dtw(rle((1, 2), (1, 3)), rle((0, 1)))


def test_append_entry_and_trace_on_first_block():
    grid = build_grid(rle((0, 1)), rle((1, 2)))
    diagonals = DiagonalList()
    origin = diagonals.insert_before(diagonals.tail, 0)
    diagonals.append(origin, IntersectionEntry(0, 0, 0.0))

    entry = append_entry(origin, 1, 1, grid, diagonals)
    assert entry == IntersectionEntry(1, 1, 1.0)

    fresh = diagonals.insert_before(diagonals.tail, 1)
    cost = trace(fresh, 1, 1, len(origin.entries) - 1, len(diagonals.tail.entries) - 1, grid, diagonals)
    assert cost == 2.0
    assert fresh.entries == [IntersectionEntry(1, 2, 2.0)]
    assert diagonals.entries_created == 3


def test_trace_between_sentinels_is_unreachable():
    grid = build_grid(rle((0, 1)), rle((0, 1)))
    diagonals = DiagonalList()
    lonely = diagonals.insert_before(diagonals.tail, 0)
    cost = trace(lonely, 1, 1, 0, 0, grid, diagonals)
    assert math.isinf(cost)
    assert lonely.entries == [IntersectionEntry(1, 1, math.inf)]


def test_append_entry_from_sentinel_only_is_unreachable():
    grid = build_grid(rle((0, 2)), rle((0, 1)))
    diagonals = DiagonalList()
    empty = diagonals.insert_before(diagonals.tail, -1)
    diagonals.append(empty, IntersectionEntry(0, -1, math.inf))
    entry = append_entry(empty, 1, 1, grid, diagonals)
    assert entry.row == 2 and entry.col == 1
    assert math.isinf(entry.cost)


def test_diagonal_list_keeps_order():
    diagonals = DiagonalList()
    five = diagonals.insert_before(diagonals.tail, 5)
    diagonals.insert_before(five, -3)
    diagonals.insert_before(five, 0)
    assert [d.offset for d in diagonals] == [-3, 0, 5]
    assert len(diagonals) == 3
    with pytest.raises(ValueError):
        diagonals.insert_before(five, 7)


def test_unreachable_corner_raises(monkeypatch):
    def unreachable(diagonal, i, j, grid, diagonals):
        return diagonals.append(diagonal, IntersectionEntry(grid.a[i], grid.b[j], math.inf))

    monkeypatch.setattr('src.rledtw.algorithm.append_entry', unreachable)
    with pytest.raises(RleDtwError, match="unreachable"):
        rle_dtw(rle((0, 1)), rle((0, 1)))


def test_entries_use_int_coordinates_between_inf_sentinels(pair_x, pair_y):
    diagonals = rle_dtw(pair_x, pair_y, keep_diagonals=True).diagonal_list
    assert diagonals.head.entries[0].row == -math.inf
    assert diagonals.tail.entries[0].row == math.inf
    for diagonal in diagonals:
        assert type(diagonal.offset) is int
        assert all(type(e.row) is int and type(e.col) is int for e in diagonal.entries)


def test_kappa_bounds():
    assert kappa_bounds(3, 4, 16, 17) == (12, min(7 * 13, 3 * 17 + 4 * 16 - 12))


@settings(max_examples=300, deadline=None)
@given(rles(max_runs=6, max_length=6), rles(max_runs=6, max_length=6))
def test_matches_naive_on_integers(xr, yr):
    result = rle_dtw(xr, yr)
    assert result.squared_cost == dtw_naive(decode(xr), decode(yr)).squared_cost
    lower, upper = kappa_bounds(result.k, result.l, result.m, result.n)
    assert lower <= result.kappa <= upper + 1
    assert result.diagonals <= result.k * result.l + 1


@settings(max_examples=200, deadline=None)
@given(rles(values=real_values, max_runs=5, max_length=5), rles(values=real_values, max_runs=5, max_length=5))
def test_matches_naive_on_reals(xr, yr):
    expected = dtw_naive(decode(xr), decode(yr)).squared_cost
    assert rle_dtw(xr, yr).squared_cost == pytest.approx(expected, rel=1e-9, abs=1e-12)


@settings(max_examples=150, deadline=None)
@given(rles(max_runs=5, max_length=5), rles(max_runs=5, max_length=5))
def test_entries_are_sound(xr, yr):
    result = rle_dtw(xr, yr, keep_diagonals=True)
    table = dtw_naive_table(decode(xr), decode(yr))
    final = None
    for diagonal in result.diagonal_list:
        rows = [e.row for e in diagonal.entries]
        assert rows == sorted(set(rows))
        for entry in diagonal.entries:
            assert entry.col - entry.row == diagonal.offset
            assert 0 <= entry.row <= result.m and 0 <= entry.col <= result.n
            if math.isfinite(entry.cost):
                assert entry.cost >= table[entry.row, entry.col]
            if (entry.row, entry.col) == (result.m, result.n):
                final = entry
    assert final is not None
    assert final.cost == table[result.m, result.n]


@settings(max_examples=500, deadline=None)
@given(rles(max_runs=6, max_length=6), rles(max_runs=6, max_length=6))
def test_symmetry(xr, yr):
    assert rle_dtw(xr, yr).distance == rle_dtw(yr, xr).distance


@settings(max_examples=500, deadline=None)
@given(rles(values=real_values, max_runs=8, max_length=8))
def test_identity_is_zero(xr):
    assert rle_dtw(xr, xr).distance == 0.0


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.integers(1, 6), st.integers(0, 2 ** 32 - 1))
def test_square_blocks(k, l, s, seed):
    rng = np.random.default_rng(seed)
    xr, yr = square_rle(rng, k, s), square_rle(rng, l, s)
    result = rle_dtw(xr, yr)
    assert k * l <= result.kappa <= k * l + 1
    assert result.distance == bdtw_bounds(xr, yr).upper
    assert result.squared_cost == dtw_naive(decode(xr), decode(yr)).squared_cost


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 4), st.integers(1, 3), st.integers(0, 2 ** 32 - 1))
def test_equal_run_lengths_bound(k, l, short, factor, seed):
    rng = np.random.default_rng(seed)
    long_runs = short * factor
    xr, yr = square_rle(rng, k, long_runs), square_rle(rng, l, short)
    result = rle_dtw(xr, yr)
    assert result.kappa <= 5 * k * l * (math.lcm(long_runs, short) // short) + 1
    assert result.squared_cost == dtw_naive(decode(xr), decode(yr)).squared_cost


@pytest.mark.slow
def test_long_traces_do_not_recurse():
    runs = 550
    xr = RunLengthEncoding(tuple((float(i % 2), 2) for i in range(runs)) + ((0.0, 1),))
    yr = RunLengthEncoding(tuple((float((i + 1) % 2), 2) for i in range(runs)))
    result = rle_dtw(xr, yr)
    assert result.squared_cost == dtw_naive(decode(xr), decode(yr)).squared_cost
