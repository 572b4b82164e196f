"""
Tests for binomial confidence intervals and shard helpers
"""
import pytest

from polycensus.utils.parallel import combine_counts, run_sharded, shard_ranges
from polycensus.utils.statistics import wilson_interval, z_score


def test_z_score():
    assert z_score(0.95) == pytest.approx(1.959964, abs=1e-5)
    with pytest.raises(ValueError):
        z_score(1.0)


def test_wilson_interval_contains_point():
    low, high = wilson_interval(30, 100)
    assert low < 0.3 < high
    assert 0.0 <= low and high <= 1.0


def test_wilson_interval_at_edges():
    low, high = wilson_interval(0, 50)
    assert low == 0.0
    assert 0.0 < high < 0.1
    low, high = wilson_interval(50, 50)
    assert high == 1.0
    assert 0.9 < low < 1.0


def test_wilson_interval_narrows():
    small = wilson_interval(50, 100)
    large = wilson_interval(5000, 10000)
    assert large[1] - large[0] < small[1] - small[0]


@pytest.mark.parametrize("hits,trials", [(1, 0), (-1, 10), (11, 10)])
def test_wilson_interval_errors(hits, trials):
    with pytest.raises(ValueError):
        wilson_interval(hits, trials)


def test_shard_ranges():
    assert shard_ranges(10, 4) == [(0, 4), (4, 8), (8, 10)]
    assert shard_ranges(0, 4) == []
    with pytest.raises(ValueError):
        shard_ranges(10, 0)


def test_run_sharded_in_process():
    assert run_sharded(abs, [-1, 2, -3], workers=1) == [1, 2, 3]


def test_combine_counts():
    assert combine_counts([(1, 2, 0), (3, 4, 5)]) == (4, 6, 5)
    assert combine_counts([]) == ()
