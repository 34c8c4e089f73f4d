import pytest
from hypothesis import given

from conftest import brute_counts, integers
from tapesum.core import Instance, Variant
from tapesum.errors import TooLargeForOracle
from tapesum.oracle import enumerate_subsets, subsets_with_sum


def test_small():
    res = enumerate_subsets(Instance((3, 4, 1)))
    assert res.counts == {1: 1, 3: 1, 4: 2, 5: 1, 7: 1, 8: 1}
    assert res.enumerated_subsets == 7


def test_single():
    assert enumerate_subsets(Instance((1,))).counts == {1: 1}


def test_zero_sum_instance():
    res = enumerate_subsets(Instance((2, -2, 3), 0, Variant.ZERO_SUM))
    assert res.counts == {-2: 1, 0: 1, 1: 1, 2: 1, 3: 2, 5: 1}
    assert res.multiplicity(0) == 1


def test_cap():
    with pytest.raises(TooLargeForOracle):
        enumerate_subsets(Instance(tuple(range(1, 26))))
    with pytest.raises(TooLargeForOracle):
        enumerate_subsets(Instance((1, 2, 3)), limit_n=2)


def test_big_values_fall_back_to_python_ints():
    v = 2**70
    assert enumerate_subsets(Instance((v, v, 1))).counts == {1: 1, v: 2, v + 1: 2, 2 * v: 1, 2 * v + 1: 1}


def test_witnesses():
    assert sorted(subsets_with_sum(Instance((3, 4, 1)), 4)) == [(0, 2), (1,)]


@given(integers)
def test_matches_itertools_and_totals(values):
    res = enumerate_subsets(Instance(tuple(values), 0, Variant.INTEGER))
    assert res.counts == brute_counts(values)
    assert sum(res.counts.values()) == 2 ** len(values) - 1
