import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_counts, integers, naturals
from tapesum.core import Instance, Variant
from tapesum.errors import NegativeExponentPresent, SizeLimitExceeded
from tapesum.genfunc import (
    SparsePoly,
    coefficient,
    derivative_read,
    expand,
    factor,
    nonempty_counts,
    to_tape_integer,
)
from tapesum.tape_dp import run_bool, run_count

SMALL = Instance((3, 4, 1))

sparse_polys = st.dictionaries(st.integers(0, 200), st.integers(-10**30, 10**30),
                               max_size=40).map(SparsePoly)


def test_expand_small():
    p = expand(SMALL)
    assert p.terms == {0: 1, 1: 1, 3: 1, 4: 2, 5: 1, 7: 1, 8: 1}


def test_expand_integer_variant_constant_term():
    p = expand(Instance((2, -2), 0, Variant.INTEGER))
    assert p.terms == {-2: 1, 0: 2, 2: 1}
    assert coefficient(p, 0) == 1


def test_expand_single():
    assert expand(Instance((7,))).terms == {0: 1, 7: 1}


def test_coefficient_reads():
    p = expand(SMALL)
    assert coefficient(p, 4) == 2
    assert coefficient(p, 2) == 0
    assert coefficient(p, 0) == 0
    assert coefficient(SparsePoly({0: 5}), 0) == 5  # not a subset-sum product


def test_derivative_read_examples():
    p = expand(SMALL)
    assert derivative_read(p, 4) == 2
    assert derivative_read(p, 0) == 1  # raw constant term, empty subset included
    assert derivative_read(expand(Instance((1, 1, 1))), 2) == 3
    assert derivative_read(SparsePoly({}), 5) == 0


def test_derivative_read_rejects_negative_exponents():
    with pytest.raises(NegativeExponentPresent):
        derivative_read(expand(Instance((2, -2), 0, Variant.INTEGER)), 2)


def test_tape_integer():
    assert to_tape_integer(expand(SMALL)).value == 442
    assert to_tape_integer(expand(Instance((1,)))).value == 2
    assert to_tape_integer(expand(Instance((2, 2)))).value == 20
    assert 4 in to_tape_integer(expand(SMALL)) and 2 not in to_tape_integer(expand(SMALL))
    with pytest.raises(NegativeExponentPresent):
        to_tape_integer(SparsePoly({-1: 1}))


def test_size_cap():
    pow2 = Instance(tuple(1 << i for i in range(12)))
    assert len(expand(pow2)) == 2**12
    with pytest.raises(SizeLimitExceeded):
        expand(pow2, cap=2**11)


def test_arithmetic():
    a = SparsePoly({0: 1, 2: 3})
    b = SparsePoly({1: 2})
    assert (a * b).terms == {1: 2, 3: 6}
    assert (a - a).terms == {}
    assert (a + b).terms == {0: 1, 1: 2, 2: 3}
    assert a.shift(3).terms == {3: 1, 5: 3}
    assert a.derivative(2).terms == {0: 6}
    assert SparsePoly({1: 0}).terms == {}


def test_json_round_trip():
    p = expand(Instance((2**60, 2**60, 3)))
    d = json.loads(p.dumps())
    assert all(isinstance(v, str) for v in d.values())
    assert SparsePoly.from_json(d) == p


@settings(max_examples=150)
@given(sparse_polys)
def test_derivative_read_equals_lookup(p):
    for n in range(0, p.degree + 2):
        assert derivative_read(p, n) == p[n]


@given(naturals)
def test_expand_matches_tape(values):
    inst = Instance(tuple(values))
    assert nonempty_counts(expand(inst)) == run_count(inst).as_map()


@given(integers)
def test_expand_matches_oracle_integer(values):
    p = expand(Instance(tuple(values), 0, Variant.INTEGER))
    assert nonempty_counts(p) == brute_counts(values)
    assert sum(p.terms.values()) - 1 == 2 ** len(values) - 1


@given(naturals, st.integers(0, 10))
def test_multiplicativity(values, cut):
    cut = min(cut, len(values))
    left, right = values[:cut], values[cut:]
    whole = expand(Instance(tuple(values)))
    pa = expand(Instance(tuple(left))) if left else SparsePoly({0: 1}, with_empty=True)
    pb = expand(Instance(tuple(right))) if right else SparsePoly({0: 1}, with_empty=True)
    assert pa * pb == whole
    prod = SparsePoly({0: 1}, with_empty=True)
    for a in values:
        prod = prod * factor(a)
    assert prod == whole


@given(naturals)
def test_tape_integer_matches_bool_tape(values):
    inst = Instance(tuple(values))
    ti, bt = to_tape_integer(expand(inst)), run_bool(inst)
    assert ti.value == bt.bits
    for j in range(inst.total + 2):
        assert (j in ti) == bt[j]
