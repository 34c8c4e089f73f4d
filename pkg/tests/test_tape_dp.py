from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_counts, integers, naturals
from tapesum.core import Answer, Backend, Instance, Variant
from tapesum.tape_dp import BoolTape, CountTape, decide, run_bool, run_count

SMALL = Instance((3, 4, 1))


def test_three_four_one_counts():
    tape = run_count(SMALL)
    assert tape.as_map() == {1: 1, 3: 1, 4: 2, 5: 1, 7: 1, 8: 1}
    assert len(tape.counts) == 9 and tape.S == 8
    assert tape.counts[0] == 0


def test_three_four_one_intermediate_steps():
    seen = []
    run_count(SMALL, on_step=lambda i, counts, lo, hi: seen.append(
        {j: c for j, c in enumerate(counts) if c}))
    assert seen == [{3: 1}, {3: 1, 4: 1, 7: 1}, {1: 1, 3: 1, 4: 2, 5: 1, 7: 1, 8: 1}]


def test_small_counts():
    assert run_count(Instance((5,))).as_map() == {5: 1}
    assert run_count(Instance((1, 1, 1))).as_map() == {1: 3, 2: 3, 3: 1}


def test_bool_tapes():
    assert run_bool(SMALL).sums() == [1, 3, 4, 5, 7, 8]
    assert run_bool(Instance((2, 2))).sums() == [2, 4]
    assert run_bool(Instance((1,))).sums() == [1]


def test_decide():
    tape = run_count(SMALL)
    assert decide(tape, 9) == Answer(False, 0, Backend.TAPE_COUNT)
    a = decide(tape, 8)
    assert a.decision and a.multiplicity == 1
    a = decide(tape, 0)
    assert not a.decision and a.multiplicity == 0
    assert decide(tape, -3).multiplicity == 0
    b = decide(run_bool(SMALL), 4)
    assert b.decision and b.multiplicity is None and b.backend is Backend.TAPE_BOOL
    assert not decide(run_bool(SMALL), 9).decision


def test_integer_variant_tape_with_offset():
    tape = run_count(Instance((2, -2, 3), 0, Variant.ZERO_SUM))
    assert tape.offset == -2 and tape.S == 5
    assert tape.as_map() == brute_counts([2, -2, 3])
    assert run_bool(Instance((2, -2, 3), 0, Variant.ZERO_SUM)).sums() == [-2, 0, 1, 2, 3, 5]


@settings(max_examples=200)
@given(naturals)
def test_counts_match_oracle(values):
    tape = run_count(Instance(tuple(values)))
    assert tape.as_map() == brute_counts(values)
    assert sum(tape.counts) == 2 ** len(values) - 1
    assert tape.counts[0] == 0


@given(integers)
def test_integer_counts_match_oracle(values):
    assert run_count(Instance(tuple(values), 0, Variant.INTEGER)).as_map() == brute_counts(values)


@given(st.one_of(naturals, integers))
def test_bool_is_count_positivity(values):
    inst = Instance(tuple(values), 0, Variant.INTEGER)
    ct, bt = run_count(inst), run_bool(inst)
    for j in range(ct.offset - 2, ct.S + 3):
        assert bt[j] == (ct[j] > 0)


@given(naturals)
def test_no_write_outside_tape(values):
    inst = Instance(tuple(values))
    S = inst.total
    writes = []
    tape = run_count(inst, on_step=lambda i, counts, lo, hi: writes.append((lo, hi, len(counts))))
    assert len(tape.counts) == S + 1
    for lo, hi, size in writes:
        assert 0 <= lo <= hi <= S and size == S + 1


@given(naturals)
def test_order_insensitive_result(values):
    assert run_count(Instance(tuple(values))) == run_count(Instance(tuple(reversed(values))))


def test_types_are_values():
    assert CountTape((0, 1)) == CountTape((0, 1))
    assert BoolTape(0b10, 2)[1] and not BoolTape(0b10, 2)[0]
