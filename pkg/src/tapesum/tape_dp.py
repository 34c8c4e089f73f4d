"""Shift-and-sum tape: the pseudo-polynomial subset-sum solver.

Cell ``j`` of the counting tape holds the number of nonempty subsets summing
to ``j``.  Each element ``a`` is folded in by copying the tape shifted by
``a``, adding a singleton mark at ``a`` and summing element-wise.

The tape spans exactly the reachable range [sum of negatives, sum of
positives], i.e. ``S + 1`` cells for Natural instances.  While processing the
i-th element every nonzero cell lies inside the running prefix range, so the
shifted copy never writes past the end.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .core import Answer, Backend, Instance, promote


@dataclass(frozen=True)
class CountTape:
    counts: tuple
    offset: int = 0  # sum represented by counts[0]

    @property
    def S(self) -> int:
        """Largest sum represented on the tape."""
        return self.offset + len(self.counts) - 1

    def __getitem__(self, j: int) -> int:
        if j < self.offset or j > self.S:
            return 0
        return self.counts[j - self.offset]

    def as_map(self) -> dict:
        return {j + self.offset: c for j, c in enumerate(self.counts) if c}


@dataclass(frozen=True)
class BoolTape:
    bits: int  # bit i <-> sum offset + i
    size: int
    offset: int = 0

    @property
    def S(self) -> int:
        return self.offset + self.size - 1

    def __getitem__(self, j: int) -> bool:
        if j < self.offset or j > self.S:
            return False
        return bool(self.bits >> (j - self.offset) & 1)

    def sums(self) -> list[int]:
        digits = bin(self.bits)[:1:-1]
        return [i + self.offset for i, d in enumerate(digits) if d == "1"]


StepHook = Callable[[int, tuple, int, int], None]


def run_count(inst: Instance, on_step: Optional[StepHook] = None) -> CountTape:
    """Counting tape for ``inst``.

    ``on_step(i, counts, lo, hi)`` is called after element ``i`` is folded in;
    ``lo..hi`` is the range of tape indices the shifted copy wrote to.
    """
    inst = promote(inst)
    values = inst.values
    lo_sum, hi_sum = inst.sum_range
    size = hi_sum - lo_sum + 1
    off = -lo_sum  # tape index of sum 0

    tape = [0] * size
    tape[values[0] + off] = 1
    # cells outside [p_lo, p_hi] are still zero; the range always covers sum 0
    p_lo, p_hi = min(values[0], 0) + off, max(values[0], 0) + off
    if on_step:
        on_step(0, tuple(tape), p_lo, p_hi)
    for i in range(1, len(values)):
        a = values[i]
        w_lo, w_hi = p_lo + a, p_hi + a
        if w_lo < 0 or w_hi >= size:
            raise AssertionError(f"shift by {a} would write outside tape [0, {size})")
        tape2 = [0] * size
        tape2[w_lo:w_hi + 1] = tape[p_lo:p_hi + 1]
        tape2[a + off] += 1
        tape = [x + y for x, y in zip(tape, tape2)]
        p_lo, p_hi = min(p_lo, w_lo), max(p_hi, w_hi)
        if on_step:
            on_step(i, tuple(tape), w_lo, w_hi)
    return CountTape(tuple(tape), lo_sum)


def run_bool(inst: Instance) -> BoolTape:
    """Reachability tape packed into one big integer; each fold is a shift-or."""
    inst = promote(inst)
    lo_sum, hi_sum = inst.sum_range
    off = -lo_sum
    bits = 0
    for a in inst.values:
        shifted = bits << a if a >= 0 else bits >> -a
        bits |= shifted | (1 << (a + off))
    return BoolTape(bits, hi_sum - lo_sum + 1, lo_sum)


def decide(tape: Union[CountTape, BoolTape], target: int) -> Answer:
    if isinstance(tape, BoolTape):
        return Answer(tape[target], None, Backend.TAPE_BOOL)
    m = tape[target]
    return Answer(m > 0, m, Backend.TAPE_COUNT)
