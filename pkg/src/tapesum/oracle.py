"""Brute-force ground truth: enumerate every nonempty subset by bitmask.

Deliberately shares nothing with the tape, generating-function or spectral
backends beyond the :class:`Instance` type.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .core import Instance, promote
from .errors import TooLargeForOracle

DEFAULT_LIMIT_N = 24
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class OracleResult:
    counts: dict
    enumerated_subsets: int

    def multiplicity(self, target) -> int:
        return self.counts.get(target, 0)

    def decide(self, target) -> bool:
        return self.multiplicity(target) > 0


def _mask_sums(values) -> np.ndarray:
    # sums[m] is the sum of the subset whose members are the set bits of m
    bound = sum(abs(v) for v in values)
    dtype = np.int64 if bound < _INT64_SAFE else object
    sums = np.zeros(1, dtype=dtype)
    for v in values:
        sums = np.concatenate([sums, sums + v])
    return sums


def enumerate_subsets(inst: Instance, limit_n: int = DEFAULT_LIMIT_N) -> OracleResult:
    inst = promote(inst)
    n = inst.n
    if n > limit_n:
        raise TooLargeForOracle(f"N={n} exceeds oracle limit {limit_n}")
    sums = _mask_sums(inst.values)[1:]  # drop mask 0, the empty subset
    if sums.dtype == object:
        counts = dict(Counter(sums.tolist()))
    else:
        keys, freq = np.unique(sums, return_counts=True)
        counts = {int(k): int(c) for k, c in zip(keys, freq)}
    total = sum(counts.values())
    assert total == 2**n - 1
    return OracleResult(counts, total)


def subsets_with_sum(inst: Instance, target) -> list[tuple]:
    """Explicit witnesses (as index tuples); slow, for small N and debugging."""
    inst = promote(inst)
    n = inst.n
    if n > 20:
        raise TooLargeForOracle(f"N={n} too large for witness listing")
    out = []
    for mask in range(1, 1 << n):
        idx = tuple(i for i in range(n) if mask >> i & 1)
        if sum(inst.values[i] for i in idx) == target:
            out.append(idx)
    return out
