"""Frequency-domain subset sums.

The signal prod(1 + exp(2j*pi*a*t)) carries one unit impulse at every
achievable subset sum (plus one at DC for the empty subset).  Building the
factored signal is linear in N; reading a frequency is the expensive part:
either expand the impulse spectrum (up to 2**N entries) or correlate K
samples against the query tone, which is exact once K exceeds the span of
achievable frequencies.

Impulse weights are bare multiplicities (no 2*pi factor).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import Instance, promote
from .errors import AliasRisk, SizeLimitExceeded

DEFAULT_TERM_CAP = 2**22
ZSV_THRESHOLD = 1.5


@dataclass(frozen=True)
class LazyProduct:
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a product signal needs at least one factor")

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def freq_range(self) -> tuple:
        """(lowest, highest) frequency in the expanded spectrum, DC included."""
        lo = sum(a for a in self.factors if a < 0)
        hi = sum(a for a in self.factors if a > 0)
        return lo, hi

    @property
    def span(self) -> int:
        lo, hi = self.freq_range
        return hi - lo

    def min_samples(self) -> int:
        """Smallest alias-free sample count."""
        return self.span + 1


@dataclass(frozen=True)
class Spectrum:
    impulses: dict  # frequency -> multiplicity, DC includes the empty subset

    def __getitem__(self, b: int) -> int:
        return self.impulses.get(b, 0)

    @property
    def M(self) -> int:
        """Number of impulses away from DC."""
        return sum(1 for b in self.impulses if b != 0)

    def total(self) -> int:
        return sum(self.impulses.values())

    def to_json(self) -> dict:
        return {str(b): str(m) for b, m in sorted(self.impulses.items())}


def generate(inst: Instance) -> LazyProduct:
    inst = promote(inst)
    return LazyProduct(tuple(inst.values))


def evaluate(sig: LazyProduct, t: float) -> complex:
    """S_N(t) as a running product of the N factors."""
    acc = complex(1.0)
    for a in sig.factors:
        acc *= 1 + cmath.exp(2j * math.pi * a * t)
    return acc


def sample_grid(sig: LazyProduct, count: int, step_num: int, denom: int) -> np.ndarray:
    """Samples S_N(k * step_num / denom) for k in range(count).

    Phases are reduced modulo 1 in exact integer arithmetic before going to
    floating point, so large frequencies do not lose precision.
    """
    ks = np.arange(count, dtype=np.int64)
    out = np.ones(count, dtype=np.complex128)
    scale = 2 * math.pi / denom
    for a in sig.factors:
        r = (a * step_num) % denom
        if r == 0:
            out *= 2.0
            continue
        if (count - 1) * r < 2**63:
            num = (ks * r) % denom
        else:
            num = np.array([(k * r) % denom for k in range(count)], dtype=np.int64)
        out *= 1 + np.exp(1j * scale * num.astype(np.float64))
    return out


def samples(sig: LazyProduct, K: int) -> np.ndarray:
    """One period of the signal on the uniform grid t = k / K."""
    return sample_grid(sig, K, 1, K)


def _check_alias(sig: LazyProduct, K: int, check: bool) -> None:
    if K <= 0:
        raise ValueError("sample count must be positive")
    if check and K <= sig.span:
        raise AliasRisk(f"K={K} must exceed the frequency span {sig.span}")


def expand_spectrum(sig: LazyProduct, cap: int = DEFAULT_TERM_CAP) -> Spectrum:
    """Iterated multiset convolution of the unit impulse pairs {0, a}."""
    spec = {0: 1}
    for a in sig.factors:
        shifted = {b + a: m for b, m in spec.items()}
        for b, m in spec.items():
            shifted[b] = shifted.get(b, 0) + m
        if len(shifted) > cap:
            raise SizeLimitExceeded(f"spectrum exceeds {cap} impulses")
        spec = shifted
    return Spectrum(spec)


def fourier_read(spec: Spectrum, b: int) -> int:
    """Nonempty-subset multiplicity at frequency b (DC bookkeeping removed)."""
    m = spec[b]
    return m - 1 if b == 0 else m


def convolution_read(sig: LazyProduct, b: int, K: int, *, check: bool = True,
                     sampled: np.ndarray = None) -> complex:
    """Correlate K samples of the signal with exp(2j*pi*b*t).

    Equals the impulse weight at b (DC includes the empty subset) when
    K > span; smaller K folds every frequency congruent to b mod K onto the
    same bin.  Pass ``sampled`` to reuse :func:`samples` across queries.
    """
    _check_alias(sig, K, check)
    x = samples(sig, K) if sampled is None else sampled
    num = (np.arange(K, dtype=np.int64) * (b % K)) % K
    tone = np.exp(-2j * math.pi * num.astype(np.float64) / K)
    return complex(np.sum(x * tone) / K)


def dc_integral(sig: LazyProduct, K: int, *, check: bool = True,
                sampled: np.ndarray = None) -> float:
    """Riemann-sum value of the integral of S_N over [0, 1]: 1 + #zero-sum subsets."""
    _check_alias(sig, K, check)
    x = samples(sig, K) if sampled is None else sampled
    return float(np.sum(x).real / K)


def has_zero_sum(sig: LazyProduct, K: int = None) -> bool:
    K = sig.min_samples() if K is None else K
    return dc_integral(sig, K) > ZSV_THRESHOLD


def conv_multiplicity(value: complex, b: int) -> int:
    """Round a convolution read to an integer nonempty-subset count."""
    m = round(value.real)
    return m - 1 if b == 0 else m
