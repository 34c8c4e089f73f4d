"""Sampled-signal detection of a subset sum.

Sum ``b`` is broadcast at physical frequency ``b / gamma``.  A single-bin
correlator over an observation window that holds a whole number of periods
of the 1/gamma frequency grid plays the role of the bandpass filter
[b/gamma - eps, b/gamma + eps]; with no noise its output magnitude is
exactly the impulse weight at ``b``.
"""
from __future__ import annotations

import math
import struct
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import NyquistViolation, TapeSumError
from .spectral import LazyProduct, sample_grid

DEFAULT_THRESHOLD = 0.5
DEFAULT_DC_THRESHOLD = 1.5
WAVE_MAGIC = b"SSWF"
_HEADER = struct.Struct("<4sIII")  # magic, sample_rate, sample_count, reserved


class DetectorConfigError(TapeSumError, ValueError):
    code = "invalid-detector-config"


@dataclass(frozen=True)
class DetectorConfig:
    gamma: Fraction = Fraction(1)
    sample_rate: int = 64
    duration: Fraction = Fraction(1)
    epsilon: Optional[Fraction] = None  # None -> 1 / (2 * gamma)
    threshold: float = DEFAULT_THRESHOLD
    dc_threshold: float = DEFAULT_DC_THRESHOLD
    noise_amplitude: float = 0.0
    seed: int = 0
    # (sum, amplitude) tones injected on top of the signal, mapped like sums
    interferers: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        object.__setattr__(self, "duration", Fraction(self.duration))
        eps = Fraction(1, 2) / self.gamma if self.epsilon is None else Fraction(self.epsilon)
        object.__setattr__(self, "epsilon", eps)
        object.__setattr__(self, "interferers", tuple(tuple(x) for x in self.interferers))
        if self.gamma <= 0:
            raise DetectorConfigError("gamma must be positive")
        if not 0 < eps < 1 / self.gamma:
            raise DetectorConfigError(f"epsilon must lie in (0, 1/gamma), got {eps}")
        if self.sample_rate <= 0 or self.duration <= 0:
            raise DetectorConfigError("sample_rate and duration must be positive")
        if (self.duration / self.gamma).denominator != 1:
            raise DetectorConfigError("duration / gamma must be an integer (leakage-free window)")
        if (self.sample_rate * self.duration).denominator != 1:
            raise DetectorConfigError("sample_rate * duration must be an integer")
        if self.noise_amplitude < 0:
            raise DetectorConfigError("noise_amplitude must be non-negative")

    @property
    def sample_count(self) -> int:
        return int(self.sample_rate * self.duration)

    def frequency(self, b: int) -> Fraction:
        return Fraction(b) / self.gamma

    def passband(self, b: int) -> tuple:
        f = self.frequency(b)
        return f - self.epsilon, f + self.epsilon

    def threshold_for(self, b: int) -> float:
        return self.dc_threshold if b == 0 else self.threshold

    def snapshot(self) -> dict:
        d = asdict(self)
        for k in ("gamma", "duration", "epsilon"):
            d[k] = str(d[k])
        d["interferers"] = [list(x) for x in self.interferers]
        return d

    @classmethod
    def for_signal(cls, sig: LazyProduct, gamma=1, **kw) -> "DetectorConfig":
        """Smallest leakage-free window and a sample rate just above Nyquist."""
        gamma = Fraction(gamma)
        duration = kw.pop("duration", None)
        if duration is None:
            duration = gamma * max(1, math.ceil(1 / gamma))
        duration = Fraction(duration)
        peak = max(_peak_sum(sig), *(abs(b) for b, _ in kw.get("interferers", ())), 0)
        rate = math.floor(2 * peak / gamma) + 1
        while (rate * duration).denominator != 1:
            rate += 1
        return cls(gamma=gamma, sample_rate=kw.pop("sample_rate", rate), duration=duration, **kw)


@dataclass(frozen=True)
class DetectionReport:
    queried_sum: int
    measured_amplitude: float
    threshold: float
    decision: bool
    config: dict

    def to_json(self) -> dict:
        return {
            "queried_sum": self.queried_sum,
            "measured_amplitude": self.measured_amplitude,
            "threshold": self.threshold,
            "decision": self.decision,
            "config": self.config,
        }


def _peak_sum(sig: LazyProduct) -> int:
    lo, hi = sig.freq_range
    return max(-lo, hi)


def _grid(cfg: DetectorConfig) -> tuple:
    # t_k = k / (rate * gamma) = k * q / (rate * p) for gamma = p / q
    p, q = cfg.gamma.numerator, cfg.gamma.denominator
    return q, cfg.sample_rate * p


def synthesize(sig: LazyProduct, cfg: DetectorConfig) -> np.ndarray:
    peak = max(_peak_sum(sig), *(abs(b) for b, _ in cfg.interferers), 0)
    if not cfg.sample_rate > 2 * Fraction(peak) / cfg.gamma:
        raise NyquistViolation(
            f"sample_rate {cfg.sample_rate} must exceed {2 * Fraction(peak) / cfg.gamma}")
    step, denom = _grid(cfg)
    n = cfg.sample_count
    wave = sample_grid(sig, n, step, denom)
    for b, amp in cfg.interferers:
        wave = wave + amp * _tone(b, n, step, denom)
    if cfg.noise_amplitude > 0:
        rng = np.random.default_rng(cfg.seed)
        a = cfg.noise_amplitude
        wave = wave + a * (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n))
    return wave


def _tone(b: int, n: int, step: int, denom: int, sign: int = 1) -> np.ndarray:
    r = (b * step) % denom
    num = (np.arange(n, dtype=np.int64) * r) % denom
    return np.exp(sign * 2j * math.pi * num.astype(np.float64) / denom)


def correlate(wave: np.ndarray, b: int, cfg: DetectorConfig) -> complex:
    """Direct single-bin correlation against frequency b / gamma."""
    step, denom = _grid(cfg)
    n = len(wave)
    return complex(np.sum(wave * _tone(b, n, step, denom, sign=-1)) / n)


def goertzel(wave: np.ndarray, b: int, cfg: DetectorConfig) -> complex:
    """Same bin as :func:`correlate`, via the second-order Goertzel recurrence."""
    step, denom = _grid(cfg)
    w = 2 * math.pi * ((b * step) % denom) / denom
    c = 2 * math.cos(w)
    s1 = s2 = 0j
    for x in wave.tolist():
        s1, s2 = x + c * s1 - s2, s1
    n = len(wave)
    # y[n-1] = sum x[k] e^{jw(n-1-k)}; undo the phase to get sum x[k] e^{-jwk}
    y = s1 - complex(math.cos(w), -math.sin(w)) * s2
    return y * complex(math.cos(w * (n - 1)), -math.sin(w * (n - 1))) / n


def detect(wave: np.ndarray, b: int, cfg: DetectorConfig, method: str = "direct") -> DetectionReport:
    if method == "direct":
        amp = abs(correlate(wave, b, cfg))
    elif method == "goertzel":
        amp = abs(goertzel(wave, b, cfg))
    else:
        raise ValueError(f"unknown detection method {method!r}")
    thr = cfg.threshold_for(b)
    return DetectionReport(b, amp, thr, amp >= thr, cfg.snapshot())


# -- waveform files -----------------------------------------------------------

def write_waveform(path, wave: np.ndarray, sample_rate: int) -> None:
    """16-byte header then little-endian interleaved float64 (re, im) pairs."""
    with open(path, "wb") as f:
        f.write(_HEADER.pack(WAVE_MAGIC, sample_rate, len(wave), 0))
        f.write(np.asarray(wave, dtype="<c16").tobytes())


def read_waveform(path) -> tuple:
    with open(path, "rb") as f:
        head = f.read(_HEADER.size)
        magic, rate, count, _ = _HEADER.unpack(head)
        if magic != WAVE_MAGIC:
            raise ValueError(f"not a waveform file (magic {magic!r})")
        data = np.frombuffer(f.read(), dtype="<c16")
    if len(data) != count:
        raise ValueError(f"header says {count} samples, file holds {len(data)}")
    return data.astype(np.complex128), rate
