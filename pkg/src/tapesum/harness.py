"""Backend dispatch, cross-backend comparison and runtime-growth benchmarks."""
from __future__ import annotations

import os
import platform
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

import numpy as np

from . import genfunc, oracle, spectral, tape_dp
from .core import Answer, Backend, Instance, Variant, promote, validate
from .detector import DetectorConfig, detect, synthesize
from .errors import MismatchFound, TapeSumError, VariantMismatch

EXACT_BACKENDS = (
    Backend.TAPE_COUNT,
    Backend.GENFUNC,
    Backend.SPECTRAL_FOURIER,
    Backend.SPECTRAL_CONV,
)
CONV_TOL = 1e-6


@dataclass(frozen=True)
class SolveResult:
    answer: Answer
    elapsed_ms: float
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        d = self.answer.to_json()
        d["elapsed_ms"] = round(self.elapsed_ms, 3)
        d.update(self.extra)
        return d


def _resolve(inst: Instance, target) -> Instance:
    if target is not None:
        inst = inst.with_target(target)
    return promote(inst)


def solve(inst: Instance, backend: Backend, target=None, *, cap: int = genfunc.DEFAULT_TERM_CAP,
          K: Optional[int] = None, detector_cfg: Optional[dict] = None) -> SolveResult:
    inst = _resolve(inst, target)
    T = inst.target
    extra: dict = {}
    t0 = time.perf_counter()
    if backend is Backend.ORACLE:
        m = oracle.enumerate_subsets(inst).multiplicity(T)
        ans = Answer(m > 0, m, backend)
    elif backend is Backend.TAPE_COUNT:
        ans = tape_dp.decide(tape_dp.run_count(inst), T)
    elif backend is Backend.TAPE_BOOL:
        ans = tape_dp.decide(tape_dp.run_bool(inst), T)
    elif backend is Backend.GENFUNC:
        m = genfunc.coefficient(genfunc.expand(inst, cap), T)
        ans = Answer(m > 0, m, backend)
    elif backend is Backend.SPECTRAL_FOURIER:
        spec = spectral.expand_spectrum(spectral.generate(inst), cap)
        m = spectral.fourier_read(spec, T)
        ans = Answer(m > 0, m, backend)
    elif backend is Backend.SPECTRAL_CONV:
        sig = spectral.generate(inst)
        K = sig.min_samples() if K is None else K
        value = spectral.convolution_read(sig, T, K)
        m = spectral.conv_multiplicity(value, T)
        extra = {"amplitude": [value.real, value.imag], "K": K}
        ans = Answer(m > 0, m, backend)
    elif backend is Backend.DC_INTEGRAL:
        if T != 0:
            raise VariantMismatch("dc-integral answers the zero-sum question only (target 0)")
        sig = spectral.generate(inst)
        K = sig.min_samples() if K is None else K
        value = spectral.dc_integral(sig, K)
        extra = {"integral": value, "K": K}
        ans = Answer(value > spectral.ZSV_THRESHOLD, None, backend)
    elif backend is Backend.DETECTOR:
        sig = spectral.generate(inst)
        cfg = DetectorConfig.for_signal(sig, **(detector_cfg or {}))
        report = detect(synthesize(sig, cfg), T, cfg)
        extra = {"amplitude": report.measured_amplitude, "threshold": report.threshold}
        ans = Answer(report.decision, None, backend)
    else:
        raise ValueError(f"unknown backend {backend}")
    elapsed = (time.perf_counter() - t0) * 1e3
    return SolveResult(ans, elapsed, extra)


# -- cross-backend comparison -------------------------------------------------

def multiplicity_map(inst: Instance, backend: Backend, *, K: Optional[int] = None,
                     cap: int = genfunc.DEFAULT_TERM_CAP, tol: float = CONV_TOL) -> dict:
    """Nonempty-subset multiplicities {sum: count} according to one backend."""
    inst = promote(inst)
    if backend is Backend.ORACLE:
        return oracle.enumerate_subsets(inst).counts
    if backend is Backend.TAPE_COUNT:
        return tape_dp.run_count(inst).as_map()
    if backend is Backend.TAPE_BOOL:
        return {j: 1 for j in tape_dp.run_bool(inst).sums()}
    if backend is Backend.GENFUNC:
        return genfunc.nonempty_counts(genfunc.expand(inst, cap))
    if backend is Backend.SPECTRAL_FOURIER:
        spec = spectral.expand_spectrum(spectral.generate(inst), cap)
        out = {b: spectral.fourier_read(spec, b) for b in spec.impulses}
        return {b: m for b, m in out.items() if m}
    if backend is Backend.SPECTRAL_CONV:
        sig = spectral.generate(inst)
        K = sig.min_samples() if K is None else K
        x = spectral.samples(sig, K)
        lo, hi = sig.freq_range
        out = {}
        for b in range(lo, hi + 1):
            value = spectral.convolution_read(sig, b, K, check=False, sampled=x)
            m = round(value.real)
            if abs(value - m) > tol:
                raise MismatchFound(backend.value, b, "integer amplitude", value)
            m = m - 1 if b == 0 else m
            if m:
                out[b] = m
        return out
    raise ValueError(f"backend {backend.value} does not produce multiplicity maps")


def first_mismatch(expected: dict, got: dict):
    for b in sorted(set(expected) | set(got)):
        if expected.get(b, 0) != got.get(b, 0):
            return b, expected.get(b, 0), got.get(b, 0)
    return None


@dataclass
class CompareRow:
    backend: str
    ok: bool
    mismatch: Optional[dict] = None

    def to_json(self) -> dict:
        d = {"backend": self.backend, "ok": self.ok}
        if self.mismatch:
            d["mismatch"] = self.mismatch
        return d


def compare(inst: Instance, backends: Iterable[Backend] = EXACT_BACKENDS, *,
            K: Optional[int] = None) -> list[CompareRow]:
    """Run each backend against the oracle; ``K`` forces the convolution sample count."""
    inst = promote(inst)
    truth = oracle.enumerate_subsets(inst).counts
    rows = []
    for backend in backends:
        try:
            got = multiplicity_map(inst, backend, K=K)
            if backend is Backend.TAPE_BOOL:
                exp = {b: 1 for b in truth}
            else:
                exp = truth
            mm = first_mismatch(exp, got)
        except MismatchFound as e:
            mm = (e.sum, e.expected, e.got)
        if mm is None:
            rows.append(CompareRow(backend.value, True))
        else:
            b, e_, g_ = mm
            rows.append(CompareRow(backend.value, False,
                                   {"sum": b, "expected": str(e_), "got": str(g_)}))
    return rows


def random_instance(rng: np.random.Generator, n: int, max_value: int,
                    variant: Variant = Variant.NATURAL) -> Instance:
    if variant is Variant.NATURAL:
        values = rng.integers(1, max_value + 1, size=n)
        target = int(rng.integers(0, int(values.sum()) + 2))
    else:
        values = rng.integers(-max_value, max_value + 1, size=n)
        target = 0 if variant is Variant.ZERO_SUM else int(rng.integers(-max_value, max_value + 1))
    return validate(Instance(tuple(int(v) for v in values), target, variant))


def corpus(count: int, seed: int, max_n: int = 14, max_value: int = 64,
           variants=(Variant.NATURAL, Variant.INTEGER)) -> list[Instance]:
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(1, max_n + 1))
        out.append(random_instance(rng, n, max_value, variants[i % len(variants)]))
    return out


# -- growth benchmark ---------------------------------------------------------

BENCH_BACKENDS = ("generation", "tape-count", "genfunc", "spectral-conv")


@dataclass
class BenchReport:
    rows: list
    slopes: dict
    params: dict
    host: dict

    def to_json(self) -> dict:
        return asdict(self)

    def generation_ok(self, limit: float = 2.3) -> Optional[bool]:
        s = self.slopes.get("generation")
        return None if s is None else s <= limit


def bench_instance(family: str, n: int, max_value: int, seed: int, rep: int) -> Instance:
    """Regenerable instance for one bench cell."""
    if family == "pow2":
        return Instance(tuple(1 << i for i in range(n)), 0)
    rng = np.random.default_rng([seed, n, rep])
    values = rng.integers(1, max_value + 1, size=n)
    return Instance(tuple(int(v) for v in values), 0)


def _time_once(backend: str, inst: Instance, rng, cap: int, max_cells: int) -> tuple:
    total = sum(inst.values)
    if backend == "generation":
        t = float(rng.random())
        t0 = time.perf_counter()
        sig = spectral.generate(inst)
        spectral.evaluate(sig, t)
        return time.perf_counter() - t0, {}
    if backend == "tape-count":
        if total + 1 > max_cells:
            return None, {"skipped": f"tape of {total + 1} cells exceeds {max_cells}"}
        t0 = time.perf_counter()
        tape_dp.run_count(inst)
        return time.perf_counter() - t0, {}
    if backend == "genfunc":
        t0 = time.perf_counter()
        try:
            p = genfunc.expand(inst, cap)
        except TapeSumError as e:
            return None, {"skipped": str(e)}
        return time.perf_counter() - t0, {"terms": len(p)}
    if backend == "spectral-conv":
        sig = spectral.generate(inst)
        K = sig.min_samples()
        if K > max_cells:
            return None, {"skipped": f"K={K} exceeds {max_cells}"}
        target = inst.values[0]
        t0 = time.perf_counter()
        spectral.convolution_read(sig, target, K)
        return time.perf_counter() - t0, {"K": K}
    raise ValueError(f"unknown bench backend {backend!r}")


def fit_slope(ns, times) -> Optional[float]:
    """Least-squares slope of log(time) against log(N)."""
    pts = [(n, t) for n, t in zip(ns, times) if t and t > 0]
    if len(pts) < 2:
        return None
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    return float(np.polyfit(x, y, 1)[0])


def bench(ns: Iterable[int], max_value: int = 2 * 10**9, reps: int = 5, seed: int = 0,
          backends: Iterable[str] = ("generation",), family: str = "random",
          cap: int = genfunc.DEFAULT_TERM_CAP, max_cells: int = 5_000_000) -> BenchReport:
    ns = list(ns)
    rows = []
    rng = np.random.default_rng(seed)
    for backend in backends:
        for n in ns:
            times, extra = [], {}
            for rep in range(reps):
                inst = bench_instance(family, n, max_value, seed, rep)
                dt, info = _time_once(backend, inst, rng, cap, max_cells)
                extra.update(info)
                if dt is None:
                    break
                times.append(dt)
            row = {"backend": backend, "n": n, "family": family, "max_value": max_value,
                   "seed": seed, "reps": len(times), **extra}
            if times:
                row["median_s"] = statistics.median(times)
                row["mean_s"] = statistics.fmean(times)
            rows.append(row)
    slopes = {}
    for backend in backends:
        sel = [r for r in rows if r["backend"] == backend and "median_s" in r]
        slope = fit_slope([r["n"] for r in sel], [r["median_s"] for r in sel])
        if slope is not None:
            slopes[backend] = slope
    params = {"ns": ns, "max_value": max_value, "reps": reps, "seed": seed, "family": family,
              "cap": cap, "max_cells": max_cells}
    host = {"platform": platform.platform(), "python": platform.python_version(),
            "processor": platform.processor(), "cpus": os.cpu_count()}
    return BenchReport(rows, slopes, params, host)


def bench_rows_csv(report: BenchReport) -> str:
    cols = ["backend", "n", "family", "max_value", "seed", "reps", "median_s", "mean_s", "terms", "K",
            "skipped"]
    lines = [",".join(cols)]
    for r in report.rows:
        lines.append(",".join("" if r.get(c) is None else str(r.get(c)) for c in cols))
    return "\n".join(lines) + "\n"

