from fractions import Fraction

import numpy as np
import pytest

from tapesum.detector import (
    DetectorConfig,
    DetectorConfigError,
    correlate,
    detect,
    goertzel,
    read_waveform,
    synthesize,
    write_waveform,
)
from tapesum.errors import NyquistViolation
from tapesum.spectral import LazyProduct, evaluate

SMALL = LazyProduct((3, 4, 1))


def test_synthesize_length_and_first_sample():
    cfg = DetectorConfig(sample_rate=64)
    w = synthesize(SMALL, cfg)
    assert len(w) == 64
    assert w[0] == 8 + 0j


def test_synthesize_scales_time_by_gamma():
    cfg = DetectorConfig(gamma=2, sample_rate=32, duration=2)
    w = synthesize(LazyProduct((1,)), cfg)
    assert len(w) == 64
    tau = np.arange(64) / 32
    assert np.allclose(w, 1 + np.exp(2j * np.pi * 0.5 * tau), atol=1e-12)
    assert cfg.frequency(1) == Fraction(1, 2)


def test_noise_is_bounded_per_component():
    clean = synthesize(SMALL, DetectorConfig(sample_rate=64))
    noisy = synthesize(SMALL, DetectorConfig(sample_rate=64, noise_amplitude=0.1, seed=7))
    diff = noisy - clean
    assert np.all(np.abs(diff.real) <= 0.1) and np.all(np.abs(diff.imag) <= 0.1)
    assert np.any(diff != 0)
    again = synthesize(SMALL, DetectorConfig(sample_rate=64, noise_amplitude=0.1, seed=7))
    assert np.array_equal(noisy, again)


def test_detect_examples():
    cfg = DetectorConfig(sample_rate=32)
    w = synthesize(SMALL, cfg)
    rep = detect(w, 4, cfg)
    assert abs(rep.measured_amplitude - 2.0) < 1e-6 and rep.decision and rep.threshold == 0.5
    rep = detect(w, 9, cfg)
    assert rep.measured_amplitude < 1e-6 and not rep.decision
    w7 = synthesize(LazyProduct((7,)), DetectorConfig(sample_rate=32))
    rep = detect(w7, 0, DetectorConfig(sample_rate=32))
    assert abs(rep.measured_amplitude - 1.0) < 1e-6
    assert rep.threshold == 1.5 and not rep.decision


def test_goertzel_matches_direct():
    rng = np.random.default_rng(3)
    sig = LazyProduct((5, 11, 2, 9))
    cfg = DetectorConfig(sample_rate=128, noise_amplitude=0.3, seed=1)
    w = synthesize(sig, cfg)
    for b in rng.integers(-5, 40, size=20):
        assert abs(goertzel(w, int(b), cfg) - correlate(w, int(b), cfg)) < 1e-9
    cfg2 = DetectorConfig(gamma=Fraction(1, 2), sample_rate=128)
    w2 = synthesize(sig, cfg2)
    assert abs(goertzel(w2, 16, cfg2) - correlate(w2, 16, cfg2)) < 1e-9
    assert detect(w2, 16, cfg2, method="goertzel").decision


def test_config_validation():
    with pytest.raises(DetectorConfigError):
        DetectorConfig(gamma=1, epsilon=1)  # must be < 1/gamma
    with pytest.raises(DetectorConfigError):
        DetectorConfig(gamma=2, duration=1)  # not a whole number of grid periods
    with pytest.raises(DetectorConfigError):
        DetectorConfig(sample_rate=3, duration=Fraction(1, 2))
    cfg = DetectorConfig(gamma=Fraction(1, 10))
    assert cfg.epsilon == 5 and cfg.passband(2) == (15, 25)


def test_nyquist_violation():
    with pytest.raises(NyquistViolation):
        synthesize(SMALL, DetectorConfig(sample_rate=16))
    synthesize(SMALL, DetectorConfig(sample_rate=17))


def test_for_signal_picks_valid_config():
    for g in (1, Fraction(1, 2), Fraction(1, 10), 2):
        cfg = DetectorConfig.for_signal(SMALL, gamma=g)
        assert cfg.sample_rate > 2 * 8 / cfg.gamma
        w = synthesize(SMALL, cfg)
        assert abs(detect(w, 4, cfg).measured_amplitude - 2) < 1e-6


def test_interferers_at_unreachable_sums_leave_decisions_alone():
    sig = LazyProduct((3, 5))
    cfg = DetectorConfig.for_signal(sig, interferers=((4, 3.0), (-6, 2.0)))
    w = synthesize(sig, cfg)
    for b in (0, 1, 2, 3, 5, 6, 7, 8):
        rep = detect(w, b, cfg)
        assert rep.decision == (b in (3, 5, 8))
    assert abs(detect(w, 4, cfg).measured_amplitude - 3.0) < 1e-6  # the interferer itself


def test_waveform_file_round_trip(tmp_path):
    cfg = DetectorConfig(sample_rate=32)
    w = synthesize(SMALL, cfg)
    path = tmp_path / "w.sswf"
    write_waveform(path, w, cfg.sample_rate)
    raw = path.read_bytes()
    assert raw[:4] == b"SSWF" and len(raw) == 16 + 16 * len(w)
    assert int.from_bytes(raw[4:8], "little") == 32
    assert int.from_bytes(raw[8:12], "little") == 32
    assert np.frombuffer(raw[16:32], "<f8")[0] == w[0].real
    back, rate = read_waveform(path)
    assert rate == 32 and np.array_equal(back, w)


def test_report_fields():
    cfg = DetectorConfig(sample_rate=32, noise_amplitude=0.05, seed=11)
    rep = detect(synthesize(SMALL, cfg), 7, cfg)
    assert rep.config["seed"] == 11 and rep.config["gamma"] == "1"
    assert rep.decision == (rep.measured_amplitude >= rep.threshold)
    assert set(rep.to_json()) == {"queried_sum", "measured_amplitude", "threshold", "decision", "config"}


def test_clean_waveform_equals_signal_samples():
    cfg = DetectorConfig(sample_rate=20)
    w = synthesize(SMALL, cfg)
    ref = [evaluate(SMALL, k / 20) for k in range(20)]
    assert np.allclose(w, ref, atol=1e-12)
