"""Command line entry point: ``tapesum {solve,compare,bench,tm-run,detect}``.

Every command prints line-oriented JSON.  Exit status 0 = ok, 1 = negative
answer / mismatch / non-accepting run, 2 = error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import harness, polytape, spectral
from .core import Backend, Variant, counts_to_json, load_instance, promote
from .detector import DetectorConfig, detect, synthesize, write_waveform
from .errors import StepLimitExceeded, TapeSumError

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

MACHINES = {
    "unary-incrementer": polytape.unary_incrementer,
    "binary-successor": polytape.binary_successor,
    "sweep-scanner": polytape.sweep_scanner,
    "immediate-accept": polytape.immediate_accept,
}


class Emitter:
    def __init__(self, out_path=None):
        self.fh = open(out_path, "w") if out_path else None

    def __call__(self, obj):
        line = json.dumps(obj)
        print(line)
        if self.fh:
            self.fh.write(line + "\n")

    def close(self):
        if self.fh:
            self.fh.close()


def _parse_target(s):
    if s is None:
        return None
    if "/" in s:
        return Fraction(s)
    return int(s)


def _parse_ns(spec: str) -> list[int]:
    """'1000:10000:1000' (inclusive) or '8,9,10'."""
    if ":" in spec:
        lo, hi, *step = (int(x) for x in spec.split(":"))
        return list(range(lo, hi + 1, step[0] if step else 1))
    return [int(x) for x in spec.split(",")]


def _detector_kw(args) -> dict:
    kw = {"gamma": Fraction(args.gamma)}
    if args.epsilon is not None:
        kw["epsilon"] = Fraction(args.epsilon)
    if args.rate is not None:
        kw["sample_rate"] = args.rate
    if args.duration is not None:
        kw["duration"] = Fraction(args.duration)
    kw.update(noise_amplitude=args.noise, seed=args.seed, threshold=args.threshold)
    return kw


def cmd_solve(args, emit) -> int:
    inst = load_instance(args.instance)
    res = harness.solve(inst, Backend(args.backend), _parse_target(args.target), cap=args.cap,
                        K=args.K, detector_cfg=_detector_kw(args))
    emit(res.to_json())
    return EXIT_OK if res.answer.decision else EXIT_FALSE


def cmd_compare(args, emit) -> int:
    if args.instance:
        insts = [load_instance(args.instance)]
    else:
        variants = tuple(Variant(v) for v in args.variants.split(","))
        insts = harness.corpus(args.random, args.seed, args.max_n, args.max_value, variants)
    all_ok = True
    for i, inst in enumerate(insts):
        rows = harness.compare(inst, K=args.K)
        ok = all(r.ok for r in rows)
        all_ok &= ok
        line = {"instance": i, "n": inst.n, "ok": ok, "backends": [r.to_json() for r in rows]}
        if args.instance:
            line["counts"] = counts_to_json(harness.multiplicity_map(inst, Backend.ORACLE))
        emit(line)
    emit({"summary": True, "instances": len(insts), "all_agree": all_ok})
    return EXIT_OK if all_ok else EXIT_FALSE


def cmd_bench(args, emit) -> int:
    report = harness.bench(_parse_ns(args.ns), args.max_value, args.reps, args.seed,
                           args.backends.split(","), args.family, args.cap, args.max_cells)
    for row in report.rows:
        emit(row)
    emit({"slopes": report.slopes, "generation_at_most_quadratic": report.generation_ok(),
          "params": report.params, "host": report.host})
    if args.csv:
        with open(args.csv, "w") as f:
            f.write(harness.bench_rows_csv(report))
    return EXIT_OK


def cmd_tm_run(args, emit) -> int:
    if args.machine in MACHINES:
        m = MACHINES[args.machine]()
    else:
        m = polytape.TMDescription.load(args.machine)
    cells = [int(x) for x in args.input.replace(",", " ").split()] if args.input else []
    try:
        run = polytape.run_tm(m, cells, args.max_steps)
    except StepLimitExceeded as e:
        run = e.result
    if args.trace:
        for st in run.trace:
            emit({"step": st.index, "state": st.state, "head": st.head, "cells": st.tape.cells()})
    emit({"machine": m.name, "status": run.status, "steps": run.steps, "head": run.head,
          "cells": run.output(), "lockstep": True})
    return EXIT_OK if run.status == "accept" else EXIT_FALSE


def cmd_detect(args, emit) -> int:
    inst = promote(load_instance(args.instance))
    sig = spectral.generate(inst)
    cfg = DetectorConfig.for_signal(sig, **_detector_kw(args))
    wave = synthesize(sig, cfg)
    if args.export:
        write_waveform(args.export, wave, cfg.sample_rate)
    targets = [int(t) for t in args.target.split(",")] if args.target else [inst.target]
    decisions = []
    for b in targets:
        rep = detect(wave, b, cfg, method=args.method)
        decisions.append(rep.decision)
        emit(rep.to_json())
    return EXIT_OK if all(decisions) else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tapesum", description=__doc__.splitlines()[0])
    p.add_argument("--out", help="also write the JSON lines to this file")
    sub = p.add_subparsers(dest="cmd", required=True)

    def detector_flags(sp):
        sp.add_argument("--gamma", default="1")
        sp.add_argument("--epsilon", default=None)
        sp.add_argument("--rate", type=int, default=None)
        sp.add_argument("--duration", default=None)
        sp.add_argument("--noise", type=float, default=0.0)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--threshold", type=float, default=0.5)

    s = sub.add_parser("solve", help="answer one instance with one backend")
    s.add_argument("instance")
    s.add_argument("--backend", default="tape-count", choices=[b.value for b in Backend])
    s.add_argument("--target", default=None)
    s.add_argument("--cap", type=int, default=2**22)
    s.add_argument("--K", type=int, default=None, help="sample count for spectral-conv / dc-integral")
    detector_flags(s)
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("compare", help="cross-check exact backends against the oracle")
    c.add_argument("instance", nargs="?")
    c.add_argument("--random", type=int, default=200, help="seeded random instances when no file")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--max-n", type=int, default=14)
    c.add_argument("--max-value", type=int, default=64)
    c.add_argument("--variants", default="natural,integer")
    c.add_argument("--K", type=int, default=None, help="force the convolution sample count")
    c.set_defaults(func=cmd_compare)

    b = sub.add_parser("bench", help="runtime growth with log-log slope fits")
    b.add_argument("--ns", default="1000:10000:1000")
    b.add_argument("--max-value", type=int, default=2 * 10**9)
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--backends", default="generation")
    b.add_argument("--family", choices=["random", "pow2"], default="random")
    b.add_argument("--cap", type=int, default=2**22)
    b.add_argument("--max-cells", type=int, default=5_000_000)
    b.add_argument("--csv", default=None, help="write timing rows as CSV")
    b.set_defaults(func=cmd_bench)

    t = sub.add_parser("tm-run", help="run a Turing machine on the polynomial tape")
    t.add_argument("machine", help=f"JSON file or one of {', '.join(MACHINES)}")
    t.add_argument("--input", default="", help="cell symbols, e.g. '1 1 1'")
    t.add_argument("--max-steps", type=int, default=10_000)
    t.add_argument("--trace", action="store_true")
    t.set_defaults(func=cmd_tm_run)

    d = sub.add_parser("detect", help="synthesize the sampled signal and detect sums")
    d.add_argument("instance")
    d.add_argument("--target", default=None, help="comma-separated sums to query")
    d.add_argument("--method", choices=["direct", "goertzel"], default="direct")
    d.add_argument("--export", default=None, help="write the waveform (SSWF format)")
    detector_flags(d)
    d.set_defaults(func=cmd_detect)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    emit = Emitter(args.out)
    try:
        return args.func(args, emit)
    except (TapeSumError, ValueError, OSError, KeyError) as e:
        err = e.to_json() if isinstance(e, TapeSumError) else {"error": type(e).__name__,
                                                                 "message": str(e)}
        emit(err)
        return EXIT_ERROR
    finally:
        emit.close()


if __name__ == "__main__":
    sys.exit(main())
