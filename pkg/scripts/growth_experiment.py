"""Time each backend over a range of N and fit log-log slopes.

    python scripts/growth_experiment.py --out results/growth
writes growth.json and growth.csv next to the given prefix.
"""
import argparse
import json
from pathlib import Path

from tapesum.harness import bench, bench_rows_csv


def parse_args(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ns", default="1000:10000:1000", help="start:stop:step, inclusive")
    ap.add_argument("--max-value", type=int, default=2 * 10**9)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--backends", default="generation", help="comma list; tape and conv backends skip huge S")
    ap.add_argument("--pow2", default="8:20:1", help="N range for the adversarial genfunc sweep")
    ap.add_argument("--out", default="growth")
    return ap.parse_args(argv)


def span(spec):
    a, b, c = (int(x) for x in spec.split(":"))
    return range(a, b + 1, c)


def main(argv=None):
    args = parse_args(argv)
    rep = bench(span(args.ns), max_value=args.max_value, reps=args.reps, seed=args.seed,
                backends=args.backends.split(","))
    adv = bench(span(args.pow2), reps=1, backends=["genfunc"], family="pow2")
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.with_suffix(".json").write_text(json.dumps({"random": rep.to_json(), "pow2": adv.to_json()}, indent=2))
    out.with_suffix(".csv").write_text(bench_rows_csv(rep))
    for name, s in rep.slopes.items():
        print(f"{name:>14}: slope {s:.3f}" if s is not None else f"{name:>14}: not enough rows")
    print("pow2 terms:", [r.get("terms") for r in adv.rows])
    print("generation within bound:", rep.generation_ok())


if __name__ == "__main__":
    main()
