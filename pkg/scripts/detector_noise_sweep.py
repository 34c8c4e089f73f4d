"""Detector accuracy on random instances as the noise amplitude grows."""
import argparse

import numpy as np

from tapesum.core import Variant
from tapesum.detector import DetectorConfig, detect, synthesize
from tapesum.harness import random_instance
from tapesum.oracle import enumerate_subsets
from tapesum.spectral import generate


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--levels", default="0,0.1,0.2,0.4,0.8,1.6")
    args = ap.parse_args(argv)
    for level in (float(x) for x in args.levels.split(",")):
        rng = np.random.default_rng(args.seed)
        hits = 0
        for t in range(args.trials):
            inst = random_instance(rng, int(rng.integers(1, 13)), 20, Variant.NATURAL)
            sig = generate(inst)
            b = int(rng.integers(0, inst.total + 1))
            cfg = DetectorConfig.for_signal(sig, noise_amplitude=level, seed=t)
            hits += detect(synthesize(sig, cfg), b, cfg).decision == (enumerate_subsets(inst).multiplicity(b) > 0)
        print(f"noise {level:4.2f}: {hits / args.trials:.3f}")


if __name__ == "__main__":
    main()
