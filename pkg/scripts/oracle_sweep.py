#!/usr/bin/env python3
"""Randomized dual-path sweep: Taylor block homology against reduced
cohomology of full subcomplexes, over Q, F2, and Z.

  python scripts/oracle_sweep.py --trials 500 --seed 7 --max-m 7 --max-s 5

Equivalent to `facetor verify --random ...` but prints a running tally
and per-trial block counts, which is handier for long experiments.
"""

import argparse
import random
import sys
import time
from pathlib import Path

try:
    import facetor
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
    import facetor  # noqa: F401

from facetor import QQ, ZZ, PrimeField, baskakov_check, popcount, taylor_complex
from facetor.sampling import random_complement

COEFFS = (QQ, PrimeField(2), ZZ)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-m", type=int, default=7)
    ap.add_argument("--max-s", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    start = time.monotonic()
    checks = failures = 0
    for trial in range(args.trials):
        P = random_complement(rng, args.max_m, args.max_s)
        tc = taylor_complex(P)
        trial_checks = 0
        for sigma in tc.supports():
            for q in range(0, max(tc.max_degree(sigma), popcount(sigma)) + 1):
                for coeff in COEFFS:
                    trial_checks += 1
                    if not baskakov_check(P, sigma, q, coeff):
                        failures += 1
                        print(f"FAIL trial={trial} P={P} sigma={sigma} q={q} coeff={coeff}")
        checks += trial_checks
        if (trial + 1) % 50 == 0:
            print(f"  ... {trial + 1} trials, {checks} checks, {failures} failures")
    elapsed = time.monotonic() - start
    print(f"{args.trials} trials, {checks} checks, {failures} failures in {elapsed:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
