#!/usr/bin/env python3
"""How the Lipschitz-ratio lower bound grows with the scan depth.

Builds the genus-g regular-polygon Fuchsian representation rho and three
targets sigma (rho itself, a conjugate of rho, and the trivial
representation), then tabulates the lower bound, witness word, word
count and wall time for each depth N.  The rho/conjugate rows should
hug 1 from below while the trivial rows stay at 0.

    python3 scripts/lipschitz_growth.py --genus 2 --max-depth 5
"""

import argparse
import random
import sys
import time

from adsvol import admissibility, reps


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--genus", type=int, default=2)
    parser.add_argument("--max-depth", type=int, default=5,
                        help="largest reduced-word length to scan, default 5")
    parser.add_argument("--seed", type=int, default=0)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    rng = random.Random(args.seed)
    rho = reps.fuchsian_regular_polygon(args.genus)
    conjugator = reps.Moebius(
        [[1.0 + rng.random(), rng.random()], [rng.random(), 1.0 + rng.random()]]
    )
    targets = [
        ("rho itself", rho),
        ("conjugate of rho", reps.conjugate(rho, conjugator)),
        ("trivial", reps.trivial_representation(args.genus)),
    ]
    print(f"{'target':<18} {'N':>2} {'words':>9} {'bound':>18} {'witness':<14} {'secs':>7}")
    for label, sigma in targets:
        for depth in range(1, args.max_depth + 1):
            start = time.perf_counter()
            est = admissibility.lipschitz_lower_bound(rho, sigma, max_len=depth)
            elapsed = time.perf_counter() - start
            witness = list(est.witness.letters) if est.witness else []
            print(
                f"{label:<18} {depth:>2} {est.words_scanned:>9} "
                f"{est.lower_bound:>18.12f} {str(witness):<14} {elapsed:>7.3f}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
