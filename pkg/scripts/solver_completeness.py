#!/usr/bin/env python3
"""Empirical find-rate of the level-set solver on planted instances.

Every instance hides a subset summing to exactly I/2, so a perfect solver
would find a band member every time; the theory promises a find rate of at
least 1 - 2/d.  Prints the rate and timing per configuration.
"""
import argparse
import time

from ks2.instance import gen_planted
from ks2.solver import solve
from ks2.instance import check_subset


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--k", type=int, default=8, help="planted pairs (m = 2k)")
    ap.add_argument("--seeds", type=int, default=50)
    ap.add_argument("--c", type=float, default=0.1)
    ap.add_argument("--epsilon", type=float, default=0.3)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    print(f"{'d':>3} {'m':>4} {'found':>9} {'rate':>6} {'1-2/d':>6} {'sec/run':>8}")
    for d in args.d:
        k = max(args.k, d)
        found = 0
        t0 = time.time()
        for seed in range(args.seeds):
            inst, _ = gen_planted(d, k, seed=seed)
            out = solve(inst, args.c, args.epsilon, seed=seed, threads=args.threads)
            if out.found:
                assert check_subset(inst, out.subset, args.c, args.epsilon).satisfies_eq2
                found += 1
        per = (time.time() - t0) / args.seeds
        print(f"{d:>3} {2 * k:>4} {found:>4}/{args.seeds:<4} {found / args.seeds:>6.2f}"
              f" {1 - 2 / d:>6.2f} {per:>8.2f}")


if __name__ == "__main__":
    main()
