"""Replay the rank-valuation induction for many (p, n) and report timings.

    python scripts/sweep_basic2.py --primes 2,3,5,7 --max-n 6
"""

import argparse
import time

from motivec.tower import verify_basic2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", default="2,3,5,7")
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()

    failed = 0
    for p in map(int, args.primes.split(",")):
        for n in range(1, args.max_n + 1):
            start = time.perf_counter()
            trace = verify_basic2(p, n)
            elapsed = time.perf_counter() - start
            orbits = sum(len(r.orbit_sizes) for r in trace.records)
            print(f"p={p} n={n} {trace.verdict} levels={len(trace.records)} orbits={orbits} {elapsed:.3f}s")
            if not trace.passed:
                failed += 1
                for m, name in trace.failures():
                    print(f"    m={m}: {name}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
