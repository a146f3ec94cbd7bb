"""Print cdim_p and dim of X(p^m; D), deg D = p^n, for a range of p and n."""

import argparse

from motivec.candim import incompressibility_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", default="2,3,5")
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()

    print(f"{'p':>3} {'n':>3} {'m':>3} {'cdim_p':>12} {'dim':>12}  incompressible")
    for p in map(int, args.primes.split(",")):
        for n in range(args.max_n + 1):
            for r in incompressibility_table(p, n):
                print(f"{p:>3} {n:>3} {r.m:>3} {r.cdim_p:>12} {r.dim:>12}  {r.incompressible}")


if __name__ == "__main__":
    main()
