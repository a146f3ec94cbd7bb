"""Tabulate the one-step decomposition of X(p^m; D) over F(X(p^(n-1); D))
and check it against the split grassmannian [p^n, p^m]_q."""

import argparse

from motivec.arith import binom, gauss_binom
from motivec.motive import hypothesis_poincare, rank
from motivec.tower import one_step, one_step_terms


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--m", type=int, default=1)
    args = ap.parse_args()
    p, n, m = args.p, args.n, args.m

    for comp, shift in one_step_terms(p, n, m):
        print(f"{str(comp):<24} shift {shift}")
    expr = one_step(p, n, m)
    print(f"rank {rank(expr)} (binom {binom(p**n, p**m)})")
    print("Poincare identity:", hypothesis_poincare(expr) == gauss_binom(p**n, p**m))


if __name__ == "__main__":
    main()
