"""Exit criteria. Each test records one PASS/FAIL line, printed in the
terminal summary, and enforces its time budget."""

import itertools
import random
import time
from contextlib import contextmanager
from math import comb

import pytest

from conftest import ACCEPTANCE_RESULTS, random_expr
from motivec.arith import QPoly, binom, gauss_binom, qpoly_product, vp_binom
from motivec.candim import incompressibility_table
from motivec.csa import AlgebraClass, closed_point_gcd, index_reduction
from motivec.motive import Label, MotiveExpr, krull_schmidt_equal, rank
from motivec.split import schubert_cells, split_grassmannian_motive
from motivec.tower import X1, X2, ProofTrace, decomposition_2_2n, recheck_record, shift_rule, verify_basic2


@contextmanager
def criterion(name, budget):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ok = ok and elapsed < budget
        ACCEPTANCE_RESULTS.append((name, ok, elapsed))
        print(f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f} s)")
    assert elapsed < budget, f"{name} took {elapsed:.2f} s, budget {budget} s"


def test_1_rank_identity():
    with criterion("1 rank of split Gr(k, d) = binom(d, k), d <= 12", 1.0):
        for d in range(13):
            for k in range(d + 1):
                assert rank(split_grassmannian_motive(d, k)) == comb(d, k)


def test_2_schubert_oracle():
    with criterion("2 Tate shifts of split Gr(k, d) = Schubert cells, d <= 12", 5.0):
        for d in range(13):
            for k in range(d + 1):
                assert sorted(split_grassmannian_motive(d, k).shifts) == list(schubert_cells(d, k))


def test_3_kummer_valuation():
    with criterion("3 v_p binom(p^n, p^m) = n - m, p in {2,3,5}, m <= n <= 6", 1.0):
        for p in (2, 3, 5):
            for n in range(7):
                for m in range(n + 1):
                    assert vp_binom(p**n, p**m, p) == n - m


def test_4_shift_rule_vandermonde():
    with criterion("4 q-Vandermonde identity for the shift rule, p in {2,3}, n <= 3", 10.0):
        for p in (2, 3):
            for n in range(1, 4):
                d = p ** (n - 1)
                for m in range(n):
                    total = QPoly()
                    for c in itertools.product(range(d + 1), repeat=p):
                        if sum(c) == p**m:
                            term = qpoly_product([gauss_binom(d, i) for i in c])
                            total = total + term.shift(shift_rule(c, d))
                    assert total == gauss_binom(p**n, p**m)


def test_5_two_two_n_fixtures():
    with criterion("5 decompositions of X(1;D), X(2;D) for deg D = 2^n, n = 2..5", 1.0):
        for n in range(2, 6):
            h = 2 ** (n - 1)
            C = AlgebraClass(h, h, 2)
            M0, M1 = Label.upper(0), Label.upper(1)
            x1 = MotiveExpr(C, ((M0, 0), (M0, h)))
            x2 = MotiveExpr(C, ((M1, 0),) + tuple((M0, s) for s in range(h - 1, 2 * h - 1)) + ((M1, 2 * h),))
            assert krull_schmidt_equal(decomposition_2_2n(n, X1), x1)
            assert krull_schmidt_equal(decomposition_2_2n(n, X2), x2)
            assert rank(x2) == binom(2**n, 2)
            assert rank(x1) == binom(2**n, 1)


def test_6_proof_trace():
    with criterion("6 replay of the rank valuation argument, p in {2,3,5}, n <= 4", 30.0):
        for p in (2, 3, 5):
            for n in range(1, 5):
                trace = verify_basic2(p, n)
                assert trace.verdict == "PASS", trace.failures()
                replayed = ProofTrace.from_dict(trace.to_dict())
                for rec in replayed.records:
                    assert recheck_record(rec, p, n) == rec.checks
                    assert rec.concluded_valuation == n - rec.m
                    if rec.m >= 1:
                        assert rec.checks["non_diagonal_count_divisible_by_p"]
                        assert rec.checks["orbit_sizes_are_p"]
                        assert rec.checks["diagonal_exceeds_bound"]
                        assert rec.diagonal_rank_valuation == p * (n - rec.m) > n - rec.m


def test_7_incompressibility_table():
    with criterion("7 cdim_p X(p^m;D) = dim = p^m(p^n - p^m), p in {2,3,5}, n <= 5", 1.0):
        for p in (2, 3, 5):
            for n in range(6):
                rows = incompressibility_table(p, n)
                assert len(rows) == n + 1
                for m, row in enumerate(rows):
                    expected = p**m * (p**n - p**m)
                    assert row.cdim_p == row.dim == expected
                    assert row.incompressible


def test_8_index_reduction_identity():
    rng = random.Random(20261018)
    with criterion("8 ind = gcd * closed-point quotient on 1000 random inputs", 1.0):
        for _ in range(1000):
            p = rng.choice([2, 3, 5, 7])
            index = rng.randint(1, 200)
            degree = index * rng.randint(1, 5)
            if degree < 2:
                degree = 2
            alg = AlgebraClass(degree, index, p)
            dims = [rng.randint(1, degree - 1) for _ in range(rng.randint(1, 4))]
            assert closed_point_gcd(alg, dims) * index_reduction(alg, dims) == index


def test_9_krull_schmidt_laws():
    rng = random.Random(5)
    with criterion("9 direct sum / tensor laws and rank homomorphism on 500 random expressions", 5.0):
        for _ in range(500):
            a, b, c = (random_expr(rng) for _ in range(3))
            assert krull_schmidt_equal(a + b, b + a)
            assert krull_schmidt_equal((a + b) + c, a + (b + c))
            assert krull_schmidt_equal(a * b, b * a)
            assert krull_schmidt_equal((a * b) * c, a * (b * c))
            assert krull_schmidt_equal(a * (b + c), a * b + a * c)
            assert rank(a + b) == rank(a) + rank(b)
            assert rank(a * b) == rank(a) * rank(b)
