"""Tate decompositions of split grassmannians and flag varieties, with a
brute-force Schubert cell count to check them against."""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Sequence

from motivec.arith import DomainError, QPoly, gauss_binom
from motivec.csa import AlgebraClass, normalize_dims
from motivec.motive import MotiveExpr


def _split_context(d: int, p: int) -> AlgebraClass:
    # Gr(0, 0) is a point; give it the degree-1 context
    return AlgebraClass(max(d, 1), 1, p)


def split_grassmannian_motive(d: int, k: int, p: int = 2) -> MotiveExpr:
    if not 0 <= k <= d:
        raise DomainError(f"Gr({k}, {d}) needs 0 <= k <= d")
    return MotiveExpr.from_poincare(_split_context(d, p), gauss_binom(d, k))


def flag_poincare(d: int, dims: Sequence[int]) -> QPoly:
    """q-multinomial: [d, i_r] * flag(i_r; i_1..i_{r-1})."""
    dims = normalize_dims(d, dims) if dims else ()
    poly = QPoly.one()
    top = d
    for i in reversed(dims):
        poly = poly * gauss_binom(top, i)
        top = i
    return poly


def split_flag_motive(d: int, dims: Sequence[int], p: int = 2) -> MotiveExpr:
    return MotiveExpr.from_poincare(_split_context(d, p), flag_poincare(d, dims))


def box_partitions(rows: int, cols: int):
    """All partitions with at most ``rows`` parts, each at most ``cols``."""
    for c in combinations_with_replacement(range(cols + 1), rows):
        yield tuple(reversed(c))


def schubert_cells(d: int, k: int) -> tuple[int, ...]:
    """Sorted cell dimensions |lambda| over partitions in a k x (d-k) box."""
    if not 0 <= k <= d:
        raise DomainError(f"Gr({k}, {d}) needs 0 <= k <= d")
    return tuple(sorted(sum(lam) for lam in box_partitions(k, d - k)))
