"""Central simple algebras reduced to (degree, index, p), their flag
varieties of right ideals, and finite products of those."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from motivec.arith import DomainError, check_prime


@dataclass(frozen=True)
class AlgebraClass:
    """A central simple algebra, remembered only through its degree, its
    index and the prime ``p`` we work at."""

    degree: int
    index: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        if self.degree < 1 or self.index < 1:
            raise DomainError("degree and index must be positive")
        if self.degree % self.index:
            raise DomainError(f"index {self.index} does not divide degree {self.degree}")

    @property
    def is_split(self) -> bool:
        return self.index == 1

    @property
    def is_division(self) -> bool:
        return self.index == self.degree


def p_primary_division(p: int, n: int) -> AlgebraClass:
    """The division algebra D of degree p^n."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return AlgebraClass(p**n, p**n, p)


def normalize_dims(degree: int, dims: Iterable[int]) -> tuple[int, ...]:
    """Sort and deduplicate reduced dimensions, checking each lies in (0, degree)."""
    out = tuple(sorted(set(int(i) for i in dims)))
    if not out:
        raise DomainError("a flag needs at least one reduced dimension")
    bad = [i for i in out if not 0 < i < degree]
    if bad:
        raise DomainError(f"reduced dimensions {bad} not in the open interval (0, {degree})")
    return out


@dataclass(frozen=True)
class FlagDescriptor:
    """The variety X(i_1, ..., i_r; A) of flags of right ideals."""

    algebra: AlgebraClass
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", normalize_dims(self.algebra.degree, self.dims))

    @property
    def dim(self) -> int:
        return dim_flag(self.algebra.degree, self.dims)

    def __str__(self) -> str:
        return f"X({','.join(map(str, self.dims))};A)"


@dataclass(frozen=True)
class ProductVariety:
    factors: tuple[FlagDescriptor, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise DomainError("a product needs at least one factor")
        if len({f.algebra for f in factors}) != 1:
            raise DomainError("all factors must share one algebra")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, algebra: AlgebraClass, *dims_lists: Sequence[int]) -> ProductVariety:
        return cls(tuple(FlagDescriptor(algebra, tuple(d)) for d in dims_lists))

    @property
    def algebra(self) -> AlgebraClass:
        return self.factors[0].algebra

    @property
    def dim(self) -> int:
        return dim_product(self)

    def __str__(self) -> str:
        return " x ".join(map(str, self.factors))


def index_reduction(alg: AlgebraClass, dims: Sequence[int]) -> int:
    """Index of A over the function field of X(dims; A): gcd(dims, ind A)."""
    dims = normalize_dims(alg.degree, dims)
    return reduce(gcd, dims, alg.index)


def generic_index(product: ProductVariety) -> int:
    """Index of A over the function field of the product.

    Adjoining the function fields one factor at a time applies the flag
    formula repeatedly, which amounts to one big gcd.
    """
    ind = product.algebra.index
    for f in product.factors:
        ind = index_reduction(AlgebraClass(f.algebra.degree, ind, f.algebra.p), f.dims)
    return ind


def closed_point_gcd(alg: AlgebraClass, dims: Sequence[int]) -> int:
    """gcd of the degrees of closed points on X(dims; A)."""
    return alg.index // index_reduction(alg, dims)


def product_closed_point_gcd(product: ProductVariety) -> int:
    return product.algebra.index // generic_index(product)


def dim_flag(degree: int, dims: Sequence[int]) -> int:
    dims = normalize_dims(degree, dims)
    nxt = dims[1:] + (degree,)
    return sum(i * (j - i) for i, j in zip(dims, nxt))


def dim_product(product: ProductVariety) -> int:
    return sum(dim_flag(f.algebra.degree, f.dims) for f in product.factors)
