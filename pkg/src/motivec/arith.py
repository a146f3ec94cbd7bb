"""Integer arithmetic: p-adic valuations, binomials and Gaussian binomials.

Python ints are arbitrary precision, so nothing here can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence


class DomainError(ValueError):
    """Raised when an operation is called outside its domain."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    """Return ``p`` unchanged, raising DomainError unless it is prime."""
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"{p!r} is not a prime")
    return p


def vp(x: int, p: int) -> int:
    """Exponent of the highest power of ``p`` dividing ``x`` (``x >= 1``)."""
    check_prime(p)
    if x < 1:
        raise DomainError(f"valuation of {x} is undefined")
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def binom(n: int, k: int) -> int:
    if n < 0:
        raise DomainError(f"binom needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def base_p_digits(x: int, p: int) -> list[int]:
    digits = []
    while x:
        x, r = divmod(x, p)
        digits.append(r)
    return digits


def vp_binom(n: int, k: int, p: int) -> int:
    """v_p of binom(n, k) by counting carries when adding k and n-k in base p."""
    check_prime(p)
    if not 0 <= k <= n:
        raise DomainError(f"vp_binom needs 0 <= k <= n, got n={n}, k={k}")
    a = base_p_digits(k, p)
    b = base_p_digits(n - k, p)
    carries = carry = 0
    for i in range(max(len(a), len(b))):
        s = (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) + carry
        carry = 1 if s >= p else 0
        carries += carry
    return carries


@dataclass(frozen=True)
class QPoly:
    """Polynomial in ``q`` with non-negative integer coefficients.

    ``coeffs[j]`` is the coefficient of ``q**j``; trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        if any(x < 0 for x in c):
            raise DomainError("QPoly coefficients must be non-negative")
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def one(cls) -> QPoly:
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> QPoly:
        if exponent < 0:
            raise DomainError("negative exponent")
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPoly:
        """Generating polynomial of a multiset of exponents."""
        out: list[int] = []
        for e in exponents:
            if e < 0:
                raise DomainError("negative exponent")
            if e >= len(out):
                out.extend([0] * (e + 1 - len(out)))
            out[e] += 1
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        """Top exponent; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __add__(self, other: QPoly) -> QPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __mul__(self, other: QPoly) -> QPoly:
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPoly(tuple(out))

    def shift(self, s: int) -> QPoly:
        if s < 0:
            raise DomainError("shift must be non-negative")
        if not self.coeffs:
            return self
        return QPoly((0,) * s + self.coeffs)

    def eval1(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("q" if j == 1 else f"q^{j}")
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts)


def qpoly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def qpoly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def qpoly_shift(a: QPoly, s: int) -> QPoly:
    return a.shift(s)


def qpoly_eval1(a: QPoly) -> int:
    return a.eval1()


def qpoly_product(polys: Sequence[QPoly]) -> QPoly:
    out = QPoly.one()
    for f in polys:
        out = out * f
    return out


@lru_cache(maxsize=None)
def gauss_binom(n: int, k: int) -> QPoly:
    """Gaussian binomial [n choose k]_q via the q-Pascal rule

        [n, k] = [n-1, k-1] + q^k [n-1, k].

    Iterates over n row by row, so large ``n`` costs no recursion depth.
    """
    if n < 0:
        raise DomainError(f"gauss_binom needs n >= 0, got {n}")
    if k < 0 or k > n:
        return QPoly()
    k = min(k, n - k)
    # row[j] = [m, j] for the current m, j = 0..k
    row = [QPoly.one()] + [QPoly()] * k
    for _ in range(n):
        row = [QPoly.one()] + [row[j - 1] + row[j].shift(j) for j in range(1, k + 1)]
    return row[k]
