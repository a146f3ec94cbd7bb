"""Canonical p-dimension of varieties in the class X_A.

For X a product of flag varieties of A, with n = v_p(ind A) and
m = v_p(ind A over F(X)), cdim_p X = p^m (p^n - p^m). X is
p-incompressible when this equals dim X.
"""

from __future__ import annotations

from dataclasses import dataclass

from motivec.arith import DomainError, vp
from motivec.csa import FlagDescriptor, ProductVariety, generic_index, p_primary_division


@dataclass(frozen=True)
class CanDimReport:
    variety: str
    p: int
    n: int
    m: int
    cdim_p: int
    dim: int

    def __post_init__(self):
        if self.cdim_p > self.dim:
            raise DomainError(f"cdim_p {self.cdim_p} exceeds dim {self.dim}")

    @property
    def incompressible(self) -> bool:
        return self.cdim_p == self.dim

    def to_dict(self) -> dict:
        return {
            "variety": self.variety,
            "p": str(self.p),
            "n": str(self.n),
            "m": str(self.m),
            "cdim_p": str(self.cdim_p),
            "dim": str(self.dim),
            "incompressible": self.incompressible,
        }

    @classmethod
    def from_dict(cls, data: dict) -> CanDimReport:
        report = cls(
            data["variety"],
            *(int(data[k]) for k in ("p", "n", "m", "cdim_p", "dim")),
        )
        if report.incompressible != data["incompressible"]:
            raise DomainError("inconsistent incompressibility flag")
        return report


def cdim_formula(p: int, n: int, m: int) -> int:
    return p**m * (p**n - p**m)


def cdim_p(product: ProductVariety | FlagDescriptor) -> CanDimReport:
    if isinstance(product, FlagDescriptor):
        product = ProductVariety((product,))
    alg = product.algebra
    p = alg.p
    # the p-primary part of A carries all the p-local information
    n = vp(alg.index, p)
    m = vp(generic_index(product), p)
    return CanDimReport(str(product), p, n, m, cdim_formula(p, n, m), product.dim)


def incompressibility_table(p: int, n: int) -> list[CanDimReport]:
    """Reports for X(p^m; D), m = 0..n, with D division of degree p^n.

    The m = n row is X(p^n; D), a point; it is built directly since a flag
    descriptor needs a reduced dimension strictly inside (0, deg D).
    """
    D = p_primary_division(p, n)
    rows = []
    for m in range(n + 1):
        if m < n:
            rows.append(cdim_p(FlagDescriptor(D, (p**m,))))
        else:
            rows.append(CanDimReport(f"X({p**n};A)", p, n, n, cdim_formula(p, n, n), 0))
    return rows
