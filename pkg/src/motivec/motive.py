"""Motives as Krull-Schmidt multisets of shifted indecomposable labels.

A :class:`MotiveExpr` is a formal direct sum of terms ``(label, shift)``
over a context algebra. By Krull-Schmidt a complete decomposition is
unique up to permutation, so expressions are stored sorted and compared
as multisets.

Labels:

* ``TATE``: the Tate motive; ``(TATE, i)`` is Lambda(i).
* ``UPPER(l)``: the upper motive M_{l,D} of X(p^l; D), D the division
  algebra in the class of the context.
* ``PRODUCT(i_1, ..., i_r)``: the not-yet-resolved motive of
  X(i_1; C) x ... x X(i_r; C), C the context algebra.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from math import prod
from typing import Iterable

from motivec.arith import DomainError, QPoly, binom, gauss_binom, qpoly_product, vp
from motivec.csa import AlgebraClass

TATE, UPPER, PRODUCT = "TATE", "UPPER", "PRODUCT"
_KIND_ORDER = {TATE: 0, UPPER: 1, PRODUCT: 2}


@dataclass(frozen=True)
class Label:
    kind: str
    l: int = 0
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise DomainError(f"unknown label kind {self.kind!r}")
        if self.l < 0:
            raise DomainError("UPPER label needs l >= 0")
        object.__setattr__(self, "parts", tuple(sorted(int(i) for i in self.parts)))

    @classmethod
    def tate(cls) -> Label:
        return cls(TATE)

    @classmethod
    def upper(cls, l: int) -> Label:
        return cls(UPPER, l=l)

    @classmethod
    def product(cls, parts: Iterable[int]) -> Label:
        return cls(PRODUCT, parts=tuple(parts))

    @property
    def is_tate(self) -> bool:
        return self.kind == TATE

    def sort_key(self) -> tuple:
        if self.kind == UPPER:
            return (1, self.l)
        if self.kind == PRODUCT:
            return (2, self.parts)
        return (0,)

    def __str__(self) -> str:
        if self.kind == UPPER:
            return f"UPPER({self.l})"
        if self.kind == PRODUCT:
            return f"PRODUCT({','.join(map(str, self.parts))})"
        return TATE

    @classmethod
    def parse(cls, text: str) -> Label:
        if text == TATE:
            return cls.tate()
        m = re.fullmatch(r"UPPER\((\d+)\)", text)
        if m:
            return cls.upper(int(m.group(1)))
        m = re.fullmatch(r"PRODUCT\(([\d,]*)\)", text)
        if m:
            body = m.group(1)
            return cls.product(int(x) for x in body.split(",") if x)
        raise DomainError(f"cannot parse label {text!r}")


def _normalize(label: Label, context: AlgebraClass) -> Label:
    if label.kind == UPPER:
        if context.p**label.l > context.index:
            raise DomainError(f"UPPER({label.l}) needs p^l <= index {context.index}")
        return label
    if label.kind == PRODUCT:
        deg = context.degree
        if any(not 0 <= i <= deg for i in label.parts):
            raise DomainError(f"PRODUCT parts {label.parts} out of range [0, {deg}]")
        # X(0; C) and X(deg C; C) are points
        parts = [i for i in label.parts if 0 < i < deg]
        return Label.product(parts) if parts else Label.tate()
    return label


Term = tuple[Label, int]


@dataclass(frozen=True)
class MotiveExpr:
    """Finite direct sum of shifted labels over ``context``.

    ``terms`` is kept in canonical order (by shift, then label), so ``==``
    is multiset equality.
    """

    context: AlgebraClass
    terms: tuple[Term, ...] = field(default=())

    def __post_init__(self):
        terms = []
        for label, shift in self.terms:
            if shift < 0:
                raise DomainError("shifts must be non-negative")
            terms.append((_normalize(label, self.context), int(shift)))
        terms.sort(key=lambda t: (t[1], t[0].sort_key()))
        object.__setattr__(self, "terms", tuple(terms))

    @classmethod
    def tate(cls, context: AlgebraClass, shifts: Iterable[int] = (0,)) -> MotiveExpr:
        return cls(context, tuple((Label.tate(), s) for s in shifts))

    @classmethod
    def from_poincare(cls, context: AlgebraClass, poly: QPoly) -> MotiveExpr:
        """Split motive with ``coeff(i)`` copies of Lambda(i)."""
        return cls.tate(context, (i for i, c in enumerate(poly.coeffs) for _ in range(c)))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def is_split(self) -> bool:
        return all(label.is_tate for label, _ in self.terms)

    @property
    def shifts(self) -> list[int]:
        return [s for _, s in self.terms]

    def counts(self) -> Counter:
        return Counter(self.terms)

    def __add__(self, other: MotiveExpr) -> MotiveExpr:
        return direct_sum(self, other)

    def __mul__(self, other: MotiveExpr) -> MotiveExpr:
        return tensor(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for label, s in self.terms:
            name = "L" if label.is_tate else str(label)
            out.append(name if s == 0 else f"{name}({s})")
        return " + ".join(out)

    def to_dict(self) -> dict:
        return {
            "context": {
                "degree": str(self.context.degree),
                "index": str(self.context.index),
                "p": str(self.context.p),
            },
            "terms": [
                {"label": str(label), "shift": str(s), "rank_hypothesis": str(label_rank(label, self.context))}
                for label, s in self.terms
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> MotiveExpr:
        ctx = data["context"]
        context = AlgebraClass(int(ctx["degree"]), int(ctx["index"]), int(ctx["p"]))
        return cls(context, tuple((Label.parse(t["label"]), int(t["shift"])) for t in data["terms"]))


def _same_context(a: MotiveExpr, b: MotiveExpr) -> None:
    if a.context != b.context:
        raise DomainError(f"context mismatch: {a.context} vs {b.context}")


def direct_sum(a: MotiveExpr, b: MotiveExpr) -> MotiveExpr:
    _same_context(a, b)
    return MotiveExpr(a.context, a.terms + b.terms)


def _as_parts(label: Label, context: AlgebraClass) -> tuple[int, ...]:
    if label.kind == PRODUCT:
        return label.parts
    if label.kind == UPPER:
        # hypothesis mode: M_{l,D} is the whole motive of X(p^l; D)
        if not context.is_division:
            raise DomainError("UPPER labels only tensor over a division context")
        return (context.p**label.l,)
    return ()


def _tensor_labels(x: Label, y: Label, context: AlgebraClass) -> Label:
    if x.is_tate:
        return y
    if y.is_tate:
        return x
    xs, ys = _as_parts(x, context), _as_parts(y, context)
    # UPPER(l) with p^l = deg C is the motive of a point
    if all(i in (0, context.degree) for i in xs):
        return y
    if all(i in (0, context.degree) for i in ys):
        return x
    return Label.product(xs + ys)


def tensor(a: MotiveExpr, b: MotiveExpr) -> MotiveExpr:
    _same_context(a, b)
    return MotiveExpr(
        a.context,
        tuple((_tensor_labels(x, y, a.context), i + j) for x, i in a.terms for y, j in b.terms),
    )


def shift_by(a: MotiveExpr, s: int) -> MotiveExpr:
    if s < 0:
        raise DomainError("shift must be non-negative")
    return MotiveExpr(a.context, tuple((label, i + s) for label, i in a.terms))


def label_rank(label: Label, context: AlgebraClass) -> int:
    """Rank of a label in hypothesis mode."""
    if label.kind == UPPER:
        if context.p ** vp(context.index, context.p) != context.index:
            raise DomainError("UPPER ranks need a p-power context index")
        return binom(context.index, context.p**label.l)
    if label.kind == PRODUCT:
        return prod(binom(context.degree, i) for i in label.parts)
    return 1


def rank(a: MotiveExpr, mode: str = "hypothesis") -> int:
    """Number of Tate motives over a splitting field.

    Only ``mode="hypothesis"`` is supported: UPPER(l) counts as the full
    motive of X(p^l; D), whose rank is binom(ind, p^l). The result is
    conditional on that assumption whenever UPPER labels occur.
    """
    if mode != "hypothesis":
        raise DomainError(f"unsupported rank mode {mode!r}")
    return sum(label_rank(label, a.context) for label, _ in a.terms)


def vp_rank(a: MotiveExpr) -> int:
    r = rank(a)
    if r == 0:
        raise DomainError("rank 0 has no valuation")
    return vp(r, a.context.p)


def krull_schmidt_equal(a: MotiveExpr, b: MotiveExpr) -> bool:
    _same_context(a, b)
    return a.terms == b.terms


def _require_split(a: MotiveExpr, what: str) -> None:
    if not a.is_split:
        raise DomainError(f"{what} is defined on split expressions only")


def dual(a: MotiveExpr, d: int) -> MotiveExpr:
    """Lambda(i) -> Lambda(d - i) on a split expression."""
    _require_split(a, "dual")
    if any(s > d for s in a.shifts):
        raise DomainError(f"shift exceeds dimension {d}")
    return MotiveExpr.tate(a.context, (d - s for s in a.shifts))


def is_upper(a: MotiveExpr) -> bool:
    _require_split(a, "is_upper")
    return 0 in a.shifts


def is_lower(a: MotiveExpr, d: int) -> bool:
    _require_split(a, "is_lower")
    return d in a.shifts


def is_outer(a: MotiveExpr, d: int) -> bool:
    return is_upper(a) and is_lower(a, d)


def poincare(a: MotiveExpr) -> QPoly:
    _require_split(a, "poincare")
    return QPoly.from_exponents(a.shifts)


def hypothesis_poincare(a: MotiveExpr) -> QPoly:
    """Poincare polynomial over a splitting field, in hypothesis mode.

    TATE counts 1, PRODUCT(parts) the product of [deg, i]_q and UPPER(l)
    the full [ind, p^l]_q of X(p^l; D), each times q^shift.
    """
    ctx = a.context
    out = QPoly()
    for label, s in a.terms:
        if label.kind == UPPER:
            if not ctx.is_division:
                raise DomainError("UPPER Poincare polynomials need a division context")
            poly = gauss_binom(ctx.index, ctx.p**label.l)
        else:
            poly = qpoly_product([gauss_binom(ctx.degree, i) for i in label.parts])
        out = out + poly.shift(s)
    return out
