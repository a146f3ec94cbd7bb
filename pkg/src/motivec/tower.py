"""One generic-splitting step for X(p^m; D), upper-motive classification,
and a replay of the valuation argument for the upper motives M_{m,D}.

Throughout, D is the division algebra of degree p^n and C the division
algebra of degree p^(n-1) it becomes over L = F(X(p^(n-1); D)).
Over L, M(X(p^m; D)) breaks into shifted motives of the products
X(i_1; C) x ... x X(i_p; C), one for every composition
i_1 + ... + i_p = p^m.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import reduce
from math import gcd
from typing import Iterator, Sequence

from motivec.arith import DomainError, check_prime, vp, vp_binom
from motivec.csa import (
    AlgebraClass,
    FlagDescriptor,
    ProductVariety,
    closed_point_gcd,
    generic_index,
    p_primary_division,
    product_closed_point_gcd,
)
from motivec.motive import PRODUCT, UPPER, Label, MotiveExpr, label_rank

Composition = tuple[int, ...]


def _compositions(parts: int, target: int, cap: int, step: int) -> Iterator[Composition]:
    if parts == 0:
        if target == 0:
            yield ()
        return
    # the remaining parts - 1 slots can absorb at most (parts - 1) * cap
    lo = max(0, target - (parts - 1) * cap)
    lo += -lo % step
    for first in range(lo, min(cap, target) + 1, step):
        for rest in _compositions(parts - 1, target - first, cap, step):
            yield (first,) + rest


def compositions(p: int, target: int, cap: int, step: int = 1) -> list[Composition]:
    """Length-``p`` tuples in ``[0, cap]`` summing to ``target``, lexicographic.

    With ``step > 1`` only tuples whose entries are all multiples of
    ``step`` are produced.
    """
    check_prime(p)
    if target < 0 or cap < 0 or step < 1:
        return []
    return list(_compositions(p, target, cap, step))


def shift_rule(c: Sequence[int], d: int) -> int:
    """Tate shift of the composition term: sum over j < j' of c[j'] * (d - c[j])."""
    if any(i > d or i < 0 for i in c):
        raise DomainError(f"composition {tuple(c)} has a part outside [0, {d}]")
    total = acc = 0
    for i in c:
        total += i * acc
        acc += d - i
    return total


def one_step_terms(p: int, n: int, m: int) -> list[tuple[Composition, int]]:
    """(composition, shift) pairs of M(X(p^m; D)) over L, lexicographic."""
    check_prime(p)
    if n < 1 or not 0 <= m < n:
        raise DomainError(f"one step needs 0 <= m < n, got n={n}, m={m}")
    d = p ** (n - 1)
    return [(c, shift_rule(c, d)) for c in compositions(p, p**m, d)]


def one_step(p: int, n: int, m: int) -> MotiveExpr:
    """M(X(p^m; D))_L as shifted, unresolved product motives over C."""
    context = p_primary_division(p, n - 1)
    return MotiveExpr(context, tuple((Label.product(c), s) for c, s in one_step_terms(p, n, m)))


def _infer_one_step(expr: MotiveExpr) -> tuple[int, int, int]:
    ctx = expr.context
    p = ctx.p
    if not ctx.is_division or p ** vp(ctx.degree, p) != ctx.degree or not expr.terms:
        raise DomainError("not a one-step decomposition")
    n = vp(ctx.degree, p) + 1
    d = ctx.degree
    top = max(expr.shifts)
    if top % ((p - 1) * d):
        raise DomainError("not a one-step decomposition")
    pm = top // ((p - 1) * d)
    m = vp(pm, p)
    if p**m != pm or m >= n or one_step(p, n, m) != expr:
        raise DomainError("not a one-step decomposition")
    return p, n, m


def upper_term(expr: MotiveExpr) -> tuple[Composition, int]:
    """The term (p^m, 0, ..., 0) at shift 0."""
    p, n, m = _infer_one_step(expr)
    c = (p**m,) + (0,) * (p - 1)
    return c, shift_rule(c, p ** (n - 1))


def lower_term(expr: MotiveExpr) -> tuple[Composition, int]:
    """The term (0, ..., 0, p^m) at shift p^m (p^n - p^(n-1))."""
    p, n, m = _infer_one_step(expr)
    c = (0,) * (p - 1) + (p**m,)
    return c, shift_rule(c, p ** (n - 1))


@dataclass(frozen=True)
class OrbitClass:
    representative: Composition
    size: int
    members: tuple[Composition, ...]


def rotations(c: Composition) -> list[Composition]:
    return [c[k:] + c[:k] for k in range(len(c))]


def cyclic_orbits(comps: Sequence[Composition]) -> list[OrbitClass]:
    """Group compositions into orbits of cyclic rotation of the indices.

    Orbits are listed in order of first appearance; the representative is
    the lexicographically smallest rotation.
    """
    groups: dict[Composition, list[Composition]] = {}
    for c in comps:
        c = tuple(c)
        groups.setdefault(min(rotations(c)), []).append(c)
    out = []
    for rep, members in groups.items():
        size = len(set(rotations(rep)))
        out.append(OrbitClass(rep, size, tuple(members)))
    return out


def comp_valuation(c: Sequence[int], p: int, n: int) -> int:
    """v_p of the generic index of X(c_1; C) x ... x X(c_p; C), deg C = p^(n-1)."""
    nonzero = [i for i in c if i]
    if not nonzero:
        raise DomainError("all-zero composition")
    return min(min(vp(i, p), n - 1) for i in nonzero)


@dataclass
class Basic2Record:
    """Everything the induction step at level m checks, with its inputs."""

    m: int
    sources: list[Composition]
    diagonal: Composition | None = None
    non_diagonal: list[Composition] = field(default_factory=list)
    orbit_sizes: list[int] = field(default_factory=list)
    orbit_representatives: list[Composition] = field(default_factory=list)
    diagonal_rank_valuation: int | None = None
    r: int | None = None
    lower_level_sources: list[Composition] = field(default_factory=list)
    closed_point_valuation: int = 0
    sub_rank_valuation: int = 0
    rank_valuation: int = 0
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def concluded_valuation(self) -> int:
        return self.rank_valuation

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


@dataclass
class ProofTrace:
    p: int
    n: int
    records: list[Basic2Record]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def failures(self) -> list[tuple[int, str]]:
        return [(r.m, name) for r in self.records for name, ok in r.checks.items() if not ok]

    def to_dict(self) -> dict:
        def enc(x):
            if isinstance(x, bool) or x is None:
                return x
            if isinstance(x, int):
                return str(x)
            if isinstance(x, (list, tuple)):
                return [enc(y) for y in x]
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            return x

        records = []
        for r in self.records:
            d = enc(asdict(r))
            d["concluded_valuation"] = str(r.concluded_valuation)
            d["verdict"] = "PASS" if r.passed else "FAIL"
            records.append(d)
        return {"p": str(self.p), "n": str(self.n), "verdict": self.verdict, "records": records}

    @classmethod
    def from_dict(cls, data: dict) -> ProofTrace:
        def comp(x):
            return tuple(int(i) for i in x)

        def opt(x):
            return None if x is None else int(x)

        records = []
        for d in data["records"]:
            records.append(
                Basic2Record(
                    m=int(d["m"]),
                    sources=[comp(c) for c in d["sources"]],
                    diagonal=None if d["diagonal"] is None else comp(d["diagonal"]),
                    non_diagonal=[comp(c) for c in d["non_diagonal"]],
                    orbit_sizes=[int(s) for s in d["orbit_sizes"]],
                    orbit_representatives=[comp(c) for c in d["orbit_representatives"]],
                    diagonal_rank_valuation=opt(d["diagonal_rank_valuation"]),
                    r=opt(d["r"]),
                    lower_level_sources=[comp(c) for c in d["lower_level_sources"]],
                    closed_point_valuation=int(d["closed_point_valuation"]),
                    sub_rank_valuation=int(d["sub_rank_valuation"]),
                    rank_valuation=int(d["rank_valuation"]),
                    checks=dict(d["checks"]),
                )
            )
        return cls(int(data["p"]), int(data["n"]), records)


def _level_compositions(p: int, n: int, m: int) -> list[Composition]:
    """Compositions of p^m (parts <= p^(n-1)) with comp_valuation >= m - 1.

    For m >= 1 these are exactly the compositions with every part
    divisible by p^(m-1), so only those are enumerated.
    """
    step = p ** (m - 1) if m >= 1 else 1
    return compositions(p, p**m, p ** (n - 1), step)


def recheck_record(rec: Basic2Record, p: int, n: int) -> dict[str, bool]:
    """Recompute every check of ``rec`` from the data recorded in it."""
    m = rec.m
    pm = p**m
    checks = {
        "sources_count_is_p": len(rec.sources) == p,
        "sources_single_part": all(
            len(c) == p and sorted(c) == [0] * (p - 1) + [pm] for c in rec.sources
        )
        and len(set(rec.sources)) == len(rec.sources),
        "closed_point_bound": rec.closed_point_valuation == n - m,
        "induction_rank_of_sub_upper": rec.sub_rank_valuation == n - 1 - m,
        "sources_carry_valuation": rec.sub_rank_valuation + vp(len(rec.sources), p) == n - m,
        "hypothesis_rank_valuation": rec.rank_valuation == n - m,
    }
    if m >= 1:
        q = p ** (m - 1)
        diag = (q,) * p
        sizes_ok = all(s == p for s in rec.orbit_sizes)
        rederived = cyclic_orbits(rec.non_diagonal)
        checks.update(
            {
                "diagonal_present": rec.diagonal == diag,
                "non_diagonal_level": all(
                    sum(c) == pm and c != diag and comp_valuation(c, p, n) == m - 1 for c in rec.non_diagonal
                ),
                "diagonal_unique_constant": not any(len(set(c)) == 1 for c in rec.non_diagonal),
                "orbit_sizes_are_p": sizes_ok,
                "orbits_rederived": [o.size for o in rederived] == rec.orbit_sizes
                and [o.representative for o in rederived] == rec.orbit_representatives,
                "non_diagonal_count_divisible_by_p": len(rec.non_diagonal) % p == 0,
                "diagonal_rank_valuation": rec.r == p
                and rec.diagonal_rank_valuation == rec.r * (n - m),
                "diagonal_exceeds_bound": rec.diagonal_rank_valuation is not None
                and rec.diagonal_rank_valuation > n - m,
                # copies of M_{m-1,C} inside (M_{m-1,D})_L
                "lower_level_sources_count_is_p": len(set(rec.lower_level_sources)) == p
                and all(sorted(c) == [0] * (p - 1) + [q] for c in rec.lower_level_sources),
            }
        )
    return checks


def basic2_record(p: int, n: int, m: int) -> Basic2Record:
    d = p ** (n - 1)
    pm = p**m
    level = _level_compositions(p, n, m)
    sources = [c for c in level if sum(1 for i in c if i) == 1]
    D = p_primary_division(p, n)
    rec = Basic2Record(
        m=m,
        sources=sources,
        closed_point_valuation=vp(closed_point_gcd(D, (pm,)), p) if pm < D.degree else 0,
        sub_rank_valuation=vp_binom(d, pm, p),
        rank_valuation=vp_binom(p**n, pm, p),
    )
    if m >= 1:
        q = p ** (m - 1)
        diag = (q,) * p
        rec.diagonal = diag if diag in level else None
        rec.non_diagonal = [c for c in level if c != diag and comp_valuation(c, p, n) == m - 1]
        orbits = cyclic_orbits(rec.non_diagonal)
        rec.orbit_sizes = [o.size for o in orbits]
        rec.orbit_representatives = [o.representative for o in orbits]
        rec.r = p
        rec.lower_level_sources = [
            c for c in compositions(p, q, d, q) if sum(1 for i in c if i) == 1
        ]
        rec.diagonal_rank_valuation = rec.r * vp_binom(d, q, p)
    rec.checks = recheck_record(rec, p, n)
    return rec


def verify_basic2(p: int, n: int) -> ProofTrace:
    """Replay, level by level, the count that pins v_p(rk M_{m,D}) = n - m.

    For each 0 <= m < n the record holds: the p compositions that carry a
    copy of M_{m,C}; for m >= 1, the compositions of valuation m - 1 other
    than the diagonal (p^(m-1), ..., p^(m-1)), split into rotation orbits
    of size p; and the valuation p(n - m) of the diagonal term's rank.
    m = 0 is the Severi-Brauer base case and records only the counts.
    """
    check_prime(p)
    if n < 1:
        raise DomainError("verify_basic2 needs n >= 1")
    return ProofTrace(p, n, [basic2_record(p, n, m) for m in range(n)])


X1, X2 = "X1", "X2"


def decomposition_2_2n(n: int, which: str) -> MotiveExpr:
    """Complete decompositions of X(1; D) and X(2; D) over L, deg D = 2^n.

    X(1; D)_L = M_{0,C} + M_{0,C}(2^(n-1)); and, using the tensor square
    X(1; C) x X(1; C) = sum over 0 <= k < 2^(n-1) of M_{0,C}(k),
    X(2; D)_L = M_{1,C} + M_{0,C}(2^(n-1) - 1) + ... + M_{0,C}(2^n - 2) + M_{1,C}(2^n).
    """
    if which == X1:
        if n < 1:
            raise DomainError("X1 needs n >= 1")
        h = 2 ** (n - 1)
        return MotiveExpr(p_primary_division(2, n - 1), ((Label.upper(0), 0), (Label.upper(0), h)))
    if which == X2:
        if n < 2:
            raise DomainError("X2 needs n >= 2")
        h = 2 ** (n - 1)
        terms = [(Label.upper(1), 0), (Label.upper(1), 2 * h)]
        terms += [(Label.upper(0), h - 1 + k) for k in range(h)]
        return MotiveExpr(p_primary_division(2, n - 1), tuple(terms))
    raise DomainError(f"unknown variant {which!r}")


def upper_label(flag: FlagDescriptor) -> int:
    """l with upper motive M_{l,D}: v_p(gcd(dims, ind A))."""
    alg = flag.algebra
    return vp(reduce(gcd, flag.dims, alg.index), alg.p)


def upper_labels_allowed(product: ProductVariety) -> set[int]:
    """Labels l that may occur as M_{l,D} in the complete decomposition."""
    return set(range(vp(generic_index(product), product.algebra.p) + 1))


def validate_rank_degree(alg: AlgebraClass, dims: Sequence[int], claimed_rank: int) -> bool:
    """Necessary condition for ``claimed_rank`` to be the rank of a summand of X(dims; A)."""
    if claimed_rank < 1:
        raise DomainError("claimed rank must be positive")
    return vp(closed_point_gcd(alg, dims), alg.p) <= vp(claimed_rank, alg.p)


def validate_product_rank_degree(product: ProductVariety, claimed_rank: int) -> bool:
    if claimed_rank < 1:
        raise DomainError("claimed rank must be positive")
    p = product.algebra.p
    return vp(product_closed_point_gcd(product), p) <= vp(claimed_rank, p)


def rank_degree_violations(expr: MotiveExpr) -> list[tuple[Label, int]]:
    """Terms whose hypothesis-mode rank fails the closed-point bound of their variety.

    UPPER(l) is checked against X(p^l; C) and PRODUCT(parts) against the
    product of the X(i; C); TATE terms come from points and always pass.
    """
    ctx = expr.context
    bad = []
    for label, shift in expr.terms:
        r = label_rank(label, ctx)
        if label.kind == UPPER:
            pl = ctx.p**label.l
            ok = pl == ctx.index or validate_rank_degree(ctx, (pl,), r)
        elif label.kind == PRODUCT:
            ok = validate_product_rank_degree(ProductVariety.of(ctx, *[(i,) for i in label.parts]), r)
        else:
            ok = True
        if not ok:
            bad.append((label, shift))
    return bad
