"""Command-line front end.

    motivec poincare --degree 4 --dims 2
    motivec decompose --p 2 --n 2 --m 1 --variant onestep
    motivec candim --p 2 --degree 8 --index 8 --factors "2;2"
    motivec classify --p 2 --degree 8 --index 8 --factors "2,4"
    motivec rank --degree 8 --dims 2 --index 8 --p 2 --mode constraint
    motivec verify --p 3 --n 3 --check basic2

JSON output is canonical: sorted keys, compact separators, integers as
decimal strings. Exit codes: 0 ok, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from motivec.arith import DomainError, check_prime, gauss_binom, vp, vp_binom, binom
from motivec.candim import cdim_p
from motivec.csa import AlgebraClass, FlagDescriptor, ProductVariety, closed_point_gcd, dim_flag, generic_index
from motivec.motive import UPPER, hypothesis_poincare, rank
from motivec.split import flag_poincare
from motivec.tower import (
    X1,
    X2,
    decomposition_2_2n,
    lower_term,
    one_step,
    upper_label,
    upper_labels_allowed,
    upper_term,
    verify_basic2,
)

COMMANDS = ("poincare", "decompose", "candim", "classify", "verify", "rank")
VARIANTS = {"onestep": None, "2-2n-X1": X1, "2-2n-X2": X2}
CHECKS = ("basic2", "poincare-identity", "kummer")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="motivec", description="Motivic decompositions of generalized Severi-Brauer varieties.")
    parser.add_argument("command", choices=COMMANDS)
    for name in ("p", "n", "m", "degree", "index"):
        parser.add_argument(f"--{name}", type=int)
    parser.add_argument("--dims", help="comma list of reduced dimensions")
    parser.add_argument("--factors", help="semicolon-separated dims lists, one per factor")
    parser.add_argument("--variant", choices=tuple(VARIANTS))
    parser.add_argument("--check", choices=CHECKS)
    parser.add_argument("--mode", choices=("hypothesis", "constraint"))
    parser.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise DomainError(f"not a comma list of integers: {text!r}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError("missing " + ", ".join(f"--{n}" for n in missing))


def _algebra(args) -> AlgebraClass:
    _need(args, "p", "degree", "index")
    return AlgebraClass(args.degree, args.index, args.p)


def _product(args) -> ProductVariety:
    alg = _algebra(args)
    text = args.factors if args.factors is not None else args.dims
    if text is None:
        raise DomainError("missing --factors")
    lists = [_ints(chunk) for chunk in text.split(";") if chunk.strip()]
    return ProductVariety.of(alg, *lists)


def cmd_poincare(args) -> tuple[dict, bool]:
    _need(args, "degree", "dims")
    flag = FlagDescriptor(AlgebraClass(args.degree, 1, 2), _ints(args.dims))
    poly = flag_poincare(args.degree, flag.dims)
    return {
        "degree": args.degree,
        "dims": list(flag.dims),
        "coefficients": list(poly.coeffs),
        "rank": poly.eval1(),
        "dim": dim_flag(args.degree, flag.dims),
    }, True


def cmd_decompose(args) -> tuple[dict, bool]:
    _need(args, "p", "n")
    check_prime(args.p)
    variant = args.variant or "onestep"
    which = VARIANTS[variant]
    payload: dict[str, Any] = {"variant": variant, "p": args.p, "n": args.n}
    if which is None:
        _need(args, "m")
        expr = one_step(args.p, args.n, args.m)
        payload["m"] = args.m
        payload["upper_term"] = _term(upper_term(expr))
        payload["lower_term"] = _term(lower_term(expr))
    else:
        if args.p != 2:
            raise DomainError(f"variant {variant} needs p = 2")
        expr = decomposition_2_2n(args.n, which)
    payload["motive"] = expr.to_dict()
    payload["rank_hypothesis"] = rank(expr)
    payload["conditional"] = any(label.kind == UPPER for label, _ in expr.terms)
    return payload, True


def _term(t):
    comp, shift = t
    return {"composition": list(comp), "shift": shift}


def cmd_candim(args) -> tuple[dict, bool]:
    return cdim_p(_product(args)).to_dict(), True


def cmd_classify(args) -> tuple[dict, bool]:
    product = _product(args)
    gi = generic_index(product)
    return {
        "variety": str(product),
        "generic_index": gi,
        "labels": sorted(upper_labels_allowed(product)),
        "upper_label": vp(gi, product.algebra.p),
        "factor_upper_labels": [upper_label(f) for f in product.factors],
    }, True


def cmd_rank(args) -> tuple[dict, bool]:
    _need(args, "degree", "dims")
    mode = args.mode or "hypothesis"
    dims = FlagDescriptor(AlgebraClass(args.degree, 1, 2), _ints(args.dims)).dims
    payload: dict[str, Any] = {
        "degree": args.degree,
        "dims": list(dims),
        "mode": mode,
        "rank": flag_poincare(args.degree, dims).eval1(),
    }
    if mode == "constraint":
        alg = _algebra(args)
        payload["closed_point_gcd"] = closed_point_gcd(alg, dims)
        payload["min_summand_rank_valuation"] = vp(closed_point_gcd(alg, dims), alg.p)
    return payload, True


def cmd_verify(args) -> tuple[dict, bool]:
    _need(args, "p", "n")
    p, n = check_prime(args.p), args.n
    check = args.check or "basic2"
    if check == "basic2":
        trace = verify_basic2(p, n)
        return {"check": "basic2", "trace": trace.to_dict()}, trace.passed
    if check == "poincare-identity":
        if n < 1:
            raise DomainError("poincare-identity needs n >= 1")
        rows = []
        for m in range(n):
            lhs = hypothesis_poincare(one_step(p, n, m))
            rows.append({"m": m, "ok": lhs == gauss_binom(p**n, p**m)})
    else:
        if n < 0:
            raise DomainError("kummer needs n >= 0")
        rows = []
        for m in range(n + 1):
            v = vp_binom(p**n, p**m, p)
            rows.append({"m": m, "vp_binom": v, "ok": v == n - m == vp(binom(p**n, p**m), p)})
    ok = all(r["ok"] for r in rows)
    return {"check": check, "verdict": "PASS" if ok else "FAIL", "rows": rows}, ok


HANDLERS = {
    "poincare": cmd_poincare,
    "decompose": cmd_decompose,
    "candim": cmd_candim,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "rank": cmd_rank,
}


def canonical(obj: Any) -> Any:
    """Integers become decimal strings; bools and None stay JSON literals."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(canonical(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def render_text(response: dict) -> str:
    lines = [f"{response['command']}: {response['status']}"]

    def walk(obj, indent):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k in sorted(obj):
                v = obj[k]
                if isinstance(v, dict) or (isinstance(v, list) and not all(isinstance(x, str) for x in v)):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                elif isinstance(v, list):
                    lines.append(f"{pad}{k}: [{', '.join(v)}]")
                else:
                    lines.append(f"{pad}{k}: {v}")
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, list) and all(isinstance(x, str) for x in item):
                    lines.append(f"{pad}- [{', '.join(item)}]")
                elif isinstance(item, (dict, list)):
                    lines.append(f"{pad}-")
                    walk(item, indent + 1)
                else:
                    lines.append(f"{pad}- {item}")

    walk(canonical(response["payload"]), 1)
    for d in response["diagnostics"]:
        lines.append(f"  ! {d}")
    return "\n".join(lines)


def run(argv: Sequence[str]) -> tuple[dict, int]:
    """Parse ``argv`` and dispatch; returns the response and the exit code."""
    argv = list(argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        command = argv[0] if argv else ""
        return {"status": "error", "command": command, "params": {}, "payload": {}, "diagnostics": [str(exc)]}, EXIT_USAGE
    params = {
        k: v for k, v in vars(args).items() if v is not None and k not in ("command", "format")
    }
    response = {"command": args.command, "params": params, "payload": {}, "diagnostics": []}
    try:
        payload, ok = HANDLERS[args.command](args)
    except DomainError as exc:
        response.update(status="error", diagnostics=[str(exc)])
        return response, EXIT_USAGE
    response["payload"] = payload
    response["status"] = "ok"
    if not ok:
        response["diagnostics"] = ["verification FAILED"]
        return response, EXIT_FAIL
    return response, EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    response, code = run(argv)
    fmt = "json" if "--format=json" in argv or _flag_value(argv, "--format") == "json" else "text"
    print(dumps(response) if fmt == "json" else render_text(response))
    return code


def _flag_value(argv: Sequence[str], flag: str) -> str | None:
    for i, a in enumerate(argv[:-1]):
        if a == flag:
            return argv[i + 1]
    return None


if __name__ == "__main__":
    sys.exit(main())
