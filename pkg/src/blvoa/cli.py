"""Command-line driver: classification, singular-vector checks, polynomial
extraction, admissibility certificates and the identity suite.

Exit codes: 0 success, 1 usage error, 2 resource guard exhausted,
3 internal inconsistency (an equality the engine is supposed to reproduce
failed, e.g. oracle span vs explicit span at n = 1).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .affine import AffineWeight, check_singular, is_admissible
from .classify import (
    ClassificationResult,
    certify,
    classify_category_o,
    classify_finite_dim,
    level_of,
    merge_results,
)
from .liealg import LieAlgebra
from .rootsys import build_root_system, weight_from_fundamental
from .uea import UEA, TermGuardExceeded, identity_suite, poly_in_span
from .zero_weight import (
    OracleCeilingExceeded,
    explicit_polys,
    explicit_q,
    oracle_equals_explicit_span,
    p0_basis,
)

GUARD_ENV = "BLVOA_GUARD"


class UsageError(Exception):
    pass


class InconsistencyError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # treat "-1/2" and "-3/2,1" as values, not flags
        self._negative_number_matcher = re.compile(
            r"^-\d+(/\d+)?(,-?\d+(/\d+)?)*$"
        )

    def error(self, message: str):   # argparse defaults to exit code 2
        raise UsageError(message)


def frac(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}") from exc


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_weight(text: str, rank: int):
    parts = [frac(p) for p in text.split(",")]
    if len(parts) != rank:
        raise UsageError(f"weight needs {rank} fundamental coordinates")
    return weight_from_fundamental(parts)


def build_parser() -> _Parser:
    p = _Parser(prog="blvoa", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_flag=True):
        sp.add_argument("--rank", type=int, required=True)
        if n_flag:
            sp.add_argument("--n", type=int, default=1)
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--guard", type=int, default=None)
        sp.add_argument("--oracle-ceiling", type=int, default=2000)
        sp.add_argument("--mmax", type=int, default=None)

    sp = sub.add_parser("classify", help="enumerate classified highest weights")
    common(sp)
    sp.add_argument("--category-o", action="store_true")
    sp.add_argument("--finite-dim", action="store_true")

    sp = sub.add_parser("check-singular", help="annihilation test for the null vector")
    common(sp)
    sp.add_argument("--level", type=str, default=None)

    sp = sub.add_parser("p0", help="zero-weight polynomial span")
    common(sp)
    sp.add_argument("--compare", action="store_true")

    sp = sub.add_parser("admissible", help="certify one affine weight")
    common(sp, n_flag=False)
    sp.add_argument("--level", type=str, required=True)
    sp.add_argument("--weight", type=str, required=True)

    sp = sub.add_parser("dim", help="Weyl dimension of a dominant weight")
    common(sp, n_flag=False)
    sp.add_argument("--weight", type=str, required=True)

    sp = sub.add_parser("identities", help="run the rewriting-identity suite")
    common(sp)
    return p


def default_guard(args) -> int:
    if args.guard is not None:
        return args.guard
    env = os.environ.get(GUARD_ENV)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"bad {GUARD_ENV} value {env!r}") from exc
    return 5_000_000


def check_rank(rank: int) -> None:
    if rank < 2:
        raise UsageError("rank must be at least 2")


def entries_payload(result: ClassificationResult) -> list[dict]:
    out = []
    for e in result.entries:
        out.append(
            {
                "weight_fundamental": [frac_str(c) for c in e.weight.fundamental()],
                "tags": list(e.tags),
                "admissible": bool(e.admissible),
            }
        )
    return out


def emit(payload: dict, as_json: bool, table_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in table_lines:
            print(line)


def fmt_weight(w) -> str:
    return ",".join(str(c) for c in w.fundamental())


def cmd_classify(args) -> int:
    check_rank(args.rank)
    if args.n < 1:
        raise UsageError("n must be at least 1")
    lie = LieAlgebra(args.rank)
    rs = lie.rootsys
    want_o = args.category_o or not args.finite_dim
    want_fd = args.finite_dim or not args.category_o
    result = None
    if want_o:
        result = classify_category_o(lie, args.n)
    if want_fd:
        fd = classify_finite_dim(rs, args.n)
        result = merge_results(result, fd) if result is not None else fd
    result = certify(result, rs)
    payload = {
        "command": "classify",
        "rank": args.rank,
        "n": args.n,
        "level": frac_str(result.level),
        "entries": entries_payload(result),
        "status": "ok" if result.complete else "candidate-list",
    }
    lines = [
        f"level {frac_str(result.level)}  rank {args.rank}  n {args.n}"
        + ("" if result.complete else "  [candidate list]")
    ]
    for e in result.entries:
        lines.append(
            f"  mu=({fmt_weight(e.weight)})"
            f"  eps=({','.join(str(c) for c in e.weight.eps)})"
            f"  tags={'+'.join(e.tags)}"
            + (f"  {e.s_label}" if e.s_label else "")
            + f"  admissible={'yes' if e.admissible else 'NO'}"
        )
    lines.append(f"{len(result.entries)} weights")
    emit(payload, args.json, lines)
    if any(not e.admissible for e in result.entries):
        raise InconsistencyError("a classified weight failed admissibility")
    return 0


def cmd_check_singular(args) -> int:
    check_rank(args.rank)
    if args.n < 1:
        raise UsageError("n must be at least 1")
    lie = LieAlgebra(args.rank)
    level = frac(args.level) if args.level is not None else None
    report = check_singular(lie, args.n, level)
    payload = {
        "command": "check-singular",
        "rank": args.rank,
        "n": args.n,
        "level": frac_str(report.level),
        "entries": [],
        "status": "PASS" if report.ok else f"FAIL:{report.residual_terms}",
    }
    lines = [
        f"{'PASS' if report.ok else 'FAIL'}: level {frac_str(report.level)},"
        f" residual terms {report.residual_terms}"
    ]
    emit(payload, args.json, lines)
    return 0


def cmd_p0(args) -> int:
    check_rank(args.rank)
    if args.n < 1:
        raise UsageError("n must be at least 1")
    lie = LieAlgebra(args.rank)
    engine = UEA(lie, term_guard=default_guard(args))
    oracle = p0_basis(engine, args.n, ceiling=args.oracle_ceiling)
    lines = [f"oracle span dimension {len(oracle)}"]
    for p in oracle:
        lines.append(f"  {p}")
    status = f"dim={len(oracle)}"
    if args.compare:
        explicit = explicit_polys(lie, args.n) + [explicit_q(lie, args.n)]
        member = all(poly_in_span(p, oracle) for p in explicit)
        equal = oracle_equals_explicit_span(engine, args.n, args.oracle_ceiling)
        lines.append(f"explicit p_i, q in oracle span: {str(member).lower()}")
        lines.append(f"oracle span == explicit span: {str(equal).lower()}")
        status += f",member={str(member).lower()},equal={str(equal).lower()}"
        if not member or (args.n == 1 and not equal):
            emit(_p0_payload(args, status), args.json, lines)
            raise InconsistencyError("explicit polynomials escape the oracle span")
    emit(_p0_payload(args, status), args.json, lines)
    return 0


def _p0_payload(args, status: str) -> dict:
    return {
        "command": "p0",
        "rank": args.rank,
        "n": args.n,
        "level": frac_str(level_of(args.rank, args.n)),
        "entries": [],
        "status": status,
    }


def cmd_admissible(args) -> int:
    check_rank(args.rank)
    rs = build_root_system(args.rank)
    mu = parse_weight(args.weight, args.rank)
    lam = AffineWeight(frac(args.level), mu)
    result = is_admissible(lam, rs, m_max=args.mmax)
    names = result.simple_names(rs)
    payload = {
        "command": "admissible",
        "rank": args.rank,
        "n": 0,
        "level": frac_str(lam.level),
        "entries": [
            {
                "weight_fundamental": [frac_str(c) for c in mu.fundamental()],
                "tags": names,
                "admissible": result.ok,
            }
        ],
        "status": "ok",
    }
    lines = [
        f"admissible: {str(result.ok).lower()}; Pi_check: {{{', '.join(names)}}}",
        f"window m <= {result.m_max}, integral coroots {result.integral_count},"
        f" span rank {result.span_rank}",
    ]
    emit(payload, args.json, lines)
    return 0


def cmd_dim(args) -> int:
    check_rank(args.rank)
    rs = build_root_system(args.rank)
    mu = parse_weight(args.weight, args.rank)
    if not rs.is_dominant_integral(mu):
        raise UsageError("weight is not dominant integral")
    d = rs.weyl_dim(mu)
    payload = {
        "command": "dim",
        "rank": args.rank,
        "n": 0,
        "level": "0/1",
        "entries": [
            {
                "weight_fundamental": [frac_str(c) for c in mu.fundamental()],
                "tags": [],
                "admissible": True,
            }
        ],
        "status": f"dim={d}",
    }
    emit(payload, args.json, [str(d)])
    return 0


def cmd_identities(args) -> int:
    check_rank(args.rank)
    lie = LieAlgebra(args.rank)
    engine = UEA(lie, term_guard=default_guard(args))
    bound = args.n if args.n > 1 else 3
    records = identity_suite(engine, max_m=bound, max_k=bound)
    passed = sum(1 for _, _, s in records if s == "pass")
    skipped = sum(1 for _, _, s in records if s == "skip")
    failed = [(i, p) for i, p, s in records if s == "FAIL"]
    payload = {
        "command": "identities",
        "rank": args.rank,
        "n": args.n,
        "level": frac_str(level_of(args.rank, args.n)),
        "entries": [],
        "status": f"pass={passed},skip={skipped},fail={len(failed)}",
    }
    lines = [f"{passed} passed, {skipped} skipped, {len(failed)} failed"]
    for ident, params in failed:
        lines.append(f"  FAIL identity {ident} {params}")
    emit(payload, args.json, lines)
    if failed:
        raise InconsistencyError("identity suite failed")
    return 0


COMMANDS = {
    "classify": cmd_classify,
    "check-singular": cmd_check_singular,
    "p0": cmd_p0,
    "admissible": cmd_admissible,
    "dim": cmd_dim,
    "identities": cmd_identities,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (TermGuardExceeded, OracleCeilingExceeded) as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 3


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
