"""Command-line front end.

Exit codes: 0 success, 1 a scan found a violated proved statement,
2 bad arguments, 3 enumeration budget exceeded, 4 inseparable or degenerate
curve.  ``--budget``, ``--lpoly-budget``, ``--workers``, ``--format`` and
``--out`` fall back to CHEBMAX_BUDGET, CHEBMAX_LPOLY_BUDGET, CHEBMAX_WORKERS,
CHEBMAX_FORMAT and CHEBMAX_OUT.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass

from .chebyshev import cheb_poly
from .curve import CurveError, count_points
from .families import FamilyId, build, prime_powers
from .ff import DEFAULT_BUDGET, BudgetExceeded, is_prime, make_field, prime_power
from .verify import (COLUMNS, STATEMENTS, verify_cm_against_newton, verify_conjecture,
                     verify_decompositions, verify_statement)
from .zeta import count_over_square, l_polynomial, maximal_bound, newton_polygon

ENV_PREFIX = "CHEBMAX_"

# default d and q ranges per statement: (d values, q limit)
SCAN_DEFAULTS = {
    "T12": (range(2, 13, 2), 200),
    "T13": (range(1, 16, 2), 200),
    "T14": (range(2, 13, 2), 200),
    "T15": (range(1, 16, 2), 200),
    "T31": (range(1, 9), 200),
    "T32": (range(1, 9), 200),
    "LSEP": (range(1, 31), 64),
    "P23": (range(1, 7), 200),
    "PCM5": (range(5, 6), 200),
}


@dataclass
class Config:
    budget: int = DEFAULT_BUDGET
    lpoly_budget: int = DEFAULT_BUDGET
    workers: int = 1
    format: str = "tsv"
    out: str | None = None

    def __post_init__(self):
        if self.budget < 1000 or self.lpoly_budget < 1000:
            raise ValueError("budgets must be at least 1000")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.format not in ("tsv", "jsonl"):
            raise ValueError(f"unknown format {self.format!r}")


class UsageError(Exception):
    pass


def _env(name, cast, default):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"bad value for {ENV_PREFIX}{name}: {raw!r}") from None


def _config(args) -> Config:
    pick = lambda flag, name, cast, default: (  # noqa: E731
        flag if flag is not None else _env(name, cast, default))
    try:
        return Config(budget=pick(args.budget, "BUDGET", int, DEFAULT_BUDGET),
                      lpoly_budget=pick(args.lpoly_budget, "LPOLY_BUDGET", int, DEFAULT_BUDGET),
                      workers=pick(args.workers, "WORKERS", int, os.cpu_count() or 1),
                      format=pick(args.format, "FORMAT", str, "tsv"),
                      out=pick(args.out, "OUT", str, None))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def format_records(records, fmt: str) -> list[str]:
    records = sorted(records, key=lambda r: r.sort_key())
    if fmt == "jsonl":
        return [json.dumps(r.row()) for r in records]
    lines = ["\t".join(COLUMNS)]
    lines += ["\t".join(_cell(v) for v in r.row().values()) for r in records]
    return lines


@contextmanager
def _output(cfg: Config):
    if cfg.out:
        with open(cfg.out, "w") as fh:
            yield fh
    else:
        yield sys.stdout


def _emit_records(records, cfg: Config) -> int:
    with _output(cfg) as fh:
        for line in format_records(records, cfg.format):
            fh.write(line + "\n")
    return 1 if any(r.violation for r in records) else 0


def _family(args) -> FamilyId:
    try:
        return FamilyId(args.family, getattr(args, "d", None))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _prime_power(q) -> tuple[int, int]:
    pn = prime_power(q)
    if pn is None or pn[0] == 2:
        raise UsageError(f"{q} is not an odd prime power")
    return pn


def _odd_prime(p):
    if not is_prime(p) or p == 2:
        raise UsageError(f"{p} is not an odd prime")
    return p


def cmd_cheb(args, cfg):
    f = cheb_poly(args.d)
    coeffs = f.coeffs if args.mod is None else [c % args.mod for c in f.coeffs]
    print(" ".join(map(str, coeffs)))
    return 0


def cmd_count(args, cfg):
    fam = _family(args)
    C = build(fam, _odd_prime(args.p))
    r = count_points(C, make_field(args.p, args.m), cfg.budget, cfg.workers)
    print(f"Q={r.Q} N={r.N} affine={r.affine} infinity={r.infinity}")
    return 0


def cmd_maximal(args, cfg):
    p, _ = _prime_power(args.q)
    C = build(_family(args), p)
    N = count_over_square(C, args.q, cfg.budget, cfg.workers).N
    bound = maximal_bound(args.q, C.genus)
    verdict = "maximal" if N == bound else "not maximal"
    print(f"{verdict} (N={N}, bound={bound})")
    return 0


def cmd_lpoly(args, cfg):
    C = build(_family(args), _odd_prime(args.p))
    L = l_polynomial(C, args.n, cfg.lpoly_budget, cfg.workers)
    slopes = newton_polygon(L) if L.genus else []
    print(f"{L} | slopes {' '.join(map(str, slopes))}".rstrip())
    return 0


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_scan(args, cfg):
    records = []
    for stmt in args.stmt:
        if stmt not in STATEMENTS:
            raise UsageError(f"unknown statement {stmt!r}; expected one of {', '.join(STATEMENTS)}")
        d_default, q_default = SCAN_DEFAULTS[stmt]
        d_range = range(args.dmin, args.dmax + 1) if args.dmax is not None else d_default
        q_limit = args.qmax if args.qmax is not None else q_default
        if stmt == "PCM5" and args.pmax is not None:
            q_limit = args.pmax
        records += verify_statement(stmt, d_range, q_limit, cfg.budget)
    return _emit_records(records, cfg)


def cmd_conjecture(args, cfg):
    try:
        records = verify_conjecture(args.d, args.qmax, cfg.lpoly_budget, cfg.budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _emit_records(records, cfg)


def cmd_decomp(args, cfg):
    records = []
    for d in args.d:
        for q in args.q or prime_powers(args.qmax, 2 * d):
            _prime_power(q)
            records += verify_decompositions(d, q, args.rmax, cfg.budget, cfg.lpoly_budget)
    return _emit_records(records, cfg)


def cmd_cm(args, cfg):
    records = []
    for ell in args.ell:
        records += verify_cm_against_newton(ell, args.pmax, cfg.lpoly_budget)
    return _emit_records(records, cfg)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, help="max field elements per count")
    common.add_argument("--lpoly-budget", type=int, help="max field elements per L-polynomial")
    common.add_argument("--workers", type=int, help="threads per count")
    common.add_argument("--format", choices=("tsv", "jsonl"))
    common.add_argument("--out", help="write records to this path")

    parser = argparse.ArgumentParser(prog="chebmax", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cheb", parents=[common], help="print phi_d coefficients, constant first")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mod", type=int)
    p.set_defaults(func=cmd_cheb)

    def family_args(p):
        p.add_argument("--family", required=True, help="X, Y, C, C+, C-, C1, E+, E-3, E108")
        p.add_argument("--d", type=int)

    p = sub.add_parser("count", parents=[common], help="count points over F_{p^m}")
    family_args(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("maximal", parents=[common], help="maximality over F_{q^2}")
    family_args(p)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("lpoly", parents=[common], help="L-polynomial over F_{p^n}")
    family_args(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_lpoly)

    p = sub.add_parser("scan", parents=[common], help="scan statements over (d, q) grids")
    p.add_argument("--stmt", type=lambda s: s.split(","), required=True,
                   help=f"comma-separated ids from {', '.join(STATEMENTS)}")
    p.add_argument("--dmin", type=int, default=1)
    p.add_argument("--dmax", type=int)
    p.add_argument("--qmax", type=int)
    p.add_argument("--pmax", type=int, help="prime bound for PCM5")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("conjecture", parents=[common], help="odd-d conjecture experiment")
    p.add_argument("--d", type=_ints, default=[9, 15, 21])
    p.add_argument("--qmax", type=int, default=100)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("decomp", parents=[common], help="isogeny decomposition identities")
    p.add_argument("--d", type=_ints, default=[2, 3, 4, 5])
    p.add_argument("--q", type=_ints)
    p.add_argument("--qmax", type=int, default=13)
    p.add_argument("--rmax", type=int, default=2)
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("cm", parents=[common], help="CM slope formula vs Newton slopes")
    p.add_argument("--ell", type=_ints, default=[3, 5])
    p.add_argument("--pmax", type=int, default=50)
    p.set_defaults(func=cmd_cm)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"chebmax: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"chebmax: {exc}", file=sys.stderr)
        return 3
    except CurveError as exc:
        print(f"chebmax: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
