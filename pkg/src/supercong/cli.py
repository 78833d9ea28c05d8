"""Command-line front end: verify, eval, represent, identities, list."""

from __future__ import annotations

import argparse
import os
import random
import sys
from fractions import Fraction

from . import __version__, identities, quadform
from .context import PrimeContext
from .errors import SupercongError, UnknownStatement
from .padic import DEFAULT_GUARD
from .registry import REGISTRY, STATUSES, Parametric, statement_modexp
from .statements import run_range, select_ids


def _parse_primes(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
    else:
        lo_s = hi_s = text
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise ValueError(f"bad prime range {text!r}; expected A..B") from None
    return lo, hi


def _statuses_for(token: str) -> set[str] | None:
    if token == "all":
        return None
    if token == "default":
        return {s for s in STATUSES if s != "conjecture"}
    return {token}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args: argparse.Namespace) -> int:
    p_lo, p_hi = _parse_primes(args.primes)
    ids = [s for s in args.ids.split(",") if s] if args.ids else None
    report = run_range(
        p_lo,
        p_hi,
        ids=ids,
        statuses=_statuses_for(args.status),
        seed=args.seed,
        guard=args.guard,
        jobs=args.jobs,
        fail_fast=args.fail_fast,
    )
    if args.format == "json":
        text = report.to_json() + "\n"
    elif args.format == "csv":
        text = report.to_csv()
    else:
        text = report.to_text()
    _emit(text, args.out)
    failures = report.failures(strict_conjectures=args.strict_conjectures)
    if failures:
        for row in failures[:10]:
            print(
                f"FAIL p={row.p} {row.sid}: lhs={row.lhs} rhs={row.rhs} "
                f"mod {row.modulus} {row.detail}".rstrip(),
                file=sys.stderr,
            )
        return 1
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    stmt = REGISTRY.get(args.id)
    if stmt is None:
        raise UnknownStatement(f"unknown statement id: {args.id}")
    if isinstance(stmt, Parametric):
        raise UnknownStatement(
            f"{args.id} is parametric; use `verify --ids {args.id}`"
        )
    p = args.p
    if not quadform.is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    t = args.t if args.t is not None else statement_modexp(stmt, p)
    ctx = PrimeContext(p, t + args.guard)
    lhs = stmt.lhs(ctx, t)
    modulus = p**t
    if stmt.applies(p):
        rhs = stmt.rhs(ctx, t)
        print(f"lhs={lhs} rhs={rhs} mod {modulus}")
    else:
        print(f"lhs={lhs} mod {modulus} (statement requires {stmt.condition})")
    return 0


def cmd_represent(args: argparse.Namespace) -> int:
    if args.form not in quadform.FORMS:
        raise ValueError(
            f"unknown form {args.form!r}; choose from {', '.join(quadform.FORMS)}"
        )
    if not quadform.is_prime(args.p):
        raise ValueError(f"p must be prime, got {args.p}")
    rep = quadform.represent(args.p, args.form)
    print(f"x={rep.x} y={rep.y}")
    return 0


def cmd_identities(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)

    def rational() -> Fraction:
        return Fraction(rng.randrange(-60, 61), rng.randrange(1, 13))

    suites: list[tuple[str, bool]] = []
    ok = all(identities.check_convolution_identity(n) for n in range(args.nmax + 1))
    suites.append(("convolution", ok))
    recur_as = [rational() for _ in range(5)]
    ok = all(
        identities.check_convolution_recurrence(n, a)
        for a in recur_as
        for n in range(2, args.nmax + 1)
    )
    suites.append(("recurrence", ok))
    suites.append(("products", identities.check_product_identities(args.kmax)))
    square_as = [rational() for _ in range(20)]
    ok = all(identities.check_series_square(a, args.order) for a in square_as)
    suites.append(("series-square", ok))
    shift_pairs = [(rational(), rng.randrange(0, 200)) for _ in range(args.kmax)]
    ok = all(identities.check_shift_identity(a, k) for a, k in shift_pairs)
    suites.append(("shift", ok))

    failed = False
    for name, passed in suites:
        print(f"{name}: {'pass' if passed else 'FAIL'}")
        failed = failed or not passed
    return 1 if failed else 0


def _modexp_text(stmt) -> str:
    if callable(stmt.modexp):
        return "p^*"
    return f"p^{stmt.modexp}"


def cmd_list(args: argparse.Namespace) -> int:
    for sid in select_ids(None, _statuses_for(args.status)):
        stmt = REGISTRY[sid]
        line = f"{sid}\t{stmt.status}\t{_modexp_text(stmt)}\t{stmt.condition}"
        if stmt.note:
            line += f"\t[{stmt.note}]"
        print(line)
        if args.claims:
            print(f"\t{stmt.claim}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercong",
        description=(
            "Exact verification of congruences for binomial-coefficient sums "
            "against quadratic-form closed forms."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    status_choices = ["default", "all", *STATUSES]

    p_verify = sub.add_parser("verify", help="sweep statements over a prime range")
    p_verify.add_argument("--primes", required=True, metavar="A..B",
                          help="inclusive prime range, 3 < A <= B")
    p_verify.add_argument("--ids", help="comma-separated ids or glob patterns")
    p_verify.add_argument("--status", choices=status_choices, default="default",
                          help="statement class filter (default: all but conjecture)")
    p_verify.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_verify.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--guard", type=int, default=DEFAULT_GUARD,
                          help="extra working precision above each statement's modulus")
    p_verify.add_argument("--fail-fast", action="store_true")
    p_verify.add_argument("--strict-conjectures", action="store_true",
                          help="let conjecture failures gate the exit code")
    p_verify.add_argument("--out", help="write the report to a file")
    p_verify.set_defaults(func=cmd_verify)

    p_eval = sub.add_parser("eval", help="evaluate one fixed statement at one prime")
    p_eval.add_argument("id")
    p_eval.add_argument("p", type=int)
    p_eval.add_argument("t", type=int, nargs="?",
                        help="modulus exponent (default: the statement's own)")
    p_eval.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    p_eval.set_defaults(func=cmd_eval)

    p_rep = sub.add_parser("represent", help="represent a prime by a quadratic form")
    p_rep.add_argument("p", type=int)
    p_rep.add_argument("form", help=f"one of {', '.join(quadform.FORMS)}")
    p_rep.set_defaults(func=cmd_represent)

    p_ident = sub.add_parser("identities", help="run the exact identity suites")
    p_ident.add_argument("--nmax", type=int, default=40)
    p_ident.add_argument("--kmax", type=int, default=200)
    p_ident.add_argument("--order", type=int, default=30)
    p_ident.add_argument("--seed", type=int, default=0)
    p_ident.set_defaults(func=cmd_identities)

    p_list = sub.add_parser("list", help="list registered statements")
    p_list.add_argument("--status", choices=status_choices, default="all")
    p_list.add_argument("--claims", action="store_true",
                        help="also print each statement's congruence")
    p_list.set_defaults(func=cmd_list)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SupercongError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
