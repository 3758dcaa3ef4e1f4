"""Command-line front end: ``permstat <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import paths, theorems
from .bijections import phi, psi
from .families import Family, build_polynomial, coeff_family
from .perm import Convention, all_stats, linear_stats, parse_permutation, PermutationError
from .poly import specialize
from .tables import TABLES

POLY_FAMILIES = {
    "A": Family.A,
    "B": Family.B_CYCLIC,
    "Blinear": Family.B_LINEAR,
    "C": Family.C,
    "Dstar": Family.D_STAR,
}

SERIES_IDS = sorted(theorems.PAPER_SPECS) + ["egf-A", "egf-B", "sfraction"]


class UsageError(Exception):
    pass


def _assignment(pairs: Sequence[str]) -> dict:
    out = {}
    for item in pairs:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--set expects var=value, got {item!r}")
        try:
            out[name.strip()] = int(value)
        except ValueError:
            raise UsageError(f"--set values must be integers, got {value!r}") from None
    return out


def _format_value(v) -> str:
    if isinstance(v, tuple):
        return ",".join(map(str, v))
    return str(v)


def cmd_stats(args) -> int:
    sigma = parse_permutation(args.perm)
    conv = Convention(args.convention)
    rec = {k: v for k, v in all_stats(sigma).items()}
    rec.update(linear_stats(sigma, conv))
    if args.format == "json":
        print(json.dumps({k: list(v) if isinstance(v, tuple) else v for k, v in rec.items()},
                         sort_keys=True))
    else:
        width = max(map(len, rec))
        for key in sorted(rec):
            print(f"{key:<{width}}  {_format_value(rec[key])}")
    return 0


def cmd_bijection(args) -> int:
    sigma = parse_permutation(args.perm)
    if args.map == "phi":
        print(phi(sigma))
    elif args.map == "psi":
        print(psi(sigma))
    elif args.map == "fv":
        print(paths.fv_map(sigma))
    else:
        print(paths.fz_map(sigma))
    return 0


def cmd_poly(args) -> int:
    f = build_polynomial(POLY_FAMILIES[args.family], args.n, jobs=args.jobs)
    if args.set:
        f = specialize(f, _assignment(args.set))
    print(f)
    return 0


def cmd_coeff(args) -> int:
    if args.family == "b" and args.j is None:
        raise UsageError("coeff b needs --j")
    if args.family != "b" and args.j is not None:
        raise UsageError(f"coeff {args.family} takes no --j")
    print(coeff_family(args.family, args.n, args.k, args.j))
    return 0


def cmd_table(args) -> int:
    sys.stdout.write(TABLES[args.name]().render(args.format))
    return 0


def cmd_verify(args) -> int:
    ids = theorems.check_ids() if args.check == "all" else [args.check]
    for cid in ids:
        theorems.check_tier(cid)  # unknown ids fail before any work starts
    reports = theorems.run_checks(ids, args.n_max, jobs=args.jobs)
    ok = True
    for r in reports:
        print(json.dumps(r.as_dict()))
        ok = ok and r.passed
        if args.verbose and r.detail:
            print(f"{r.check} n={r.n}: {r.detail}", file=sys.stderr)
    return 0 if ok else 1


def cmd_series(args) -> int:
    N = args.order
    if args.cf_id == "egf-A":
        s = theorems.egf_eulerian(N)
    elif args.cf_id == "egf-B":
        s = theorems.egf_derangement(N)
    elif args.cf_id == "sfraction":
        s = paths.sfraction_literal(theorems.sfraction_cs(N), N)
    else:
        s = theorems.cf_series(args.cf_id, N)
    for k, c in enumerate(s.coeffs):
        print(f"x^{k}: {c}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permstat", description="Permutation statistics, "
                                     "bijections, generating polynomials and continued fractions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="all statistics of one permutation")
    p.add_argument("perm")
    p.add_argument("--convention", choices=[c.value for c in Convention], default="zt",
                   help="boundary convention for the unstarred linear keys (default zt)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bijection", help="apply phi, psi, fv or fz")
    p.add_argument("map", choices=["phi", "psi", "fv", "fz"])
    p.add_argument("perm")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("poly", help="a generating polynomial by exhaustive enumeration")
    p.add_argument("family", choices=list(POLY_FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", action="append", metavar="VAR=INT", default=[])
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("coeff", help="one coefficient polynomial")
    p.add_argument("family", choices=["a", "b", "c", "d"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("table", help="regenerate a figure or coefficient table")
    p.add_argument("name", choices=list(TABLES))
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run identity checks; exit 0 iff all pass")
    p.add_argument("check", help="a check id or 'all'")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--verbose", action="store_true", help="print check details to stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="truncated series of a continued fraction or EGF")
    p.add_argument("cf_id", choices=SERIES_IDS)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PermutationError, theorems.UnknownCheckId, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"permstat: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
