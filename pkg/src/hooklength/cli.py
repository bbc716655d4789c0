"""Command-line front end: ``hooklength {verify,derive-rho,series,rebuild,enum,registry}``.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error. Human-readable output never contains timings, so it is byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from typing import List, Optional, Sequence

from . import catalog
from .exact import PoleError, RatFunc, ratfunc_eval
from .expansion import NAMED_SERIES, ExpansionError, WeightFunction, rho_from_series, series_from_rho
from .series import Series
from .trees import KINDS, enumerate_family, hook_multiset, parse_family
from .verify import (
    MODES,
    VerificationError,
    check_specializations,
    failures,
    parse_subst,
    sort_reports,
    verify,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _subst(text: Optional[str]):
    if text is None:
        return None
    try:
        return parse_subst(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None


def _show(value, subst=None) -> str:
    if subst is not None and isinstance(value, RatFunc):
        value = ratfunc_eval(value, *subst)
    return str(value)


def _series_from_spec(spec: str, precision: int, k: Optional[int]) -> Series:
    # named:NAME | coeffs:c0,c1,... | id:ENTRY  (a bare name is looked up in the named table)
    kind, sep, body = spec.partition(":")
    if not sep:
        kind, body = "named", spec
    if kind == "named":
        if body not in NAMED_SERIES:
            raise UsageError(f"unknown series {body!r}; known: {', '.join(sorted(NAMED_SERIES))}")
        return NAMED_SERIES[body][1](precision)
    if kind == "coeffs":
        values = [RatFunc.parse(c) for c in body.split(",") if c.strip()]
        if len(values) < precision + 1:
            raise UsageError(f"need {precision + 1} coefficients, got {len(values)}")
        return Series(v.to_fraction() if v.is_constant() else v for v in values[: precision + 1])
    if kind == "id":
        return catalog.generating_series(body, precision, k)
    raise UsageError(f"series spec must be NAME, coeffs:..., or id:ENTRY, not {spec!r}")


# -- subcommands ------------------------------------------------------------------------


def cmd_verify(args, out, err) -> int:
    subst = _subst(args.subst)
    if args.all:
        ids = list(catalog.REGISTRY)
    else:
        ids = [args.id]
        catalog.get(args.id)
    reports = []
    for identity_id in ids:
        entry = catalog.get(identity_id)
        n_max = args.n_max
        if args.mode == "enum" and args.all:
            n_max = min(n_max, min(entry.family(k).ceiling for k in entry.ks(args.k)))
        k = args.k if entry.k_free else None
        reports.extend(verify(identity_id, n_max, args.mode, subst=subst, k=k, seed=args.seed))
    if args.all:
        reports.extend(check_specializations())
    reports = sort_reports(reports)
    for r in reports:
        if args.json:
            print(r.to_json(timing=not args.no_timing), file=out)
        else:
            print(r.describe(), file=out)
    bad = failures(reports)
    for r in bad:
        print(f"verification failed: id={r.id} n={r.n} mode={r.mode}", file=err)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_derive_rho(args, out, err) -> int:
    family = parse_family(args.family, args.k)
    f = _series_from_spec(args.series, args.n, args.k)
    for n in range(1, args.n + 1):
        print(f"rho({n}) = {rho_from_series(family, f, n)}", file=out)
    return EXIT_OK


def cmd_series(args, out, err) -> int:
    subst = _subst(args.subst)
    f = catalog.generating_series(args.id, args.n, args.k)
    for n in range(args.n + 1):
        print(f"[x^{n}] {_show(f[n], subst)}", file=out)
    return EXIT_OK


def cmd_rebuild(args, out, err) -> int:
    family = parse_family(args.family, args.k)
    subst = _subst(args.subst)
    rho = WeightFunction(lambda h: catalog.weight(args.weights, h, args.k), args.weights)
    if subst is not None:
        rho = rho.at(*subst)
    f = series_from_rho(family, rho, args.n)
    for n in range(args.n + 1):
        print(f"[x^{n}] {f[n]}", file=out)
    return EXIT_OK


def cmd_enum(args, out, err) -> int:
    family = parse_family(args.family, args.k)
    if args.n > family.ceiling:
        raise UsageError(f"n={args.n} exceeds the enumeration ceiling {family.ceiling} for {family}")
    subst = _subst(args.subst)
    rho = None
    if args.weights:
        rho = WeightFunction(lambda h: catalog.weight(args.weights, h, args.k), args.weights)
        if subst is not None:
            rho = rho.at(*subst)
    for tree in enumerate_family(family, args.n):
        fields = [tree.encode()]
        hooks = hook_multiset(tree)
        if args.hooks:
            fields.append("{" + ",".join(str(h) for h in reversed(hooks)) + "}")
        if rho is not None:
            product = Fraction(1)
            for h in hooks:
                product = product * rho(h)
            fields.append(str(product))
        print("\t".join(fields), file=out)
    return EXIT_OK


def cmd_registry(args, out, err) -> int:
    entries = catalog.registry_json()
    if args.json:
        for e in entries:
            print(json.dumps(e, separators=(",", ":")), file=out)
    else:
        for e in entries:
            k = "" if e["k"] is None else f" k={e['k']}"
            print(f"{e['id']}\t{e['family']}{k}\t{e['kind']}\t{e['weight']}\t{e['rhs']}", file=out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hooklength", description="Hook length expansions and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check catalog identities")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--id", help="registry id")
    which.add_argument("--all", action="store_true", help="every entry plus the specialization links")
    p.add_argument("--n-max", type=_positive, default=8)
    p.add_argument("--mode", choices=MODES, default="dp")
    p.add_argument("--k", type=_positive, help="k for free-k k-ary entries (default: 1..4)")
    p.add_argument("--subst", help="numeric point, e.g. a=1/2,z=3")
    p.add_argument("--seed", type=int, default=0, help="grid-mode sampling seed")
    p.add_argument("--json", action="store_true", help="one JSON report per line")
    p.add_argument("--no-timing", action="store_true", help="write micros as 0 for byte-stable JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("derive-rho", help="weights of a series via the expansion formula")
    p.add_argument("--family", required=True, help=f"one of binary, kary, {', '.join(KINDS[1:])}")
    p.add_argument("--k", type=_positive)
    p.add_argument("--series", required=True, help=f"NAME ({', '.join(sorted(NAMED_SERIES))}), coeffs:c0,c1,..., or id:ENTRY")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_derive_rho)

    p = sub.add_parser("series", help="coefficients of an entry's generating function")
    p.add_argument("--id", required=True)
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("--subst")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("rebuild", help="generating function of an entry's weight over a family")
    p.add_argument("--family", required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("--weights", required=True, help="registry id whose weight to use")
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--subst")
    p.set_defaults(func=cmd_rebuild)

    p = sub.add_parser("enum", help="list the members of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--hooks", action="store_true", help="show hook multisets, largest first")
    p.add_argument("--weights", help="registry id; show each tree's weight product")
    p.add_argument("--subst")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("registry", help="list the catalog")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_registry)
    return parser


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args, out, err)
    except (UsageError, ValueError, KeyError, PoleError, VerificationError, ExpansionError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"hooklength {args.command}: error: {message}", file=err)
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
