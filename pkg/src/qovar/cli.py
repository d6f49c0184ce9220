"""Command line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import hilbert as hb
from .catalog import (
    ALIASES,
    ALL_SYMBOLS,
    RECIPE_BY_SYMBOL,
    CovariantSymbol,
    build_catalog,
    canonical_symbol,
    expected_counts,
    generator_counts,
    load_cache,
    open_catalog,
    source,
)
from .normalforms import NAMES as STATES
from .normalforms import evaluate_by_recipe, evaluate_covariant, set_parameters
from .poly import render


class UsageError(Exception):
    pass


def default_cache() -> Path:
    env = os.environ.get("QOVAR_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "qovar"


def _degree_of(name: str) -> int:
    name = canonical_symbol(name)
    if name in ALIASES:
        name = ALIASES[name][1]
    return CovariantSymbol.parse(name).degree


def _parse_set(items) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"--set expects p=value, got {item!r}")
        k, v = item.split("=", 1)
        k = k.strip()
        if k not in ("a", "b", "c", "d"):
            raise UsageError(f"unknown parameter {k!r}; use a, b, c or d")
        try:
            out[k] = Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad rational value {v!r}") from None
    return out


def _symbol(name: str) -> str:
    try:
        return canonical_symbol(name)
    except ValueError:
        raise UsageError(f"unknown covariant {name!r}") from None


# commands


def cmd_catalog(args, out) -> int:
    cache = args.cache
    if args.action == "build":
        cat = build_catalog(args.dmax, cache=cache, jobs=args.jobs)
        counts = generator_counts(cat)
        for d in range(1, args.dmax + 1):
            n = sum(v for (dd, _), v in counts.items() if dd == d)
            print(f"degree {d}: {n}", file=out)
        print(f"{len(cat.symbols())} generators", file=out)
        return 0
    if args.action == "counts":
        cat = load_cache(cache)
        have = generator_counts(cat)
        want = expected_counts()
        ok = True
        for key in sorted(want):
            d, lam = key
            h = have.get(key, 0)
            status = "OK" if h == want[key] else ("MISSING" if d > (cat.dmax if len(cat) else 0) else "FAIL")
            ok &= status != "FAIL"
            print(f"{d} {lam} {h} {want[key]} {status}", file=out)
        print(f"total {len(cat.symbols())} of {sum(want.values())}", file=out)
        return 0 if ok else 1
    # show
    if not args.symbol:
        for s in ALL_SYMBOLS:
            r = RECIPE_BY_SYMBOL.get(s)
            print(str(r) if r else f"{s} = f", file=out)
        return 0
    sym = _symbol(args.symbol)
    if sym not in ALIASES and sym not in ALL_SYMBOLS:
        raise UsageError(f"unknown covariant {args.symbol!r}")
    cat = open_catalog(_degree_of(sym), cache=cache, jobs=args.jobs)
    p = cat[sym]
    print(render(source(p) if args.source else p), file=out)
    return 0


def cmd_eval(args, out) -> int:
    sym = _symbol(args.symbol)
    if sym not in ALIASES and sym not in ALL_SYMBOLS:
        raise UsageError(f"unknown covariant {args.symbol!r}")
    if args.state not in STATES:
        raise UsageError(f"unknown state {args.state!r}; choose from {', '.join(STATES)}")
    values = _parse_set(args.set)
    cat = load_cache(args.cache)
    if sym in cat:
        p = evaluate_covariant(sym, args.state, cat)
    else:
        p = evaluate_by_recipe(sym, args.state)
    if values:
        p = set_parameters(p, values)
    print(render(p), file=out)
    return 0


def cmd_hilbert(args, out) -> int:
    if args.action == "dim":
        if len(args.numbers) != 5:
            raise UsageError("hilbert dim needs d mu1 mu2 mu3 mu4")
        d, *mu = args.numbers
        if d < 0 or min(mu) < 0:
            raise UsageError("degrees must be nonnegative")
        print(hb.covariant_dimension(d, mu), file=out)
        return 0
    if args.action == "series":
        if args.diagonal:
            for d, row in enumerate(hb.diagonal_series(args.tmax)):
                print(f"{d}: {hb.render_upoly(row)}", file=out)
        else:
            for d in range(args.tmax + 1):
                cells = " ".join(f"{''.join(map(str, mu))}:{c}" for mu, c in sorted(hb.multiplicities(d).items()))
                print(f"{d}: {cells}", file=out)
        return 0
    if args.action == "krull":
        print(hb.krull_dimension(hb.PRINTED_Q if args.printed_q else hb.DIAGONAL_Q), file=out)
        return 0
    # compare-pq
    denominator = hb.DIAGONAL_Q if args.corrected else hb.PRINTED_Q
    report = hb.compare_with_printed_PQ(args.tmax, denominator)
    print("d u-power L(S) P/Q", file=out)
    for m in report:
        print(f"{m.d} {m.upower} {m.expected} {m.printed}", file=out)
    print(f"{len(report)} mismatching cells up to t^{args.tmax}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    from . import verify as vf

    what = args.what
    need = {"syzygies": 6, "separation": 6, "sources": 4, "transvectants": 3, "appendix-c": 0, "hilbert": 0}
    if what == "recipes" or what == "all":
        dmax = 12
    elif what == "minimality":
        dmax = args.dmax
    else:
        dmax = need[what]
    cat = open_catalog(dmax, cache=args.cache, jobs=args.jobs) if dmax else None

    sections = []
    if what in ("recipes", "all"):
        sections.append(("recipes", vf.check_recipes(cat)))
    if what in ("transvectants", "all"):
        sections.append(("transvectants", vf.check_transvectants(cat)))
    if what in ("separation", "all"):
        sections.append(("separation", vf.check_separation(cat)))
    if what in ("syzygies", "all"):
        sections.append(("syzygies", vf.check_syzygies(cat)))
    if what in ("sources", "all"):
        sections.append(("sources", vf.check_sources(cat)))
    if what in ("hilbert", "all"):
        sections.append(("hilbert", vf.check_hilbert()))
    if what in ("minimality", "all"):
        reports, checks = vf.check_minimality(cat, args.dmax, jobs=args.jobs)
        if what == "minimality":
            for r in reports:
                print(r.line(), file=out)
        sections.append(("minimality", checks))
    if what in ("appendix-c", "all"):
        sections.append(("appendix-c", vf.check_generic_family(cat)))

    ok = True
    for title, checks in sections:
        if len(sections) > 1:
            print(f"[{title}]", file=out)
        for c in checks:
            print(c.line(), file=out)
            ok &= c.ok
    return 0 if ok else 1


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", type=Path, default=None, help="cache directory (default $QOVAR_CACHE or ~/.cache/qovar)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = argparse.ArgumentParser(prog="qovar", description="Covariants of four qubits.")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("catalog", parents=[common], help="build or inspect the covariant catalog")
    c.add_argument("action", choices=("build", "show", "counts"))
    c.add_argument("symbol", nargs="?")
    c.add_argument("--dmax", type=int, default=12)
    c.add_argument("--source", action="store_true", help="show only the source")

    e = sub.add_parser("eval", parents=[common], help="evaluate a covariant on a normal form")
    e.add_argument("symbol")
    e.add_argument("state")
    e.add_argument("--set", action="append", metavar="p=q/r")

    h = sub.add_parser("hilbert", parents=[common], help="Hilbert series")
    h.add_argument("action", choices=("dim", "series", "krull", "compare-pq"))
    h.add_argument("numbers", nargs="*", type=int)
    h.add_argument("--tmax", type=int, default=12)
    h.add_argument("--diagonal", action="store_true")
    h.add_argument("--printed-q", action="store_true", help="use the denominator exactly as printed")
    h.add_argument("--corrected", action="store_true", help="compare with (1-t^4)^2 in the denominator")

    v = sub.add_parser("verify", parents=[common], help="run verifications")
    v.add_argument(
        "what",
        choices=("syzygies", "separation", "minimality", "appendix-c", "recipes", "sources", "transvectants", "hilbert", "all"),
    )
    v.add_argument("--dmax", type=int, default=6, help="minimality bound")
    v.add_argument("--allow-expensive", action="store_true", help="permit minimality beyond degree 8")
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.cache is None:
        args.cache = default_cache()
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        if args.verb == "catalog":
            if not 1 <= args.dmax <= 12:
                raise UsageError("--dmax must be between 1 and 12")
            return cmd_catalog(args, out)
        if args.verb == "eval":
            return cmd_eval(args, out)
        if args.verb == "hilbert":
            if args.tmax < 0:
                raise UsageError("--tmax must be nonnegative")
            return cmd_hilbert(args, out)
        if not 1 <= args.dmax <= 12:
            raise UsageError("--dmax must be between 1 and 12")
        if args.what in ("minimality", "all") and args.dmax > 8 and not args.allow_expensive:
            raise UsageError("minimality beyond degree 8 is slow; pass --allow-expensive")
        return cmd_verify(args, out)
    except UsageError as exc:
        print(f"qovar: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
