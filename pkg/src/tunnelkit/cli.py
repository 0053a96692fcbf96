"""Command-line entry point: ``tunnelkit <stats|map|corpus|series|verify>``.

Exit status is 0 on success, 1 when a verification suite reports failures
and 2 on usage or parse errors.  Caps and the default series order come from
:mod:`tunnelkit.config` and can be set through ``TUNNELKIT_*`` variables.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import perms
from .config import check_cap, limits
from .dyck import enumerate_paths, parse
from .errors import DyckWordError, TunnelkitError
from .series import gf
from .stats import StatProfile, profile, profiles_to_csv
from .verify import SUITES, run_suite
from .zigzag import build_labeled_word, phi_r, phi_r_inverse, sigma_r, trace_phi_r

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SERIES = {
    "catalan": gf.gf_catalan,
    "G": gf.gf_G,
    "G-tilde": gf.gf_G_tilde,
    "H1": gf.gf_H1,
    "F": gf.gf_F,
    "F-closed": gf.gf_F_closed,
    "fpexc132": gf.gf_fpexc132,
    "L": gf.gf_L,
    "J": gf.gf_J,
    "K": gf.solve_K,
}

PERM_HEADER = ["perm", "fp", "exc", "des"]


def _cmd_stats(args) -> int:
    D = parse(args.word)
    prof = profile(D)
    if args.json:
        print(json.dumps({"word": D.word, **prof.to_dict()}))
    elif args.csv:
        sys.stdout.write(profiles_to_csv([(D, prof)]))
    else:
        for name in StatProfile.csv_header():
            print(f"{name}={getattr(prof, name)}")
    return EXIT_OK


def _cmd_map(args) -> int:
    D = parse(args.word)
    r = args.r
    if args.trace:
        if args.inverse:
            lw = build_labeled_word(D, r)
            print("order:", " ".join(map(str, sigma_r(D.n, r).order)))
            print("symbols:", " ".join(lw.symbols))
            print("labels: ", " ".join(str(lab) for lab in lw.labels))
        else:
            for i, k, kind in trace_phi_r(D, r):
                print(f"{i:>3}  step {k:>3}  {kind}")
    out = phi_r_inverse(D, r) if args.inverse else phi_r(D, r)
    print(out.word)
    return EXIT_OK


def _cmd_corpus(args) -> int:
    lim = limits()
    n = args.n
    if args.cls == "dyck":
        if not args.cap_override:
            check_cap(n, lim.dyck_cap)
        rows = [(D, profile(D)) for D in enumerate_paths(n, override=True)]
        if args.format == "csv":
            sys.stdout.write(profiles_to_csv(rows))
        else:
            print(json.dumps([{"word": D.word, **p.to_dict()} for D, p in rows]))
        return EXIT_OK
    pattern = (3, 2, 1) if args.cls == "s321" else (1, 3, 2)
    if not args.cap_override:
        check_cap(n, lim.perm_cap)
    found = perms.avoiders(n, pattern, override=True)
    records = []
    for pi in found:
        st = perms.stats(pi)
        records.append({"perm": str(pi), "fp": st.fp, "exc": st.exc, "des": st.des})
    if args.format == "csv":
        print(",".join(PERM_HEADER))
        for rec in records:
            print(",".join(f'"{rec[k]}"' if k == "perm" and "," in rec[k] else str(rec[k]) for k in PERM_HEADER))
    else:
        print(json.dumps(records))
    return EXIT_OK


def _cmd_series(args) -> int:
    order = limits().series_order if args.order is None else args.order
    series = SERIES[args.name](order)
    print(series.to_json(sort_keys=True) if args.json else series)
    return EXIT_OK


def _cmd_verify(args) -> int:
    lim = limits()
    if args.max_n is not None and not args.cap_override:
        check_cap(args.max_n, lim.dyck_cap, "max-n")
    rep = run_suite(args.suite, max_n=args.max_n, max_r=args.max_r, order=args.order)
    print(rep.to_json(include_elapsed=not args.no_elapsed) if args.json else rep.to_text(include_elapsed=not args.no_elapsed))
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    lim = limits()
    parser = argparse.ArgumentParser(
        prog="tunnelkit",
        description="Dyck-path tunnel statistics, zigzag bijections and generating-function checks.",
        epilog=(
            f"Defaults: Dyck cap {lim.dyck_cap}, permutation cap {lim.perm_cap}, series order "
            f"{lim.series_order}; override with TUNNELKIT_DYCK_CAP, TUNNELKIT_PERM_CAP, "
            "TUNNELKIT_SERIES_ORDER or --cap-override."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="all statistics of one Dyck word")
    p.add_argument("word")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("map", help="apply phi_r or its inverse")
    p.add_argument("word")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--trace", action="store_true", help="print the visit log or the labeled o/c word")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("corpus", help="dump all objects of one size with their statistics")
    p.add_argument("n", type=int)
    p.add_argument("cls", choices=["dyck", "s321", "s132"])
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--cap-override", action="store_true")
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("series", help="expand a closed-form generating function")
    p.add_argument("name", choices=sorted(SERIES))
    p.add_argument("--order", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of: all, {', '.join(SUITES)}")
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-r", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-elapsed", action="store_true", help="omit timing for byte-identical reports")
    p.add_argument("--cap-override", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DyckWordError as exc:
        where = f" at position {exc.position}" if exc.position is not None else ""
        print(f"error: {type(exc).__name__}{where}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TunnelkitError as exc:
        # KeyError subclasses would otherwise print their message quoted
        msg = exc.args[0] if exc.args else ""
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
