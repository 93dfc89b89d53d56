"""genphi command line.

    genphi compute --e 12 24 [--all-methods]
    genphi table --e 8 --from 1 --to 20 [--format csv|tsv|json]
    genphi verify --e 8 --max 100000 [--oracle brute|mobius|both] [--jobs 4]
    genphi conjecture --e 8 --d-max 1000000 [--search] [--rep-file rep.json]

Exit status: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from genphi.arith import MAX_N, factorize
from genphi.closed_form import phi_generalized
from genphi.conjecture import (
    BUILTIN,
    EVEN_D,
    ODD_D,
    FloorRepresentation,
    search_representation,
    verify_representation,
)
from genphi.parity import parity_phi8, parity_phi12
from genphi.reference import phi_def, phi_mobius
from genphi.sweep import BRUTE_CAP, ORACLES, sweep, table_rows

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

TABLE_FIELDS = ["n", "phi", "parity", "rule", "branch"]


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def nonnegative_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def cmd_compute(args, out) -> int:
    n, e = args.n, args.e
    if n >= MAX_N:
        print(f"n must be below 2^63, got {n}", file=sys.stderr)
        return EXIT_USAGE
    f = factorize(n)
    v = phi_generalized(f, e)
    print(f"n={n} e={e} phi={v.value} method={v.method} branch={v.branch}", file=out)
    if args.all_methods:
        mob = phi_mobius(f, e).value
        if n // e <= args.brute_limit:
            d = str(phi_def(f, e).value)
        else:
            d = "skipped"
        print(f"Definition={d} MobiusSum={mob} ClosedForm={v.value} [{v.branch}]", file=out)
        if e in (8, 12):
            verdict = (parity_phi8 if e == 8 else parity_phi12)(f)
            print(f"parity={verdict.parity} rule={verdict.rule}", file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    lo, hi = args.lo, args.hi
    if lo > hi + 1:
        print(f"bad range: from={lo} > to={hi}", file=sys.stderr)
        return EXIT_USAGE
    rows = table_rows(args.e, lo, hi)
    if args.format == "json":
        json.dump(list(rows), out, ensure_ascii=False, indent=None)
        out.write("\n")
        return EXIT_OK
    delim = "," if args.format == "csv" else "\t"
    writer = csv.DictWriter(out, fieldnames=TABLE_FIELDS, delimiter=delim, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    cap = args.brute_cap
    if args.oracle == "brute":
        cap = args.max
    t0 = time.perf_counter()
    rep = sweep(args.e, args.max, args.oracle, cap, args.jobs)
    elapsed = time.perf_counter() - t0
    print(
        f"verify e={args.e} n=1..{args.max} oracle={args.oracle}: "
        f"{rep.checked} checked ({rep.brute_checked} vs Definition, "
        f"{rep.mobius_checked} vs MobiusSum, {rep.parity_checked} parity) in {elapsed:.1f}s",
        file=out,
    )
    print("branch coverage:", file=out)
    for branch, count in sorted(rep.coverage.items()):
        print(f"  {count:8d}  {branch}", file=out)
    if rep.ok:
        print("mismatches: 0", file=out)
        return EXIT_OK
    print(f"mismatches: {len(rep.mismatches)}", file=out)
    for m in rep.mismatches[: args.show]:
        print(f"  {m}", file=out)
    return EXIT_MISMATCH


def cmd_conjecture(args, out) -> int:
    status = EXIT_OK
    reps = []
    if args.rep_file:
        with open(args.rep_file, encoding="utf-8") as fh:
            reps.append(("file", FloorRepresentation.from_json(fh.read())))
    elif args.e in BUILTIN:
        reps.append(("built-in", BUILTIN[args.e]))
    for label, rep in reps:
        result = verify_representation(rep, args.d_max)
        print(f"{label} representation e={rep.e} {rep.parity_class}: {rep.to_json()}", file=out)
        print(f"  d<={args.d_max}: {result}", file=out)
        if not result.ok:
            status = EXIT_MISMATCH
    if args.search:
        found = search_representation(
            args.e,
            EVEN_D if args.even else ODD_D,
            bound=args.bound,
            max_terms=args.max_terms,
            d_max=args.d_max,
        )
        if found is None:
            print(
                f"search e={args.e}: none found within bound={args.bound}, "
                f"terms<={args.max_terms}, d<={args.d_max}",
                file=out,
            )
        else:
            print(f"search e={args.e}: found", file=out)
            print(found.to_json(), file=out)
    elif not reps:
        print(f"no built-in representation for e={args.e}; use --search or --rep-file", file=out)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genphi", description="Generalized Euler function phi_e(n)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="phi_e(n) for one n")
    c.add_argument("--e", type=positive_int, required=True)
    c.add_argument("n", type=positive_int)
    c.add_argument("--all-methods", action="store_true", help="show every evaluator side by side")
    c.add_argument("--brute-limit", type=int, default=10**7, help="skip the counting oracle above n/e = this")
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="one record per n in a range")
    t.add_argument("--e", type=positive_int, required=True)
    t.add_argument("--from", dest="lo", type=positive_int, default=1)
    t.add_argument("--to", dest="hi", type=nonnegative_int, required=True)
    t.add_argument("--format", choices=("csv", "tsv", "json"), default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="sweep 1..max against the oracles")
    v.add_argument("--e", type=positive_int, required=True)
    v.add_argument("--max", type=positive_int, required=True)
    v.add_argument("--oracle", choices=ORACLES, default="both")
    v.add_argument("--brute-cap", type=positive_int, default=BRUTE_CAP, help="largest n checked by counting")
    v.add_argument("--jobs", type=positive_int, default=1)
    v.add_argument("--show", type=int, default=20, help="mismatches to print")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("conjecture", help="check or search floor representations")
    k.add_argument("--e", type=positive_int, required=True)
    k.add_argument("--d-max", type=positive_int, default=10**5)
    k.add_argument("--search", action="store_true")
    k.add_argument("--even", action="store_true", help="search the even-d form")
    k.add_argument("--bound", type=positive_int, default=8)
    k.add_argument("--max-terms", type=nonnegative_int, default=2)
    k.add_argument("--rep-file", help="JSON representation to verify instead of the built-in")
    k.set_defaults(func=cmd_conjecture)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.command == "conjecture" and args.e < 2:
        print("conjecture needs e >= 2", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
