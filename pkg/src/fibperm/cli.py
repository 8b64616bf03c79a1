"""Command-line front end.

Exit codes: 0 success / all rows MATCH, 1 a MISMATCH (or disagreeing
benchmark values), 2 usage errors and refused inputs.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from fibperm.contraction import per_contraction
from fibperm.errors import MatrixError, SizeGuardError, ValidityFloorError, NotContractibleError
from fibperm.families import Family, FamilySpec, build_family
from fibperm.matrix import IntMatrix, make_matrix
from fibperm.verify import (
    METHODS,
    Theorem,
    TheoremId,
    Variant,
    evaluate,
    verify_perdet,
    verify_theorem,
    verify_trace,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

REPORT_COLUMNS = ["theorem", "n", "method", "computed", "claimed", "status",
                  "oracle_checked"]
BENCH_COLUMNS = ["family", "n", "method", "value", "elapsed_ns"]


class UsageError(Exception):
    pass


# -- matrix JSON schema --------------------------------------------------------

def encode_matrix(a: IntMatrix) -> dict:
    return {
        "n_rows": a.n_rows,
        "n_cols": a.n_cols,
        "entries": [[str(x) for x in row] for row in a.rows],
    }


def decode_matrix(doc: dict) -> IntMatrix:
    try:
        entries = doc["entries"]
        rows = [[int(x) if isinstance(x, str) else x for x in row]
                for row in entries]
        a = make_matrix(rows)
        if (a.n_rows, a.n_cols) != (doc["n_rows"], doc["n_cols"]):
            raise MatrixError("declared shape %sx%s does not match entries %dx%d"
                              % (doc["n_rows"], doc["n_cols"], a.n_rows, a.n_cols))
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixError("bad matrix document: %s" % exc) from None
    return a


def _int_list(text):
    if text is None or text.strip() == "":
        return []
    return [int(x) for x in text.split(",")]


def _spec_from_args(args) -> FamilySpec:
    try:
        fam = Family.parse(args.family)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if fam is Family.TRIDIAG:
        return FamilySpec(fam, args.n, _int_list(args.sub), _int_list(args.main),
                          _int_list(args.super))
    return FamilySpec(fam, args.n)


def _add_family_args(p, required):
    p.add_argument("--family", required=required,
                   help="H, K, M, N, LEE, S or TRIDIAG")
    p.add_argument("--n", type=int, required=required)
    p.add_argument("--sub", help="TRIDIAG subdiagonal, comma separated")
    p.add_argument("--main", help="TRIDIAG main diagonal, comma separated")
    p.add_argument("--super", help="TRIDIAG superdiagonal, comma separated")


# -- commands -------------------------------------------------------------------

def cmd_gen(args, out):
    a = build_family(_spec_from_args(args))
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerows(a.rows)
    else:
        json.dump(encode_matrix(a), out)
        out.write("\n")
    return EXIT_OK


def _load_input(args):
    if args.file:
        if args.family:
            raise UsageError("give either --file or --family/--n, not both")
        fh = sys.stdin if args.file == "-" else open(args.file)
        try:
            return decode_matrix(json.load(fh))
        except json.JSONDecodeError as exc:
            raise UsageError("%s is not valid JSON: %s" % (args.file, exc)) from None
        finally:
            if fh is not sys.stdin:
                fh.close()
    if not args.family or args.n is None:
        raise UsageError("need --family and --n, or --file")
    return build_family(_spec_from_args(args))


def cmd_per(args, out):
    a = _load_input(args)
    if args.trace:
        if args.method != "contraction":
            raise UsageError("--trace is only available with --method contraction")
        value, trace = per_contraction(a)
        out.write("initial %dx%d\n%s\n" % (a.n_rows, a.n_cols, a))
        for r, (step, b) in enumerate(zip(trace.steps, trace.intermediates), 1):
            out.write("step %d: %s\n%s\n" % (r, step.describe(), b))
        out.write("terminal %dx%d evaluated by %s\n"
                  % (trace.final.n_rows, trace.final.n_cols, trace.terminal_method))
    else:
        value = evaluate(a, args.method)
    out.write("%d\n" % value)
    return EXIT_OK


def _theorem_ids(args):
    ids = []
    variants = {"paper": [Variant.PAPER_STATED],
                "corrected": [Variant.DERIVED_CORRECTED],
                "both": [Variant.PAPER_STATED, Variant.DERIVED_CORRECTED]}[args.variant]
    for name in args.theorems.split(","):
        try:
            tag = Theorem.parse(name)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if tag in (Theorem.PERDET_TRIDIAG, Theorem.PERDET_S):
            raise UsageError("%s is checked by the perdet command" % tag.value)
        if tag is Theorem.T3_M_FIBSUM:
            ids.extend(TheoremId(tag, v) for v in variants)
        else:
            ids.append(TheoremId(tag))
    return ids


def cmd_verify(args, out):
    ids = _theorem_ids(args)
    rows = []
    for tid in ids:
        n_min = args.n_min
        rows.extend(verify_theorem(tid, n_min, args.n_max, args.method,
                                   args.oracle_max_n))
    w = csv.writer(out, lineterminator="\n")
    w.writerow(REPORT_COLUMNS)
    for rep in rows:
        w.writerow([rep.theorem.label, rep.n, rep.method, rep.computed,
                    rep.claimed, rep.status, str(rep.oracle_checked).lower()])
    return EXIT_OK if all(r.status == "MATCH" for r in rows) else EXIT_MISMATCH


def cmd_trace(args, out):
    status = EXIT_OK
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["family", "n", "r", "check", "status"])
    for name in args.families.split(","):
        for n in range(args.n_min, args.n_max + 1):
            rep = verify_trace(name.strip(), n)
            for step in rep.steps:
                ok = step.match
                if not ok:
                    status = EXIT_MISMATCH
                w.writerow([rep.family.value, n, step.r, "closed-form",
                            "MATCH" if ok else "MISMATCH"])
                for d in step.displays:
                    w.writerow([rep.family.value, n, step.r, "paper " + d.label,
                                "MATCH" if d.match else "PAPER_DISPLAY_MISMATCH"])
    return status


def cmd_perdet(args, out):
    rep = verify_perdet(args.trials, args.n_max, args.seed)
    out.write("seed=%d trials=%d n_max=%d passes=%d failures=%d\n"
              % (rep.seed, rep.trials, rep.n_max, rep.passes, len(rep.failures)))
    for sub, main, sup, values in rep.failures:
        out.write("FAIL sub=%s main=%s super=%s values=%s\n" % (sub, main, sup, values))
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_bench(args, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(BENCH_COLUMNS)
    status = EXIT_OK
    methods = [m.strip() for m in args.methods.split(",")]
    for m in methods:
        if m not in METHODS:
            raise UsageError("unknown method %r" % m)
    for name in args.families.split(","):
        try:
            fam = Family.parse(name)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for n in _int_list(args.n_list):
            a = build_family(FamilySpec(fam, n))
            values = set()
            for m in methods:
                start = time.perf_counter_ns()
                try:
                    value = evaluate(a, m)
                except (SizeGuardError, NotContractibleError):
                    w.writerow([fam.value, n, m, "SKIPPED", ""])
                    continue
                elapsed = time.perf_counter_ns() - start
                values.add(value)
                w.writerow([fam.value, n, m, value, elapsed])
            if len(values) > 1:
                status = EXIT_MISMATCH
    return status


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fibperm",
        description="Exact permanents of integer matrices and Fibonacci/Lucas "
                    "permanent identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a family matrix")
    _add_family_args(p, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("per", help="compute a permanent")
    _add_family_args(p, required=False)
    p.add_argument("--file", help="matrix JSON document, '-' for stdin")
    p.add_argument("--method", choices=METHODS, default="contraction")
    p.add_argument("--trace", action="store_true",
                   help="print every contraction step and intermediate matrix")
    p.set_defaults(func=cmd_per)

    p = sub.add_parser("verify", help="sweep identities over a range of n")
    p.add_argument("--theorems", default="T1,T2,T3,T4,LEE")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--method", choices=METHODS, default="contraction")
    p.add_argument("--oracle-max-n", type=int, default=16)
    p.add_argument("--variant", choices=("paper", "corrected", "both"),
                   default="paper", help="which Theorem 3 right-hand side")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trace", help="check contraction chains against closed forms")
    p.add_argument("--families", default="H,K,M,N")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=16)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("perdet", help="random tridiagonal per/det conversions")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_perdet)

    p = sub.add_parser("bench", help="time evaluators against each other")
    p.add_argument("--families", default="H")
    p.add_argument("--n-list", default="10,20")
    p.add_argument("--methods", default="contraction,hessenberg")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, SizeGuardError, ValidityFloorError, MatrixError,
            NotContractibleError, ValueError) as exc:
        sys.stderr.write("fibperm %s: error: %s\n" % (args.command, exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
