"""Command-line interface.

Exit status: 0 certified / ok, 1 verification failure or oracle mismatch,
2 usage, parameter or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import matrix_file
from .construction import build
from .failure import best_residues, oracle_rows, scan_all_L
from .field import FieldError, field_for_q
from .fixtures import fixture_tuples
from .matrix_file import MatrixFileError
from .parameters import ParameterError, enumerate_params, validate
from .verification import (
    DEFAULT_EXHAUSTIVE_CAP, DEFAULT_MINOR_CAP, DEFAULT_SAMPLES,
    CertificationError, certify_matrix, derive_quantum_params, full_certificate,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TABLE_COLUMNS = ("q", "lambda", "tau", "rho", "sigma", "kappa", "case", "L", "T", "n")


def _format_table(rows: list[dict], columns) -> str:
    widths = [max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in columns]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(str(r[c]).rjust(w) for c, w in zip(columns, widths)) for r in rows]
    return "\n".join(lines)


def cmd_enumerate(args) -> int:
    rows = [p.as_record() for p in enumerate_params(args.q, args.max_n)]
    if args.format == "json":
        print(json.dumps(rows, indent=1))
    else:
        print(_format_table(rows, TABLE_COLUMNS))
    return EXIT_OK


def cmd_construct(args) -> int:
    params = validate(args.q, args.lam, args.tau, args.rho, args.sigma)
    quantum = derive_quantum_params(params, args.d)
    ctx = field_for_q(args.q)
    gm = build(ctx, params).generator_matrix(args.d - 1)
    matrix_file.write(args.out, matrix_file.from_generator(ctx, gm))
    print(f"{quantum} case={params.case} L={params.L} T={params.T} k={gm.k} -> {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    mf = matrix_file.read(args.path)
    ctx = mf.field()
    notes = []
    try:
        params = validate(mf.q, mf.lam, mf.tau, mf.rho, mf.sigma)
    except ParameterError as exc:
        params = None
        notes.append(f"header parameters rejected: {exc}")
    cert = certify_matrix(ctx, mf.rows, params, minor_cap=args.minor_cap, samples=args.samples,
                          exhaustive_cap=args.exhaustive_cap, seed=args.seed)
    cert.obligations["parameters_admissible"] = params is not None
    if params is not None:
        cert.obligations["L_matches_table"] = mf.L == params.L
    cert.notes.extend(notes)
    print(json.dumps(cert.as_record(), indent=1))
    return EXIT_OK if cert.ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    if min(args.lam, args.tau, args.rho) < 2:
        raise ParameterError("moduli", "lambda, tau and rho must all be at least 2")
    rows = oracle_rows(args.lam, args.tau, args.rho, args.L, args.bound, args.all_L)
    if args.json:
        print(json.dumps(rows, indent=1))
    else:
        print(_format_table(rows, ("lambda", "tau", "rho", "L", "T1", "T2", "matches_closed_form")))
    if args.all_L:
        scan = scan_all_L(args.lam, args.tau, args.rho, args.bound)
        print(f"residues maximising T2: {best_residues(scan)}", file=sys.stderr if args.json else sys.stdout)
    return EXIT_FAIL if any(r["matches_closed_form"] is False for r in rows) else EXIT_OK


def cmd_reproduce(args) -> int:
    tuples = fixture_tuples(args.fixture, args.q, args.m, args.sigma)
    status = EXIT_OK
    records = []
    for q, lam, tau, rho, sigma, d in tuples:
        params = validate(q, lam, tau, rho, sigma)
        try:
            cert = full_certificate(field_for_q(q), params, d, minor_cap=args.minor_cap,
                                    samples=args.samples, exhaustive_cap=args.exhaustive_cap,
                                    seed=args.seed)
            verdict = "certified"
        except CertificationError as exc:
            cert = exc.certificate
            verdict = f"FAILED ({exc.obligation})"
            status = EXIT_FAIL
        mds = cert.mds
        detail = f"mds={mds.mode}:{mds.minors_checked}"
        if cert.exhaustive_distance is not None:
            detail += f" exhaustive_d={cert.exhaustive_distance}"
        records.append({"params": params.as_record(), "d": d, "verdict": verdict, **cert.as_record()})
        if not args.json:
            print(f"{derive_quantum_params(params, d)} {verdict} case={params.case} L={params.L} "
                  f"T={params.T} {detail}")
    if args.json:
        print(json.dumps(records, indent=1))
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qmds", description="Quantum MDS codes from Hermitian self-orthogonal GRS codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list admissible (lambda, tau, rho, sigma) for q")
    p.add_argument("q", type=int)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("construct", help="write the generator matrix of a [[n, n-2d+2, d]]_q code")
    for name in ("q", "lam", "tau", "rho", "sigma", "d"):
        p.add_argument(name, type=int)
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_construct)

    def caps(p):
        p.add_argument("--minor-cap", type=int, default=DEFAULT_MINOR_CAP,
                       help="largest C(n, k) swept exhaustively")
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                       help="random minors checked above the cap")
        p.add_argument("--exhaustive-cap", type=int, default=DEFAULT_EXHAUSTIVE_CAP,
                       help="largest codeword count enumerated for the distance")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="certify a matrix file")
    p.add_argument("path")
    caps(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force first failure point")
    p.add_argument("lam", type=int)
    p.add_argument("tau", type=int)
    p.add_argument("rho", type=int)
    p.add_argument("--L", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--all-L", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reproduce", help="construct and certify a named family")
    p.add_argument("fixture", choices=("c1", "c2", "c3", "small-d"))
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--m", type=int, default=None, help="family parameter m (c2, c3)")
    p.add_argument("--sigma", type=int, default=None)
    p.add_argument("--json", action="store_true")
    caps(p)
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, FieldError, MatrixFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
