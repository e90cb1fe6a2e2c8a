"""Command-line front end.

Commands: validate, invert, invariants, classify, enumerate, phi.
All reports are JSON on stdout.  Exit codes: 0 success, 1 input or
parameter error, 2 valid but not birational, 3 a mathematically guaranteed
property failed (which would disprove the degree bound).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import jsonutil
from .enumeration import verify_bounds
from .errors import (
    CremonaError,
    NotBirational,
    ParseError,
    TheoryViolation,
)
from .formats import load_matrix, matrix_document, render_matrix_text
from .invariants import johnson_check
from .maps import ExponentMatrix, classify_case, invert, is_birational, phi_nd, validate

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_BIRATIONAL = 2
EXIT_THEORY = 3

ENUM_LIMITS = {2: 20, 3: 8, 4: 3}


def _emit(obj) -> None:
    print(jsonutil.dumps(obj))


def _load_validated(args) -> ExponentMatrix:
    rows, _, _ = load_matrix(args.input)
    return validate(rows, normalize=args.normalize)


def cmd_validate(args) -> int:
    try:
        rows, _, _ = load_matrix(args.input)
        E = validate(rows, normalize=args.normalize)
    except (ParseError, CremonaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"valid": False, "error": type(exc).__name__})
        return EXIT_ERROR
    birational = is_birational(E)
    normalized = args.normalize and E.rows != tuple(tuple(r) for r in rows)
    _emit(
        {
            "valid": True,
            "n": E.n,
            "d": E.d,
            "birational": birational,
            "normalized": bool(normalized),
        }
    )
    return EXIT_OK if birational else EXIT_NOT_BIRATIONAL


def cmd_invert(args) -> int:
    E = _load_validated(args)
    B = invert(E)
    _emit({"rows": [list(r) for r in B.rows], "dprime": B.d})
    return EXIT_OK


def cmd_invariants(args) -> int:
    E = _load_validated(args)
    if E.n != 3 or E.d < 2:
        print("error: invariants require a map of P^3 with d >= 2", file=sys.stderr)
        return EXIT_ERROR
    report = johnson_check(E, oracle=args.oracle)
    print(report.to_json())
    return EXIT_OK


def cmd_classify(args) -> int:
    E = _load_validated(args)
    if E.n != 3 or E.d < 2:
        print("error: classification requires a map of P^3 with d >= 2", file=sys.stderr)
        return EXIT_ERROR
    case = classify_case(E)
    _emit(
        {
            "case": case.label,
            "column": case.column,
            "lines": [list(p) for p in case.lines],
        }
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n not in ENUM_LIMITS:
        print("error: --n must be 2, 3 or 4", file=sys.stderr)
        return EXIT_ERROR
    if not 1 <= args.d <= ENUM_LIMITS[args.n]:
        print(
            f"error: --d must be between 1 and {ENUM_LIMITS[args.n]} for n = {args.n}",
            file=sys.stderr,
        )
        return EXIT_ERROR
    on_class = None
    dump = None
    if args.dump:
        dump = open(args.dump, "w", encoding="utf-8")

        def on_class(E):
            dump.write(json.dumps([list(r) for r in E.rows]) + "\n")

    try:
        summary = verify_bounds(args.n, args.d, jobs=args.jobs, on_class=on_class)
    finally:
        if dump is not None:
            dump.close()
    print(summary.to_json())
    return EXIT_THEORY if summary.violations else EXIT_OK


def cmd_phi(args) -> int:
    if args.n < 2 or args.d < 1:
        print("error: need --n >= 2 and --d >= 1", file=sys.stderr)
        return EXIT_ERROR
    E = phi_nd(args.n, args.d)
    if args.json:
        _emit(matrix_document(E))
    else:
        sys.stdout.write(render_matrix_text(E))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monocremona",
        description="Exact tools for monomial Cremona transformations.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=20260809,
        help="seed for any randomized subcommand (all current commands are deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="matrix file (text or JSON), or - for stdin")
        p.add_argument(
            "--normalize",
            action="store_true",
            help="divide out a common monomial factor instead of rejecting it",
        )
        return p

    p = matrix_command("validate", "check matrix validity and birationality")
    p.set_defaults(func=cmd_validate)

    p = matrix_command("invert", "compute the inverse exponent matrix and d'")
    p.set_defaults(func=cmd_invert)

    p = matrix_command("invariants", "full invariant report for a map of P^3")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="recompute the k vector through polynomial squarefree parts and cross-check",
    )
    p.set_defaults(func=cmd_invariants)

    p = matrix_command("classify", "base-locus case analysis for a map of P^3")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="enumerate all classes and verify the bounds")
    p.add_argument("--n", type=int, required=True, help="ambient dimension (2, 3 or 4)")
    p.add_argument("--d", type=int, required=True, help="degree")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument("--dump", help="write every canonical matrix to this file, one JSON row list per line")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("phi", help="print the extremal map phi_{n,d}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--json", action="store_true", help="emit a JSON matrix document instead of text")
    p.set_defaults(func=cmd_phi)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    random.seed(args.seed)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except NotBirational as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_BIRATIONAL
    except TheoryViolation as exc:
        print(f"theory violation: {exc}", file=sys.stderr)
        return EXIT_THEORY
    except (CremonaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
