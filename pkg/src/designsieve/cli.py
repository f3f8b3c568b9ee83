"""Command-line interface.

Subcommands:

* ``scan``   — sweep a dimension range and write a report;
* ``check``  — run the full pipeline on one (n, M) pair, printing every
  intermediate quantity;
* ``bounds`` — print the admissible cardinality window for a dimension.

Exit codes: 0 = completed with no survivors, 10 = survivors found,
1 = operational error (bad arguments, invalid candidate, corrupted ledger).
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from .candidates import CandidateError, cardinality_bounds
from .formulas import (
    quartic_coefficients,
    r_poly_value,
    shorthand_A,
    shorthand_B,
)
from .records import Stage
from .scan import LedgerError, check, scan
from .spectrum import PrecisionPolicy, nozaki_bound

EXIT_OK = 0
EXIT_SURVIVORS = 10
EXIT_ERROR = 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="designsieve",
        description=(
            "Exact-arithmetic search for spherical 4-distance 7-designs: "
            "divisibility sieves, integrality invariants, and certified "
            "spectrum analysis."
        ),
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log per-dimension progress"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_precision_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--precision-start",
            type=int,
            default=128,
            metavar="BITS",
            help="initial working precision for root enclosures (default 128)",
        )
        p.add_argument(
            "--precision-max",
            type=int,
            default=16384,
            metavar="BITS",
            help="precision ceiling before a candidate is kept as a survivor",
        )
        p.add_argument(
            "--confirmation-width",
            type=int,
            default=64,
            metavar="BITS",
            help=(
                "enclosure width (in bits) required before a quantity is "
                "accepted as numerically integral (default 64)"
            ),
        )
        p.add_argument(
            "--enable-k-factorization-stage",
            action="store_true",
            help=(
                "also refute candidates whose integral k-product admits no "
                "bounded factorization into four integers summing to 1"
            ),
        )

    p_scan = sub.add_parser("scan", help="sweep a range of dimensions")
    p_scan.add_argument("--n-min", type=int, required=True)
    p_scan.add_argument("--n-max", type=int, required=True)
    p_scan.add_argument(
        "--mode",
        choices=("staged", "brute"),
        default="staged",
        help="staged: sieve-first lattice enumeration; brute: every M",
    )
    p_scan.add_argument("--out", metavar="PATH", help="write the report here")
    p_scan.add_argument(
        "--format",
        choices=("jsonl", "csv", "summary"),
        default="jsonl",
        help="report format for --out (default jsonl)",
    )
    p_scan.add_argument(
        "--jobs", type=int, default=1, metavar="K", help="parallel worker processes"
    )
    p_scan.add_argument(
        "--resume",
        action="store_true",
        help="skip dimensions already completed in the ledger next to --out",
    )
    add_precision_flags(p_scan)

    p_check = sub.add_parser("check", help="analyze a single (n, M) pair")
    p_check.add_argument("n", type=int)
    p_check.add_argument("m", type=int)
    add_precision_flags(p_check)

    p_bounds = sub.add_parser(
        "bounds", help="print the admissible cardinality window for n"
    )
    p_bounds.add_argument("n", type=int)

    return parser


def _policy(args: argparse.Namespace) -> PrecisionPolicy:
    return PrecisionPolicy(
        start_bits=args.precision_start,
        max_bits=args.precision_max,
        confirmation_bits=args.confirmation_width,
    )


def _fmt_fraction(x: Fraction | None) -> str:
    if x is None:
        return "undefined (singular denominator)"
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} ≈ {float(x):.6f}"


def _fmt_enclosures(name: str, encl) -> str:
    if encl is None:
        return f"  {name}: not computed"
    parts = ", ".join(
        f"[{float(lo):.6f}, {float(hi):.6f}]" for lo, hi in encl
    )
    return f"  {name}: {parts}"


def _run_check(args: argparse.Namespace) -> int:
    n, M = args.n, args.m
    lower, upper = None, None
    try:
        lower, upper = cardinality_bounds(n)
    except CandidateError:
        pass
    try:
        record = check(
            n,
            M,
            policy=_policy(args),
            enable_k_factorization=args.enable_k_factorization_stage,
        )
    except CandidateError as exc:
        print(f"candidate (n={n}, M={M}) rejected: {exc}")
        if lower is not None:
            print(f"admissible window: {lower} < M <= {upper}")
        return EXIT_ERROR

    A = shorthand_A(n, M)
    B = shorthand_B(n, M)
    coeffs = quartic_coefficients(n, M)
    R = r_poly_value(n, M)

    print(f"candidate: n={n}, M={M}  (window {lower} < M <= {upper})")
    print(f"A = 6M - n(n+1)(n+5) = {A}")
    print(f"B = 3M - n(n+1)(n+2) = {B}")
    print(f"quartic coefficients (t^4..t^0): {coeffs}")
    print(f"R(n, M) = {R}")
    print(
        f"divisibility sieve: lemma3 case {record.lemma3_case} "
        f"{'passed' if record.lemma3_passed else 'FAILED'}, "
        f"lemma5 case {record.lemma5_case} "
        f"{'passed' if record.lemma5_passed else 'FAILED'}"
    )
    print(f"XYZT product: {_fmt_fraction(record.xyzt)}"
          f"  (integer: {record.xyzt_integer})")
    print(f"k-product: {_fmt_fraction(record.nozaki)}"
          f"  (integer: {record.nozaki_integer})")
    print(f"Nozaki coefficient bound for n={n}: |k| <= {nozaki_bound(n)}")
    print(_fmt_enclosures("roots a<b<c<d", record.roots))
    print(_fmt_enclosures("weights X,Y,Z,T", record.xyz_t))
    print(_fmt_enclosures("coefficients k_a,k_b,k_c,k_d", record.k))
    if record.precision_bits is not None:
        print(f"  precision used: {record.precision_bits} bits")
    print(f"stage reached: {record.stage.value}")
    if record.stage is Stage.SURVIVOR:
        print("verdict: SURVIVOR — not refuted by any stage")
        return EXIT_SURVIVORS
    print(f"verdict: refuted — {record.refutation}")
    return EXIT_OK


def _run_scan(args: argparse.Namespace) -> int:
    report = scan(
        args.n_min,
        args.n_max,
        mode=args.mode,
        policy=_policy(args),
        output_path=args.out,
        output_format=args.format,
        jobs=args.jobs,
        resume=args.resume,
        enable_k_factorization=args.enable_k_factorization_stage,
    )
    print(
        f"scanned n in [{report.n_min}, {report.n_max}] ({report.mode}): "
        f"{report.candidates_total} candidates, "
        f"{report.xyzt_passed} with integral XYZT, "
        f"{report.nozaki_passed} with integral k-product, "
        f"{report.survivors} survivors"
    )
    if args.out:
        print(f"report written to {args.out}")
    if report.survivors:
        for r in report.survivor_records:
            print(f"SURVIVOR: n={r.n}, M={r.M}")
        return EXIT_SURVIVORS
    return EXIT_OK


def _run_bounds(args: argparse.Namespace) -> int:
    lower, upper = cardinality_bounds(args.n)
    print(
        f"n={args.n}: admissible cardinalities are {lower} < M <= {upper}"
        f" ({upper - lower} values; M={lower} is the tight-design boundary)"
    )
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(message)s",
    )
    try:
        if args.command == "scan":
            return _run_scan(args)
        if args.command == "check":
            return _run_check(args)
        if args.command == "bounds":
            return _run_bounds(args)
        raise AssertionError(f"unhandled command {args.command!r}")
    except (CandidateError, LedgerError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main(argv=None))
