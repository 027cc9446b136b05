"""Command-line interface.

Subcommands:
    gen-full       enumerate every operator for a given n
    gen-min        build the minimal balanced set for a given n
    check-balance  exact balance verdict for a stored operator set
    check-funtf    numerical moving-frame certification
    matrix         print the pairing matrix
    demo-erasure   compare erasure robustness of a frame against a basis

Exit codes: 0 success / verdict true, 1 verdict false, 2 usage error,
3 malformed input document.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .balance import build_minimal_balanced, build_pairing_matrix, is_balanced
from .documents import DocumentError, document_dict, read_document
from .framecheck import (operator_images, reconstruct, verify_moving_funtf,
                         witness_unbalanced)
from .operators import DEFAULT_ENUMERATION_CAP, enumerate_full
from .sphere import project_tangent, sample_sphere, tangent_basis

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3


def _emit(payload, output: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _emit_text(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def cmd_gen_full(args) -> int:
    cap = args.cap_override if args.cap_override is not None else DEFAULT_ENUMERATION_CAP
    try:
        a_set = enumerate_full(args.n, cap=cap)
    except ValueError as exc:
        print(f"error: {exc} (see --cap-override)", file=sys.stderr)
        return EXIT_USAGE
    _emit(document_dict(a_set, generator="full-enumeration",
                        timestamp=not args.no_timestamp), args.output)
    return EXIT_OK


def cmd_gen_min(args) -> int:
    a_set = build_minimal_balanced(args.n)
    _emit(document_dict(a_set, generator="theorem-3.4",
                        timestamp=not args.no_timestamp), args.output)
    return EXIT_OK


def cmd_check_balance(args) -> int:
    a_set = read_document(args.file)
    report = is_balanced(a_set)
    _emit(report.to_dict(), args.output)
    return EXIT_OK if report.balanced else EXIT_VERDICT_FALSE


def cmd_check_funtf(args) -> int:
    a_set = read_document(args.file)
    report = verify_moving_funtf(a_set, num_samples=args.samples, seed=args.seed,
                                 tolerance=args.tol)
    payload = report.to_dict()
    if not report.tight:
        balance = is_balanced(a_set)
        if not balance.balanced:
            payload["witness"] = witness_unbalanced(a_set, balance).to_dict()
    _emit(payload, args.output)
    return EXIT_OK if report.tight else EXIT_VERDICT_FALSE


def cmd_matrix(args) -> int:
    _emit_text(build_pairing_matrix(args.n).as_text() + "\n", args.output)
    return EXIT_OK


def cmd_demo_erasure(args) -> int:
    a_set = read_document(args.file)
    if args.erase >= len(a_set):
        print(f"error: cannot erase {args.erase} of {len(a_set)} coefficients",
              file=sys.stderr)
        return EXIT_USAGE
    balance = is_balanced(a_set)
    if not balance.balanced:
        print("error: erasure demo requires a balanced operator set", file=sys.stderr)
        return EXIT_USAGE

    d = a_set.dim
    constant = len(a_set) / (d - 1)
    rng = np.random.default_rng(args.point_seed)
    frame_errors = []
    basis_errors = []
    for _ in range(args.trials):
        a = rng.standard_normal(d)
        a /= np.linalg.norm(a)
        x = project_tangent(a, rng.standard_normal(d))

        coeffs = operator_images(a_set, a) @ x
        erased = rng.choice(len(a_set), size=args.erase, replace=False)
        coeffs[erased] = 0.0
        frame_errors.append(float(np.linalg.norm(reconstruct(a_set, a, coeffs, constant) - x)))

        basis = tangent_basis(a)
        bcoeffs = basis @ x
        # The baseline basis only has 2n-1 coordinates to lose.
        lost = rng.choice(d - 1, size=min(args.erase, d - 1), replace=False)
        basis_errors.append(float(np.linalg.norm(bcoeffs[lost])))

    _emit({
        "trials": args.trials,
        "erased": args.erase,
        "error_norm_frame": float(np.mean(frame_errors)),
        "error_norm_basis_baseline": float(np.mean(basis_errors)),
    }, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", metavar="FILE",
                        help="write output here instead of stdout")
    common.add_argument("--tol", type=float, default=1e-9,
                        help="tightness tolerance (default 1e-9)")
    common.add_argument("--samples", type=int, default=100,
                        help="random sphere points to check (default 100)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for random sphere points (default 0)")
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit the created timestamp from documents")
    common.add_argument("--cap-override", type=int, metavar="N",
                        help="raise the enumeration cap for gen-full")

    parser = argparse.ArgumentParser(
        prog="movingframes",
        description="Signed-involution vector fields and moving tight frames on odd spheres.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-full", parents=[common],
                       help="enumerate all operators for dimension 2n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_gen_full)

    p = sub.add_parser("gen-min", parents=[common],
                       help="build the minimal balanced set of (2n-1)*2^(n-1) operators")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_gen_min)

    p = sub.add_parser("check-balance", parents=[common],
                       help="exact balance verdict for an operator-set document")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_balance)

    p = sub.add_parser("check-funtf", parents=[common],
                       help="certify a moving tight frame numerically")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_funtf)

    p = sub.add_parser("matrix", parents=[common], help="print the pairing matrix")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("demo-erasure", parents=[common],
                       help="compare reconstruction error after coefficient erasures")
    p.add_argument("file")
    p.add_argument("--erase", type=int, default=1, metavar="M",
                   help="coefficients to zero per trial (default 1)")
    p.add_argument("--point-seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_demo_erasure)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
