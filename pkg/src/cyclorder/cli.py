"""Command-line front end.

    cyclorder analyze --input matrix.json [--mode pgl] [--format json]
    cyclorder selftest [--size 5]
    cyclorder norm --p 5 --elt -1,1,0,0
    cyclorder phi 12 [--poly]
    cyclorder reduce --p 5 --k 2 --elt 5,0,0,0

Exit status: 0 on success whatever the verdict, 1 when selftest finds a
disagreement, 2 for usage or input errors, 3 when the matrix is not in
GL_d(Z[zeta_p]).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cyclopoly import cyclotomic_poly, phi_at_one
from .cycmatrix import NotInvertibleError
from .cycring import CycInt, h_valuation_at_least, normalized_norm
from .matrixdoc import DocumentError, loads_matrix
from .orderengine import GroupMode, classify_order
from .suites import DEFAULT_DIMS, DEFAULT_PRIMES, format_report, run_suites

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_NOT_INVERTIBLE = 3


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--mode", choices=["gl", "pgl"], default=default("gl"),
                        help="group in which the order is taken (default gl)")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for generated suites (default 0)")
    parser.add_argument("--format", choices=["text", "json"], default=default("text"), dest="fmt",
                        help="output format (default text)")
    parser.add_argument("--input", default=default(None), help="matrix document path, or - for stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclorder", description="Order of matrices over Z[zeta_p].")
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="classify the order of a matrix document")
    _add_global_flags(p_an, suppress=True)
    p_an.add_argument("path", nargs="?", help="matrix document (alternative to --input)")

    p_st = sub.add_parser("selftest", help="run the generated agreement suites")
    _add_global_flags(p_st, suppress=True)
    p_st.add_argument("--size", type=int, default=5, help="instances per (p, d) cell (default 5)")
    p_st.add_argument("--primes", default=",".join(map(str, DEFAULT_PRIMES)))
    p_st.add_argument("--dims", default=",".join(map(str, DEFAULT_DIMS)))
    p_st.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    p_norm = sub.add_parser("norm", help="normalized norm of an element of Z[zeta_p]")
    _add_global_flags(p_norm, suppress=True)
    p_norm.add_argument("--p", type=int, required=True, dest="prime")
    p_norm.add_argument("--elt", required=True, help="comma-separated power-basis coefficients")

    p_phi = sub.add_parser("phi", help="value of the n-th cyclotomic polynomial at 1")
    _add_global_flags(p_phi, suppress=True)
    p_phi.add_argument("n", type=int)
    p_phi.add_argument("--poly", action="store_true", help="also print the coefficients of phi_n")

    p_red = sub.add_parser("reduce", help="test membership in (zeta_p - 1)^k")
    _add_global_flags(p_red, suppress=True)
    p_red.add_argument("--p", type=int, required=True, dest="prime")
    p_red.add_argument("--k", type=int, required=True)
    p_red.add_argument("--elt", required=True, help="comma-separated power-basis coefficients")
    return parser


def _emit(args, text_lines: Sequence[str], payload: dict) -> None:
    if args.fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _read_input(args) -> str:
    src = args.input or getattr(args, "path", None)
    if src is None:
        raise DocumentError("no input given; pass --input <path> or - for stdin")
    if src == "-":
        return sys.stdin.read()
    try:
        with open(src, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {src}: {exc.strerror}") from None


def cmd_analyze(args) -> int:
    try:
        A = loads_matrix(_read_input(args))
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        verdict = classify_order(A, GroupMode(args.mode))
    except NotInvertibleError as exc:
        print(f"error: not invertible: {exc}", file=sys.stderr)
        return EXIT_NOT_INVERTIBLE
    cert = verdict.certificate()
    if args.fmt == "json":
        sys.stdout.write(verdict.to_json())
    else:
        for key, value in cert.items():
            if isinstance(value, list):
                value = ",".join(value) if value else "-"
            sys.stdout.write(f"{key}: {'-' if value is None else value}\n")
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def cmd_selftest(args) -> int:
    rows = run_suites(
        primes=_int_list(args.primes),
        dims=_int_list(args.dims),
        size=args.size,
        seed=args.seed,
        inject_fault=args.inject_fault,
    )
    ok = all(r.ok for r in rows)
    payload = {
        "seed": str(args.seed),
        "size": str(args.size),
        "suites": [
            {
                "class": r.name,
                "count": str(r.count),
                "agreements": str(r.agreements),
                "rules": {k: str(v) for k, v in sorted(r.rules.items())},
                "failures": r.failures,
            }
            for r in rows
        ],
        "status": "ok" if ok else "disagreement",
    }
    _emit(args, [format_report(rows)], payload)
    return EXIT_OK if ok else EXIT_DISAGREEMENT


def cmd_norm(args) -> int:
    x = CycInt.parse(args.prime, args.elt)
    value = str(normalized_norm(x))
    _emit(args, [value], {"p": str(args.prime), "norm": value})
    return EXIT_OK


def cmd_phi(args) -> int:
    value = phi_at_one(args.n)
    lines = [str(value)]
    payload: dict = {"n": str(args.n), "phi_at_one": str(value)}
    if args.poly:
        coeffs = cyclotomic_poly(args.n)
        lines.append(" ".join(str(c) for c in coeffs))
        payload["coefficients"] = [str(c) for c in coeffs]
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_reduce(args) -> int:
    x = CycInt.parse(args.prime, args.elt)
    inside = h_valuation_at_least(x, args.k)
    flag = "true" if inside else "false"
    _emit(args, [f"in-ideal: {flag}"], {"p": str(args.prime), "k": str(args.k), "in_ideal": inside})
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "selftest": cmd_selftest,
    "norm": cmd_norm,
    "phi": cmd_phi,
    "reduce": cmd_reduce,
}


def _glue_values(argv: list[str]) -> list[str]:
    # "--elt -1,1,0,0" would otherwise be read as an unknown option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--elt":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--elt={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_values(argv))
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
