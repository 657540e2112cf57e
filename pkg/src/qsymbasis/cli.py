"""Command-line interface. Every subcommand prints JSON on stdout.

Exit codes: 0 success / all certificates pass, 1 a mathematical
counterexample was found, 2 usage or resource-guard error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import algebra, bijection, certify, combinatorics, hilbert, tableaux
from .combinatorics import format_composition, parse_composition, parse_partition

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_enumerate(args) -> int:
    if args.which == "D":
        comps = combinatorics.enumerate_inverting(args.n)
    else:
        comps = combinatorics.enumerate_B(args.n)
    _emit({"set": args.which, "n": args.n, "count": len(comps), "compositions": [format_composition(c) for c in comps]})
    return EXIT_OK


def cmd_hilbert(args) -> int:
    try:
        p = hilbert.hilbert_quotient_P(args.n, args.dmax)
    except hilbert.HilbertMismatch as exc:
        _emit({"n": args.n, "error": str(exc), "degree": exc.degree, "routes": exc.values})
        return EXIT_COUNTEREXAMPLE
    check = certify.check_pk_counts(args.n) if args.n <= 7 else None
    out = {"n": args.n, "dmax": args.dmax, "coefficients": list(p.coeffs), "P(1)": p(1), "polynomial": str(p)}
    if check is not None:
        out["census_check"] = check.to_dict()
    _emit(out)
    return EXIT_OK if check is None or check.passed else EXIT_COUNTEREXAMPLE


def cmd_expand(args) -> int:
    alpha = parse_composition(args.alpha)
    if args.kind == "monomial":
        _emit(algebra.monomial_basis_expand(alpha, args.vars).to_dict())
        return EXIT_OK
    if args.tableaux:
        fillings = tableaux.enumerate_composition_tableaux(alpha, args.vars)
        _emit({"shape": format_composition(alpha), "n": args.vars, "tableaux": [f.to_json() for f in fillings]})
    elif args.polynomial:
        _emit(algebra.qschur_polynomial(alpha, args.vars).to_dict())
    else:
        _emit(algebra.qschur_in_M(alpha, args.vars).to_dict())
    return EXIT_OK


def cmd_multiply(args) -> int:
    lam, beta = parse_partition(args.lam), parse_composition(args.beta)
    if args.oracle:
        result = algebra.oracle_multiply(lam, beta, args.n)
    else:
        result = tableaux.multiply_schur_qschur(lam, beta, args.n)
    _emit(result.to_dict())
    return EXIT_OK


def cmd_phi(args) -> int:
    lam, beta = parse_partition(args.lam), parse_composition(args.beta)
    n = args.n if args.n is not None else max(len(lam), len(beta), 1)
    image = bijection.phi(lam, beta, n)
    _emit({"lambda": format_composition(lam), "beta": format_composition(beta), "n": n, "phi": format_composition(image)})
    return EXIT_OK


def cmd_phi_inverse(args) -> int:
    alpha = parse_composition(args.alpha)
    pair = bijection.phi_inverse(alpha, args.n)
    _emit({"alpha": format_composition(alpha), "n": args.n, **pair.to_dict()})
    return EXIT_OK


def cmd_matrix(args) -> int:
    m = certify.build_transition_matrix(args.n, args.d, args.family)
    if args.format == "csv":
        sys.stdout.write(m.to_csv())
    else:
        _emit(m.to_dict())
    return EXIT_OK


def cmd_certify(args) -> int:
    families = certify.FAMILIES if args.family == "both" else (args.family,)
    report = certify.certify_basis(args.n, args.dmax, families=families, force=args.force)
    payload = report.to_dict(timings=not args.no_timings)
    payload["passed"] = report.passed
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(payload, fh, indent=2)
    _emit(payload)
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsymbasis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="inverting compositions D_(n) or pure-and-inverting B_n")
    p.add_argument("which", choices=["D", "B"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hilbert", help="P_n(q) by three routes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dmax", type=int, default=None)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("expand", help="S_alpha in the M basis, or M_alpha as a polynomial")
    p.add_argument("kind", choices=["qschur", "monomial"])
    p.add_argument("--alpha", required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--polynomial", action="store_true", help="monomial-level expansion of S_alpha")
    p.add_argument("--tableaux", action="store_true", help="list the composition tableaux")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("multiply", help="s_lambda * S_beta in the S basis")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--oracle", action="store_true", help="polynomial multiplication instead of LR tableaux")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("phi", help="the bijection (lambda, beta) -> composition")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("phi-inverse", help="composition -> (lambda, beta)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_phi_inverse)

    p = sub.add_parser("matrix", help="transition matrix of s_lambda S_beta or s_lambda M_beta")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--family", choices=["S", "M"], default="S")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("certify", help="triangularity and integrality certificates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--family", choices=["S", "M", "both"], default="both")
    p.add_argument("--force", action="store_true", help=f"lift the n<={certify.MAX_N}, dmax<={certify.MAX_D} guard")
    p.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")
    p.add_argument("--output", help="also write the report to this file")
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except certify.ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
