"""Command-line front end emitting exact JSON certificates.

Exit codes: 0 for a conclusive run, 2 for inconclusive or
non-terminating outcomes, 1 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import serialize
from .certifier import INCONCLUSIVE, certify_sos4
from .hensel import UNKNOWN, z2_root_status
from .newton_polygon import newton_diagram
from .padic import is_square_in_q2, padic_sqrt
from .ratpoly import (RatPoly, discriminant, hankel_matrix,
                      is_positive_on_reals, rank_signature,
                      sturm_real_root_count)
from .reduction import (InconclusiveReport, NonTermination, ObstructionReport,
                        ReductionResult, palindromic_counterexample,
                        reduce_auto, reduce_constant_three_mod_four,
                        reduce_cyclotomic_power, reduce_iterative,
                        reduce_multiple_of_four, reduce_odd_valuation,
                        reduce_twice_odd_degree, square_plus_8a_minus_1)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


def _read_poly(args) -> RatPoly:
    if args.poly_file:
        with open(args.poly_file) as fh:
            text = fh.read()
    elif args.poly:
        text = args.poly
    else:
        raise ValueError("provide --poly or --poly-file")
    return serialize.parse_poly(text)


def _parse_witness(text: str) -> tuple[RatPoly, Fraction]:
    a_text, sep, c_text = text.rpartition(":")
    if not sep:
        raise ValueError("witness must look like 'A-poly:c'")
    return serialize.parse_poly(a_text), Fraction(c_text.strip())


def _emit(args, payload: dict, status: str) -> int:
    text = serialize.dumps(payload, status)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if status == "ok" else EXIT_INCONCLUSIVE


def _cmd_positivity(args) -> int:
    f = _read_poly(args)
    cert = is_positive_on_reals(f)
    return _emit(args, {"positivity": serialize.positivity_to_json(cert),
                        "poly": serialize.poly_to_json(f)}, "ok")


def _cmd_hankel(args) -> int:
    f = _read_poly(args)
    matrix = hankel_matrix(f)
    rank, sig = rank_signature(matrix)
    return _emit(args, {
        "poly": serialize.poly_to_json(f),
        "matrix": [[serialize.frac_str(x) for x in row] for row in matrix],
        "rank": rank,
        "signature": sig,
        "distinct_roots": rank,
        "distinct_real_roots": sig,
    }, "ok")


def _cmd_sturm(args) -> int:
    f = _read_poly(args)
    return _emit(args, {"poly": serialize.poly_to_json(f),
                        "real_roots": sturm_real_root_count(f)}, "ok")


def _cmd_discriminant(args) -> int:
    f = _read_poly(args)
    return _emit(args, {"poly": serialize.poly_to_json(f),
                        "discriminant": serialize.frac_str(discriminant(f))}, "ok")


def _cmd_newton_polygon(args) -> int:
    f = _read_poly(args)
    return _emit(args, {"poly": serialize.poly_to_json(f),
                        "diagram": serialize.diagram_to_json(newton_diagram(f))}, "ok")


def _cmd_padic_square(args) -> int:
    q = Fraction(args.value)
    return _emit(args, {"value": serialize.frac_str(q),
                        "is_square_in_q2": is_square_in_q2(q)}, "ok")


def _cmd_padic_sqrt(args) -> int:
    q = Fraction(args.value)
    r = padic_sqrt(q, args.precision)
    return _emit(args, {
        "value": serialize.frac_str(q),
        "valuation": r.valuation,
        "unit_residue": str(r.unit_residue),
        "precision": r.precision,
    }, "ok")


def _cmd_root_status(args) -> int:
    f = _read_poly(args)
    status = z2_root_status(f, args.budget)
    return _emit(args, {"poly": serialize.poly_to_json(f),
                        "root_status": serialize.root_status_to_json(status)},
                 "ok" if status.tag != UNKNOWN else "inconclusive")


def _cmd_certify(args) -> int:
    f = _read_poly(args)
    witness = _parse_witness(args.witness) if args.witness else None
    cert = certify_sos4(f, witness=witness, root_budget=args.budget)
    status = "ok" if cert.verdict != INCONCLUSIVE else "inconclusive"
    return _emit(args, {"poly": serialize.poly_to_json(f),
                        "certificate": serialize.certificate_to_json(cert)},
                 status)


def _cmd_reduce(args) -> int:
    f = _read_poly(args)
    method = args.method
    if method == "auto":
        outcome = reduce_auto(f)
    elif method == "alg6":
        outcome = reduce_odd_valuation(f)
    elif method == "algn":
        outcome = reduce_multiple_of_four(f)
    elif method == "alg9":
        outcome = reduce_iterative(f, cap=args.cap)
    elif method == "nos":
        outcome = reduce_constant_three_mod_four(f)
    elif method == "gr4":
        outcome = reduce_cyclotomic_power(f)
    elif method == "picky":
        outcome = reduce_twice_odd_degree(f, root_budget=args.budget)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown method {method}")

    if isinstance(outcome, ReductionResult):
        return _emit(args, serialize.result_to_json(outcome), "ok")
    if isinstance(outcome, NonTermination):
        return _emit(args, serialize.nontermination_to_json(outcome),
                     "non-termination")
    if isinstance(outcome, ObstructionReport):
        return _emit(args, serialize.obstruction_to_json(outcome), "ok")
    if isinstance(outcome, InconclusiveReport):
        return _emit(args, {"note": outcome.note,
                            "trace": [list(map(str, t)) for t in outcome.trace]},
                     "inconclusive")
    raise TypeError(f"unexpected outcome {outcome!r}")


def _cmd_alg9_demo(args) -> int:
    f, witness = palindromic_counterexample(args.k, args.N)
    outcome = reduce_iterative(f, cap=args.cap)
    payload = {"poly": serialize.poly_to_json(f),
               "witness_a": serialize.poly_to_json(witness[0]),
               "witness_c": serialize.frac_str(witness[1])}
    if isinstance(outcome, NonTermination):
        payload.update(serialize.nontermination_to_json(outcome))
        return _emit(args, payload, "non-termination")
    payload.update(serialize.result_to_json(outcome))
    return _emit(args, payload, "ok")


def _cmd_family(args) -> int:
    if args.g is not None:
        g = serialize.parse_poly(args.g)
        f, (a_poly, c) = square_plus_8a_minus_1(g, args.a)
        family = "square_plus_8a_minus_1"
    else:
        if args.k is None or args.N is None:
            raise ValueError("family needs either --g/--a or --k/--N")
        f, (a_poly, c) = palindromic_counterexample(args.k, args.N)
        family = "palindromic_counterexample"
    return _emit(args, {
        "family": family,
        "poly": serialize.poly_to_json(f),
        "poly_pretty": serialize.poly_pretty(f),
        "witness_a": serialize.poly_to_json(a_poly),
        "witness_c": serialize.frac_str(c),
    }, "ok")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padic-sos",
        description="2-adic certificates and reductions for sums of squares "
                    "of rational polynomials")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_poly_args(p):
        p.add_argument("--poly", help="polynomial, human form or JSON array")
        p.add_argument("--poly-file", help="file containing the polynomial")
        p.add_argument("--out", help="write the JSON document here instead of stdout")

    for name, fn in [("positivity", _cmd_positivity), ("hankel", _cmd_hankel),
                     ("sturm", _cmd_sturm), ("discriminant", _cmd_discriminant),
                     ("newton-polygon", _cmd_newton_polygon)]:
        p = sub.add_parser(name)
        add_poly_args(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("padic-square")
    p.add_argument("--value", required=True, help="exact rational")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_padic_square)

    p = sub.add_parser("padic-sqrt")
    p.add_argument("--value", required=True, help="exact rational")
    p.add_argument("--precision", type=int, default=64)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_padic_sqrt)

    p = sub.add_parser("root-status")
    add_poly_args(p)
    p.add_argument("--budget", type=int, default=20)
    p.set_defaults(fn=_cmd_root_status)

    p = sub.add_parser("sos4-certify")
    add_poly_args(p)
    p.add_argument("--witness", help="split witness 'A-poly:c'")
    p.add_argument("--budget", type=int, default=24)
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("reduce")
    add_poly_args(p)
    p.add_argument("--method", default="auto",
                   choices=["auto", "alg6", "algn", "alg9", "nos", "gr4", "picky"])
    p.add_argument("--cap", type=int, default=40)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("alg9-demo")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--cap", type=int, default=40)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_alg9_demo)

    p = sub.add_parser("family")
    p.add_argument("--k", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--g", help="odd-degree integer polynomial")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_family)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
