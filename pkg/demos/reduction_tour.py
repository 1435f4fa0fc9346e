#!/usr/bin/env python3
"""End-to-end reductions: find h with f - h^2 certified SOS4.

Together with a black-box four-square splitter this realizes positive
rational polynomials as sums of five squares.  The dispatcher
normalizes (square factors out, denominators cleared by squares, small
shifts tried) and picks a certified route.
"""

from padic_sos import RatPoly, palindromic_counterexample, reduce_auto
from padic_sos.reduction import ReductionResult

INPUTS = [
    ("x^2 + 1", RatPoly([1, 0, 1])),
    ("x^2 + 3", RatPoly([3, 0, 1])),
    ("2x^2 + 1", RatPoly([1, 0, 2])),
    ("(x^2-4)^2 + 7", (RatPoly([-4, 0, 1]) ** 2) + RatPoly([7])),
    ("x^4 + x^2 + 1", RatPoly([1, 0, 1, 0, 1])),
    ("x^6 + x^2 + 3", RatPoly([3, 0, 1, 0, 0, 0, 1])),
    ("counterexample f_(0,65)", palindromic_counterexample(0, 65)[0]),
    ("(x^2+1)^2 (x^2+3)", (RatPoly([1, 0, 1]) ** 2) * RatPoly([3, 0, 1])),
]


def main():
    for label, f in INPUTS:
        outcome = reduce_auto(f)
        print(f"input: {label}")
        if isinstance(outcome, ReductionResult):
            print(f"  method {outcome.method}: h = {outcome.h}")
            print(f"  residual = {outcome.residual}")
            print(f"  certified by rule {outcome.certificate.rule}")
            assert f - outcome.h * outcome.h == outcome.residual
            t = outcome.transform
            if not t.trivial:
                print(f"  (via square part {t.square_part}, scale {t.scale}, "
                      f"shift {t.shift})")
        else:
            print(f"  inconclusive: {outcome.note}")
        print()


if __name__ == "__main__":
    main()
