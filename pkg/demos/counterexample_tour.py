#!/usr/bin/env python3
"""Why the iterative constant-subtraction loop is not a complete method.

The family (4x^(2(2k+1)) + x^(2k+1) + 4)/N^2 with odd N > 64 is
strictly positive and square-free, yet the loop that subtracts
2^(-2l) or 2^(-2l)x^d never reaches a difference that is a sum of four
squares: each subtraction leaves A^2 + c with -c a 2-adic square, which
factors over Q_2 into two odd-degree pieces.  This script replays the
loop and shows the per-iterate evidence.
"""

from padic_sos import (certify_sos4, ord2, palindromic_counterexample,
                       reduce_iterative)
from padic_sos.reduction import NonTermination

CAP = 12


def main():
    f, (a_poly, c) = palindromic_counterexample(0, 65)
    print("family member f =", f)
    print("split: f = A^2 + c with A =", a_poly, " c =", c)
    print()

    cert = certify_sos4(f, witness=(a_poly, c))
    print("certify(f):", cert.verdict, "via", cert.rule)
    print("  (-c has even valuation and unit 1 mod 8, so f splits over Q_2")
    print("   into two coprime linear factors: never a sum of 4 squares)")
    print()

    outcome = reduce_iterative(f, cap=CAP)
    assert isinstance(outcome, NonTermination)
    print(f"iterative loop, cap {CAP}: started at l = {outcome.l_init} "
          f"(epsilon = {outcome.epsilon}), no iterate succeeded")
    print()
    print(" l   | subtract 2^(-2l)          | subtract 2^(-2l)x^d")
    print("-----+---------------------------+---------------------")
    for it in outcome.iterates:
        ev = it.branch_a.certificate.evidence
        v, u = ord2(-ev.c)
        tag_a = f"{it.branch_a.verdict} (-c: 2^{v} * {u.numerator % 8}/{u.denominator % 8} mod 8)"
        print(f" {it.l:3d} | {tag_a:25s} | {it.branch_b.verdict}")
    print()
    print("every branch fails; growing l only makes -c a cleaner square.")


if __name__ == "__main__":
    main()
