#!/usr/bin/env python3
"""A tour of the four-square certifier on small polynomials.

Pourchet's criterion reduces "is f a sum of four squares in Q[x]" to a
2-adic factor-degree condition.  The certifier answers with sound
sufficient rules and honest INCONCLUSIVE otherwise; this gallery shows
one polynomial per rule.
"""

from fractions import Fraction

from padic_sos import RatPoly, certify_sos4, square_plus_8a_minus_1

DOS_POLY, DOS_WITNESS = square_plus_8a_minus_1(RatPoly([1, 1, 0, 1]), 1)

GALLERY = [
    ("x^2 + 1", RatPoly([1, 0, 1]), None),
    ("x^2 + 2", RatPoly([2, 0, 1]), None),
    ("2x^2 + 3/4", RatPoly([Fraction(3, 4), 0, 2]), None),
    ("x^2 + x + 1", RatPoly([1, 1, 1]), None),
    ("x^2 + 3", RatPoly([3, 0, 1]), None),
    ("x^2 + 7", RatPoly([7, 0, 1]), None),
    ("(x^3+x+1)^2 + 7", DOS_POLY, DOS_WITNESS),
    ("4x^6 + 4x^3 + 9", RatPoly([9, 0, 0, 4, 0, 0, 4]), None),
    ("x^2 - 1", RatPoly([-1, 0, 1]), None),
]


def main():
    print(f"{'polynomial':22s} {'verdict':14s} rule")
    print("-" * 60)
    for label, f, witness in GALLERY:
        cert = certify_sos4(f, witness=witness)
        print(f"{label:22s} {cert.verdict:14s} {cert.rule or '-'}")
    print()
    print("notes:")
    print("  x^2+1 is literally a sum of two squares (split rule);")
    print("  x^2+2 and 2x^2+3/4 are Eisenstein-irreducible of even degree;")
    print("  x^2+x+1 reduces mod 2 to an irreducible quadratic;")
    print("  x^2+7 = x^2 + (8-1) splits over Q_2 into two linear factors;")
    print("  x^2+3 is actually a sum of four squares (3 = 1+1+1) but no")
    print("  rule sees it: the reducer handles it by subtracting a square;")
    print("  4x^6+4x^3+9 evaluates to a 2-adic square everywhere, an input")
    print("  the whole method cannot classify.")


if __name__ == "__main__":
    main()
