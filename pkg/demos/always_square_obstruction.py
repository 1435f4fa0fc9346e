#!/usr/bin/env python3
"""The polynomial 4x^6 + 4x^3 + 9 defeats the shift heuristic.

The twice-odd-degree route needs a point where the polynomial value is
not a square in Q_2; shifting the variable usually finds one.  This
polynomial equals (1 + 2x^3)^2 + 8, so every rational evaluation is
(odd)^2 + 8 = 1 mod 8 times an even power of two: a 2-adic square at
every single rational point, although the polynomial itself is not a
polynomial square.  No shift can ever work, and the dispatcher says so
instead of guessing.
"""

import random
from fractions import Fraction

from padic_sos import (RatPoly, complete_square_split, is_square_in_q2,
                       ord2, reduce_auto)

F = RatPoly([9, 0, 0, 4, 0, 0, 4])


def main():
    print("f =", F)
    a_poly, c = complete_square_split(F)
    print("exact split: f = (", a_poly, ")^2 +", c)
    print("c != 0, so f is not the square of a polynomial")
    print()

    rng = random.Random(7)
    print("sampled rational evaluations (all 2-adic squares):")
    for _ in range(8):
        q = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        value = F(q)
        v, u = ord2(value)
        assert is_square_in_q2(value)
        print(f"  f({q}) = 2^{v} * unit, unit = 1 mod 8: "
              f"{u.numerator * u.denominator % 8 == 1}")
    print()

    outcome = reduce_auto(F)
    print("dispatcher outcome:", type(outcome).__name__)
    print("note:", outcome.note)


if __name__ == "__main__":
    main()
