import random
from fractions import Fraction as F

import pytest

from padic_sos.certifier import (INCONCLUSIVE, NOT_SOS4, SOS4,
                                 EisensteinEvenDegree, Mod2EvenDegrees,
                                 OddSquareSplit, PureEvenDivisor,
                                 SimpleZ2Root, TwoSquareSplit,
                                 certify_sos4, complete_square_split,
                                 rule_eisenstein, rule_mod2_even_degrees,
                                 rule_odd_split_witness,
                                 rule_pure_even_divisor, rule_simple_z2_root,
                                 rule_two_square_split, verify_certificate)
from padic_sos.padic import is_square_in_q2
from padic_sos.ratpoly import RatPoly
from padic_sos.reduction import (palindromic_counterexample,
                                 square_plus_8a_minus_1)

X2P1 = RatPoly([1, 0, 1])
ALWAYS_SQUARE = RatPoly([9, 0, 0, 4, 0, 0, 4])


def certified(f, witness=None):
    cert = certify_sos4(f, witness=witness, check_all_rules=True)
    assert verify_certificate(f, cert)
    return cert


def test_pipeline_verdicts():
    fkn, witness = palindromic_counterexample(0, 65)
    cases = [
        (X2P1, None, SOS4, "two_square_split"),
        (RatPoly([2, 0, 1]), None, SOS4, "eisenstein"),
        (RatPoly([F(3, 4), 0, 2]), None, SOS4, "eisenstein"),
        (RatPoly([3, 0, 1]), None, INCONCLUSIVE, None),
        (RatPoly([1, 1, 1]), None, SOS4, "mod2_even_degrees"),
        (RatPoly([7, 0, 1]), None, NOT_SOS4, "odd_split_witness"),
        (RatPoly([-1, 0, 1]), None, NOT_SOS4, "positivity"),
        (fkn, witness, NOT_SOS4, "odd_split_witness"),
        (fkn, None, NOT_SOS4, "odd_split_witness"),
        (ALWAYS_SQUARE, None, INCONCLUSIVE, None),
        (RatPoly([5]), None, SOS4, "mod2_even_degrees"),
    ]
    for f, witness, verdict, rule in cases:
        cert = certified(f, witness)
        assert (cert.verdict, cert.rule) == (verdict, rule), str(f)


def test_nonnegative_with_real_roots_is_rejected():
    with pytest.raises(ValueError):
        certify_sos4(RatPoly([0, 0, 1]))
    with pytest.raises(ValueError):
        certify_sos4(X2P1 * RatPoly([0, 0, 1]))


def test_witness_is_validated():
    with pytest.raises(ValueError):
        certify_sos4(X2P1, witness=(RatPoly([0, 1]), F(2)))


def test_complete_square_split():
    a, c = complete_square_split(ALWAYS_SQUARE)
    assert a == RatPoly([1, 0, 0, 2]) and c == 8
    a, c = complete_square_split(palindromic_counterexample(0, 65)[0])
    assert a == RatPoly([F(1, 260), F(2, 65)]) and c == F(63, 16 * 4225)
    assert complete_square_split(RatPoly([3, 0, 2])) is None  # lead not square
    assert complete_square_split(RatPoly([1, 1, 1, 1])) is None  # odd degree
    # not a perfect polynomial square despite the everywhere-square values
    assert complete_square_split(ALWAYS_SQUARE)[1] != 0


def test_rule_odd_split_witness():
    g = RatPoly([1, 1, 0, 1])
    ev = rule_odd_split_witness(g * g + 7, g, F(7))
    assert isinstance(ev, OddSquareSplit)
    # even-degree A keeps the rule silent regardless of c
    f = RatPoly([0, 0, 1]) ** 2 + RatPoly([7])
    assert rule_odd_split_witness(f, RatPoly([0, 0, 1]), F(7)) is None
    # -c not a 2-adic square: silent
    assert rule_odd_split_witness(RatPoly([3, 0, 1]), RatPoly([0, 1]), F(3)) is None
    with pytest.raises(ValueError):
        rule_odd_split_witness(X2P1, RatPoly([0, 1]), F(5))


def test_rule_simple_z2_root():
    f = RatPoly([-17, 0, 1]) * X2P1
    ev = rule_simple_z2_root(f)
    assert isinstance(ev, SimpleZ2Root) and ev.discriminant_nonzero
    assert rule_simple_z2_root(RatPoly([3, 0, 1])) is None
    # a certified root of a non-square-free polynomial is not simple
    sq = RatPoly([-1, 1]) ** 2
    assert rule_simple_z2_root(sq) is None


def test_rule_two_square_split():
    ev = rule_two_square_split(X2P1, RatPoly([0, 1]), F(1))
    assert isinstance(ev, TwoSquareSplit) and ev.s == 1
    assert rule_two_square_split(RatPoly([3, 0, 1]), RatPoly([0, 1]), F(3)) is None
    perfect = RatPoly([1, 2, 1])
    ev = rule_two_square_split(perfect, RatPoly([1, 1]), F(0))
    assert ev is not None and ev.s == 0


def test_rule_eisenstein():
    assert isinstance(rule_eisenstein(RatPoly([2, 0, 1])), EisensteinEvenDegree)
    assert rule_eisenstein(RatPoly([2, 0, 0, 1])) is None  # odd degree
    assert rule_eisenstein(RatPoly([1, 1, 1])) is None


def test_rule_pure_even_divisor():
    ev = rule_pure_even_divisor(RatPoly([2, 0, 1]))
    assert isinstance(ev, PureEvenDivisor) and ev.divisor == 2
    assert rule_pure_even_divisor(RatPoly([1, 1, 1])) is None  # e = 1
    assert rule_pure_even_divisor(RatPoly([4, 2, 0, 1])) is None  # not pure


def test_rule_mod2_even_degrees():
    f = RatPoly([1, 0, 1, 0, 1])  # x^4+x^2+1 = (x^2+x+1)^2 mod 2
    ev = rule_mod2_even_degrees(f)
    assert isinstance(ev, Mod2EvenDegrees)
    assert ev.factors == ((0b111, 2),)
    assert rule_mod2_even_degrees(RatPoly([1, 1, 0, 1])) is None  # odd factor
    assert rule_mod2_even_degrees(RatPoly([9, 0, 0, 4, 0, 0, 4])) is None  # even lead
    # the scaled difference shape: 2^(2l)f - (x^2+x+1)^(2k)
    cyc = RatPoly([1, 1, 1])
    q = RatPoly([1, 0, 1, 0, 1]) * 16 - cyc ** 2
    ev = rule_mod2_even_degrees(q)
    assert ev is not None and ev.factors == ((0b111, 2),)


def test_no_conflicting_evidence_on_gallery():
    rng = random.Random(71)
    gallery = [X2P1, ALWAYS_SQUARE, RatPoly([2, 0, 1]), RatPoly([3, 0, 1]),
               RatPoly([7, 0, 1]), palindromic_counterexample(0, 65)[0]]
    while len(gallery) < 40:
        coeffs = [rng.randint(-6, 6) for _ in range(rng.randint(2, 6))]
        coeffs.append(rng.randint(1, 6))
        f = RatPoly(coeffs)
        gallery.append(f)
    for f in gallery:
        try:
            cert = certify_sos4(f, check_all_rules=True)
        except ValueError:
            continue  # nonnegative-with-roots inputs are rejected
        assert verify_certificate(f, cert)
        if cert.verdict == SOS4:
            assert cert.positivity.verdict


def test_always_square_values():
    rng = random.Random(73)
    for _ in range(100):
        q = F(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 6))
        assert is_square_in_q2(ALWAYS_SQUARE(q))


def test_verdict_invariant_under_square_scaling():
    rng = random.Random(79)
    gallery = [X2P1, RatPoly([2, 0, 1]), RatPoly([3, 0, 1]), RatPoly([7, 0, 1]),
               ALWAYS_SQUARE, RatPoly([1, 1, 1])]
    for f in gallery:
        base = certify_sos4(f).verdict
        for _ in range(4):
            r = F(rng.randint(1, 40), rng.randint(1, 40))
            assert certify_sos4(f * (r * r)).verdict == base


def test_verdict_invariant_under_integer_shift():
    for g, a in [(RatPoly([0, 1]), 1), (RatPoly([1, 1, 0, 1]), 2)]:
        f, (A, c) = square_plus_8a_minus_1(g, a)
        for n in range(-2, 3):
            cert = certify_sos4(f.shift(n), witness=(A.shift(n), c))
            assert cert.verdict == NOT_SOS4
