import random
from fractions import Fraction

import pytest
import sympy

from gammavec.errors import DomainError
from gammavec.exact_series import Polynomial, binom
from gammavec.gamma_core import gamma_derivative_formula, gamma_extended
from gammavec.volume import (
    IntersectionSequence,
    QNumerator,
    constant_ratio_classify,
    constant_ratio_threshold,
    large_ratio_condition,
    log_concave_check,
    printed_volbd_part2,
    printed_volbd_part3,
    volbd_classify,
    volume_gamma,
    volume_polynomial,
    volume_q,
)

S = IntersectionSequence


def test_volume_polynomial_examples():
    assert volume_polynomial(S((1, 2, 4), 2)).coeffs == (1, 4, 4)
    assert volume_polynomial(S((1, 0, 0, 0), 3)).coeffs == (1, 0, 0, 0)
    assert volume_polynomial(S((1,) * 6, 5)).coeffs == tuple(binom(5, k) for k in range(6))


def test_volume_polynomial_is_binomial_power():
    A, B = sympy.Rational(3, 2), sympy.Integer(-2)
    t = sympy.symbols("t")
    d = 5
    s = S(tuple(Fraction(str(A**k * B ** (d - k))) for k in range(d + 1)), d)
    expected = sympy.Poly(sympy.expand((t * A + B) ** d), t).all_coeffs()[::-1]
    assert list(volume_polynomial(s).coeffs) == [Fraction(str(c)) for c in expected]


def test_volume_q_examples():
    assert volume_q(S((1, 2, 4), 2)).q == (2, 4)
    assert volume_q(S((-1, 1, -1), 2)).q == (4, -4)
    assert volume_q(S((7,) * 5, 4)).q == (0, 0, 0, 0)
    with pytest.raises(DomainError):
        QNumerator((2, 5), S((1, 2, 4), 2))


def test_volume_gamma_examples():
    assert volume_gamma(S((1, 2, 4), 2), 1) == 2
    assert volume_gamma(S((-1, 1, -1), 2), 1) == 4
    assert volume_gamma(S((1, 5, 25, 125, 625), 4), 2) == 112
    with pytest.raises(IndexError):
        volume_gamma(S((1, 2, 4), 2), 2)


def test_volume_gamma_against_oracles():
    rng = random.Random(9)
    for _ in range(300):
        d = rng.randint(2, 16)
        s = S(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(d + 1)), d)
        V = volume_polynomial(s)
        for r in range(1, d // 2 + 1):
            assert volume_gamma(s, r) == gamma_derivative_formula(V, r) == gamma_extended(V, r)[r]
            volbd_classify(s, r)


def test_constant_ratio_examples():
    c = constant_ratio_classify(5, 1, 4, 2)
    assert c.claimed_sign == "positive" and c.witness == 112
    c = constant_ratio_classify(0, 1, 4, 2)
    assert c.claimed_sign == "positive" and c.witness == volume_gamma(S((1, 0, 0, 0, 0), 4), 2)
    c = constant_ratio_classify(-1, -1, 2, 1)
    assert c.claimed_sign == "positive" and c.witness == 4
    assert constant_ratio_classify(1, 1, 6, 3).claimed_sign == "zero"


def test_constant_ratio_sweep():
    for d in range(2, 13):
        for rho in (-3, -1, Fraction(-1, 2), 0, Fraction(1, 100), d + 1, 2 * d):
            for a0 in (1, -1):
                for r in range(1, d // 2 + 1):
                    c = constant_ratio_classify(rho, a0, d, r)
                    assert c.known, (rho, a0, d, r)


def test_thresholds_are_sufficient():
    for d in range(2, 16):
        for r in range(1, d // 2 + 1):
            assert large_ratio_condition(constant_ratio_threshold(d, r) + Fraction(1, 1000), d, r)
            assert large_ratio_condition(d + Fraction(1, 1000), d, r)


def test_volbd_counterexample_and_corrections():
    s = S((3, 2, 0, 0, 0), 4)
    assert printed_volbd_part3(s)
    assert volume_gamma(s, 2) == -10
    c = volbd_classify(s, 2)
    assert c.claimed_sign == "negative"
    # alternating a with a_0 > 0 flips the part-1 sign
    s = S((1, -1, 1), 2)
    assert volume_q(s).q == (-4, 4) and volume_gamma(s, 1) == -4


def test_printed_part2_predicate():
    s = S((1, 5, 25, 125, 625), 4)
    assert printed_volbd_part2(s, 2)
    assert volume_gamma(s, 2) > 0


def test_log_concave_examples():
    rep = log_concave_check((1, 2, 4))
    assert rep["log_concave"] and rep["equality"]
    rep = log_concave_check((1, 3, 4, 3, 1), upper_bound=3, lower_bound=Fraction(1, 3))
    assert rep["log_concave"] and not rep["equality"]
    assert rep["upper_bound"]["first_pair"] == rep["upper_bound"]["all_pairs"] is True
    assert rep["lower_bound"]["last_pair"] == rep["lower_bound"]["all_pairs"] is True
    rep = log_concave_check((1, 1, 3))
    assert not rep["log_concave"] and rep["first_violation"] == 1


def test_log_concave_reductions_random():
    rng = random.Random(1)
    for _ in range(300):
        a = [Fraction(rng.randint(1, 9))]
        ratio = Fraction(rng.randint(1, 20), rng.randint(1, 5))
        for _ in range(rng.randint(1, 8)):
            ratio *= Fraction(rng.randint(1, 10), 10)
            a.append(a[-1] * ratio)
        C = Fraction(rng.randint(0, 40), 4)
        rep = log_concave_check(a, C, C)
        assert rep["log_concave"]
        assert rep["upper_bound"]["first_pair"] == rep["upper_bound"]["all_pairs"]
        assert rep["lower_bound"]["last_pair"] == rep["lower_bound"]["all_pairs"]


def test_sequence_json_and_validation():
    s = S.from_json({"a": ["1", "2", "4"], "d": 2})
    assert s.to_json() == {"a": ["1", "2", "4"], "d": 2}
    with pytest.raises(DomainError):
        S((1, 2), 2)
    assert S.geometric(2, Fraction(1, 2), 3).a == (2, 1, Fraction(1, 2), Fraction(1, 4))
