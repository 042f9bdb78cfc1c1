from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from gammavec.errors import CompositionDomainError, DomainError
from gammavec.exact_series import (
    Polynomial,
    TruncatedSeries,
    binom,
    derivative,
    expand_binomial_power,
    rational_str,
    reciprocal,
    series_compose,
    series_divide,
    to_rational,
    translate,
)

u = sympy.symbols("u")
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
coeff_lists = st.lists(rationals, min_size=1, max_size=7)


def sym_coeffs(expr, order):
    s = sympy.series(expr, u, 0, order + 1).removeO()
    return [Fraction(str(sympy.Poly(s, u).coeff_monomial(u**k))) if s != 0 else Fraction(0) for k in range(order + 1)]


def test_reciprocal_examples():
    assert reciprocal(Polynomial([1, 4, 1])).coeffs == (1, 4, 1)
    assert reciprocal(Polynomial([1, 2, 0])).coeffs == (0, 2, 1)
    assert reciprocal(Polynomial([1, 1, 1])).coeffs == (1, 1, 1)


def test_translate_examples():
    assert translate(Polynomial([1, 1, 1]), 1).coeffs == (3, 3, 1)
    assert translate(Polynomial([1, 2, 1]), 1).coeffs == (4, 4, 1)
    p = Polynomial([2, Fraction(1, 3), -5])
    assert translate(p, 0) == p


def test_derivative_examples():
    assert derivative(Polynomial([1, 4, 1])).coeffs == (4, 2)
    assert derivative(Polynomial([5])).coeffs == (0,)
    assert derivative(Polynomial([0, 0, 0, 1])).coeffs == (0, 0, 3)


def test_expand_binomial_power_examples():
    assert expand_binomial_power(-2, 3).coeffs == (1, -2, 3, -4)
    assert expand_binomial_power(2, 3).coeffs == (1, 2, 1, 0)
    assert expand_binomial_power(0, 2).coeffs == (1, 0, 0)


def test_series_divide_examples():
    assert series_divide(Polynomial([1, 4, 1]), 2, 1).coeffs == (1, 2)
    assert series_divide(Polynomial([1]), 1, 2).coeffs == (1, -1, 1)
    assert series_divide(Polynomial([3, 3, 1]), 2, 1).coeffs == (3, -3)


def test_series_compose_examples():
    geo = TruncatedSeries([1, 1, 1], 2)
    assert series_compose(geo, TruncatedSeries([0, 1, 1], 2)).coeffs == (1, 1, 2)
    outer = TruncatedSeries([3, -1, 7, 2], 3)
    assert series_compose(outer, TruncatedSeries([0, 1, 0, 0], 3)) == outer
    assert series_compose(TruncatedSeries([5, 0, 0], 2), TruncatedSeries([0, 4, 9], 2)).coeffs == (5, 0, 0)


def test_compose_rejects_constant_term():
    with pytest.raises(CompositionDomainError):
        series_compose(TruncatedSeries([1, 1]), TruncatedSeries([1, 1]))


def test_binom_conventions():
    assert binom(-1, 0) == 1
    assert binom(-2, 1) == -2
    assert binom(5, -1) == 0
    assert binom(3, 5) == 0
    for m in range(1, 6):
        for j in range(6):
            assert binom(-m, j) == (-1) ** j * binom(m + j - 1, j)
            assert binom(-m, j) == sympy.binomial(-m, j)


def test_to_rational_parsing():
    assert to_rational("3") == 3 and isinstance(to_rational("3"), int)
    assert to_rational("-7/2") == Fraction(-7, 2)
    assert to_rational("2.5") == Fraction(5, 2)
    assert to_rational(Fraction(4, 2)) == 2 and isinstance(to_rational(Fraction(4, 2)), int)
    for bad in (1.5, True, "x", "1/0", None):
        with pytest.raises(DomainError):
            to_rational(bad)


def test_rational_str_lowest_terms():
    assert rational_str(Fraction(6, 4)) == "3/2"
    assert rational_str(Fraction(-8, 4)) == "-2"


def test_polynomial_formal_degree():
    p = Polynomial([1, 2], 4)
    assert p.coeffs == (1, 2, 0, 0, 0) and p.degree == 1
    with pytest.raises(DomainError):
        Polynomial([1, 2, 3], 1)
    assert Polynomial.from_json(p.to_json()) == p
    with pytest.raises(DomainError):
        Polynomial.from_json({"coeffs": ["1", "4"]})


@settings(max_examples=20)
@given(coeff_lists, st.integers(-3, 3))
def test_translate_matches_sympy(cs, c):
    p = Polynomial(cs)
    t = sympy.symbols("t")
    expr = sum(sympy.Rational(x.numerator, x.denominator) * (t + c) ** i for i, x in enumerate(cs))
    expected = sympy.Poly(sympy.expand(expr), t).all_coeffs()[::-1] if expr != 0 else [0]
    got = list(translate(p, c).coeffs)
    expected = [Fraction(str(e)) for e in expected] + [0] * (len(got) - len(expected))
    assert got == expected


@settings(max_examples=20)
@given(coeff_lists, st.integers(0, 5), st.integers(0, 6))
def test_series_divide_matches_sympy(cs, e, order):
    expr = sum(sympy.Rational(x.numerator, x.denominator) * u**i for i, x in enumerate(cs)) / (1 + u) ** e
    assert list(series_divide(Polynomial(cs), e, order).coeffs) == sym_coeffs(expr, order)


@settings(max_examples=20)
@given(st.lists(rationals, min_size=1, max_size=5), st.lists(rationals, min_size=1, max_size=5))
def test_compose_matches_sympy(outer, inner_tail):
    N = 4
    inner = [0] + inner_tail
    o = sum(sympy.Rational(x.numerator, x.denominator) * u**i for i, x in enumerate(outer))
    g = sum(sympy.Rational(x.numerator, x.denominator) * u**i for i, x in enumerate(inner))
    expected = sym_coeffs(sympy.expand(o.subs(u, g)), N)
    got = series_compose(TruncatedSeries(outer, N), TruncatedSeries(inner, N)).coeffs
    assert list(got) == expected


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    A, B, C = Polynomial(a), Polynomial(b), Polynomial(c)
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A - A == Polynomial([0] * len(a))
    assert (A * B)(Fraction(1, 3)) == A(Fraction(1, 3)) * B(Fraction(1, 3))


@given(coeff_lists)
def test_reciprocal_involution(cs):
    p = Polynomial(cs)
    assert reciprocal(reciprocal(p)) == p
