from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from gammavec.errors import DomainError, ReciprocityError
from gammavec.exact_series import Polynomial
from gammavec.gamma_core import (
    GammaVector,
    gamma_by_basis,
    gamma_catalan_formula,
    gamma_derivative_formula,
    gamma_extended,
    gamma_matrix,
    gamma_vector,
    h_from_gamma,
    local_global_numerator,
)

u = sympy.symbols("u")
CT = (1 - sympy.sqrt(1 - 4 * u)) / (2 * u) - 1


CT_SERIES = sympy.series(CT, u, 0, 8).removeO()


def sympy_gamma(h, n, M):
    """gamma(u) = h(Ct) / (1 + Ct)**n, with Ct a sympy-expanded truncation."""
    v = sympy.symbols("v")
    J = sympy.series(sum(c * v**i for i, c in enumerate(h)) / (1 + v) ** n, v, 0, M + 1).removeO()
    s = sympy.expand(J.subs(v, CT_SERIES))
    return [s.coeff(u, m) for m in range(M + 1)]


def recip(draw_list):
    n = len(draw_list) - 1
    h = list(draw_list)
    for i in range(n // 2 + 1):
        h[n - i] = h[i]
    return Polynomial(h, n)


def test_basis_examples():
    assert gamma_by_basis(Polynomial([1, 4, 1])).entries == (1, 2)
    assert gamma_by_basis(Polynomial([1, 4, 6, 4, 1])).entries == (1, 0, 0)
    assert gamma_by_basis(Polynomial([1, 1, 1])).entries == (1, -1)


def test_basis_rejects_non_reciprocal():
    with pytest.raises(ReciprocityError) as err:
        gamma_by_basis(Polynomial([1, 2, 3, 5]))
    assert err.value.pair == (0, 3)


def test_extended_examples():
    g = gamma_extended(Polynomial([3, 3, 1]), 1)
    assert g.entries == (3, -3) and g.extended
    g = gamma_extended(Polynomial([1, 1, 1]), 4)
    assert g.entries == (1, -1, 0, 0, 0) and not g.extended
    assert gamma_extended(Polynomial([1]), 2).entries == (1, 0, 0)


def test_extended_matches_sympy():
    for h in ([3, 3, 1], [1, -2, 5, 7], [2, 0, 0, 1, 4]):
        n = len(h) - 1
        assert list(gamma_extended(Polynomial(h), 5).entries) == sympy_gamma(h, n, 5)


def test_catalan_formula_examples():
    assert gamma_catalan_formula(Polynomial([1, 4, 1]), 1) == 2
    assert gamma_catalan_formula(Polynomial([1, 1, 1]), 2) == 0
    assert gamma_catalan_formula(Polynomial([7, 1, 2]), 0) == 7


def test_derivative_examples():
    assert gamma_derivative_formula(Polynomial([1, 4, 1]), 1) == 2
    assert gamma_derivative_formula(Polynomial([3, 3, 1]), 1) == -3
    assert gamma_derivative_formula(Polynomial([1, 11, 11, 1]), 1) == 8
    with pytest.raises(IndexError):
        gamma_derivative_formula(Polynomial([1, 4, 1]), 0)
    with pytest.raises(DomainError):
        gamma_derivative_formula(Polynomial([1, 4, 1]), 2)


def test_local_global_numerator():
    assert local_global_numerator(Polynomial([1, 4, 1])).coeffs == (2, -2, 0)


def test_matrix_examples():
    mat = gamma_matrix(2, 1)
    assert mat.rows == ((1, 0, 0), (-2, 1, 0))
    assert mat.apply(Polynomial([1, 4, 1])) == [1, 2]
    for n in range(6):
        assert gamma_matrix(n, 3).rows[0] == (1,) + (0,) * n


def test_matrix_lower_triangular():
    rows = gamma_matrix(8, 8).rows
    assert all(rows[m][l] == 0 for m in range(9) for l in range(m + 1, 9))


def test_h_from_gamma_examples():
    assert h_from_gamma(GammaVector((1, 2), 2)).coeffs == (1, 4, 1)
    assert h_from_gamma(GammaVector((1, 0, 0), 4)).coeffs == (1, 4, 6, 4, 1)
    assert h_from_gamma(GammaVector((1, -1), 2)).coeffs == (1, 1, 1)
    with pytest.raises(DomainError):
        h_from_gamma(GammaVector((1, 2), 2, extended=True))


def test_gamma_vector_json_round_trip():
    g = gamma_extended(Polynomial([3, 3, 1]), 3)
    doc = g.to_json()
    assert doc["order"] == 3 and doc["extended"] is True
    assert GammaVector.from_json(doc) == g
    with pytest.raises(DomainError):
        GammaVector((1, 2, 3), 2)


ints = st.integers(-9, 9)


@given(st.lists(ints, min_size=1, max_size=13))
def test_four_way_agreement(cs):
    h = Polynomial(cs)
    n = h.formal_degree
    ext = gamma_extended(h, n).entries
    rows = gamma_matrix(n, n).apply(h)
    for m in range(n + 1):
        assert ext[m] == gamma_catalan_formula(h, m) == rows[m]
        if 1 <= m and 2 * m <= n + 1:
            assert gamma_derivative_formula(h, m) == ext[m]


@given(st.lists(ints, min_size=1, max_size=15))
def test_reciprocal_round_trip(cs):
    h = recip(cs)
    g = gamma_by_basis(h)
    assert h_from_gamma(g) == h
    assert g.entries[0] == h.coeffs[0]
    assert gamma_vector(h) == g
    ext = gamma_extended(h, h.formal_degree).entries
    assert not any(ext[h.formal_degree // 2 + 1:])


@settings(max_examples=15)
@given(st.lists(ints, min_size=1, max_size=5))
def test_extended_random_against_sympy(cs):
    assert list(gamma_extended(Polynomial(cs), 4).entries) == sympy_gamma(cs, len(cs) - 1, 4)


def test_rational_coefficients():
    h = Polynomial([Fraction(1, 2), Fraction(3, 4), Fraction(1, 2)])
    g = gamma_by_basis(h)
    assert g.entries == (Fraction(1, 2), Fraction(-1, 4))
    assert gamma_catalan_formula(h, 1) == Fraction(-1, 4)
