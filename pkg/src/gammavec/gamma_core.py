"""The gamma vector of a polynomial, computed four independent ways.

For ``h`` of formal degree ``n`` the gamma vector is defined by
``h(t) = (1+t)**n gamma(t / (1+t)**2)``. Substituting ``t = Ct(u)`` (the shifted
Catalan series, which inverts ``u = t/(1+t)**2``) gives
``gamma(u) = J(Ct(u))`` with ``J(v) = h(v) / (1+v)**n``; for non-reciprocal
``h`` this is an infinite series and the returned vector is a truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .catalan import catalan_power_coeff, shifted_catalan_series
from .errors import DomainError, ReciprocityError
from .exact_series import (
    Polynomial,
    TruncatedSeries,
    binom,
    derivative,
    normalize,
    rational_str,
    series_compose,
    series_divide,
    to_rational,
)


@dataclass(frozen=True)
class GammaVector:
    """Gamma entries ``gamma_0..gamma_M`` of a polynomial of formal degree ``n``.

    ``extended`` is true when the input was not reciprocal; the entries are
    then the first ``M + 1`` coefficients of an infinite series. A
    non-extended vector may carry zeros past ``n // 2`` (a truncation order
    larger than needed) but never a nonzero entry there.
    """

    entries: tuple
    formal_degree: int
    extended: bool = False

    def __post_init__(self):
        entries = tuple(to_rational(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not self.extended and any(entries[self.formal_degree // 2 + 1:]):
            raise DomainError(
                "non-extended gamma vector has a nonzero entry beyond floor(n/2)"
            )

    @property
    def order(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, m):
        return self.entries[m]

    def to_json(self) -> dict:
        doc = {
            "entries": [rational_str(e) for e in self.entries],
            "formal_degree": self.formal_degree,
            "extended": self.extended,
        }
        if self.extended:
            doc["order"] = self.order
        return doc

    @classmethod
    def from_json(cls, doc) -> "GammaVector":
        if not isinstance(doc, dict) or "entries" not in doc or "formal_degree" not in doc:
            raise DomainError('gamma JSON needs "entries" and "formal_degree"')
        extended = doc.get("extended", False)
        if not isinstance(extended, bool):
            raise DomainError('"extended" must be a boolean')
        n = doc["formal_degree"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise DomainError('"formal_degree" must be a nonnegative integer')
        return cls(tuple(doc["entries"]), n, extended)


@dataclass(frozen=True)
class GammaMatrix:
    """Row ``m`` holds the coefficient of ``h_l`` in ``gamma_m`` for ``l = 0..n``."""

    rows: tuple
    formal_degree: int

    def apply(self, h: Polynomial) -> list:
        if h.formal_degree != self.formal_degree:
            raise DomainError(
                f"matrix built for formal degree {self.formal_degree}, polynomial has {h.formal_degree}"
            )
        return [normalize(sum(c * x for c, x in zip(row, h.coeffs))) for row in self.rows]

    def to_json(self) -> dict:
        return {
            "formal_degree": self.formal_degree,
            "rows": [[rational_str(x) for x in row] for row in self.rows],
        }


def _basis_element(i: int, n: int) -> list:
    """Coefficients of ``t**i (1+t)**(n-2i)``."""
    out = [0] * (n + 1)
    for j in range(n - 2 * i + 1):
        out[i + j] = binom(n - 2 * i, j)
    return out


def check_reciprocal(h: Polynomial) -> None:
    n = h.formal_degree
    for i in range(n // 2 + 1):
        if h.coeffs[i] != h.coeffs[n - i]:
            raise ReciprocityError(i, n - i, h.coeffs[i], h.coeffs[n - i])


def gamma_by_basis(h: Polynomial) -> GammaVector:
    """Expand a reciprocal ``h`` in the basis ``t**i (1+t)**(n-2i)``.

    The change of basis is unitriangular, so the solve is a sweep that reads
    ``gamma_m`` off the ``t**m`` coefficient of the running residual.
    """
    check_reciprocal(h)
    n = h.formal_degree
    residual = list(h.coeffs)
    gam = []
    for m in range(n // 2 + 1):
        g = residual[m]
        gam.append(g)
        if g:
            for j, c in enumerate(_basis_element(m, n)):
                if c:
                    residual[j] -= g * c
    if any(residual):
        raise AssertionError(f"basis solve left a nonzero residual {residual}")
    return GammaVector(tuple(gam), n, extended=False)


def gamma_extended(h: Polynomial, max_order: int) -> GammaVector:
    """First ``max_order + 1`` coefficients of ``J(Ct(u))``, ``J = h / (1+u)**n``."""
    if max_order < 0:
        raise DomainError("max_order must be nonnegative")
    n = h.formal_degree
    J = series_divide(h, n, max_order)
    ct = TruncatedSeries(shifted_catalan_series(max_order), max_order)
    gam = series_compose(J, ct).coeffs
    if h.is_reciprocal():
        tail = gam[n // 2 + 1:]
        if any(tail):
            raise AssertionError(f"reciprocal input produced nonzero tail {tail}")
        return GammaVector(gam, n, extended=False)
    return GammaVector(gam, n, extended=True)


def gamma_catalan_formula(h: Polynomial, m: int, printed: bool = False):
    """``gamma_m`` as the double sum of ``h_l binom(-n, i-l) [u**m] Ct**i``."""
    if m < 0:
        raise DomainError("index must be nonnegative")
    n = h.formal_degree
    total = 0
    for i in range(m + 1):
        c = catalan_power_coeff(i, m, printed=printed)
        if not c:
            continue
        inner = 0
        for l in range(min(n, i) + 1):
            if h.coeffs[l]:
                inner += h.coeffs[l] * binom(-n, i - l)
        total += inner * c
    return normalize(total) if isinstance(total, Fraction) else total


def local_global_numerator(h: Polynomial) -> Polynomial:
    """``(1+u) h'(u) - n h(u)``; coefficient ``k`` is ``(k+1) h_{k+1} - (n-k) h_k``."""
    n = h.formal_degree
    dh = derivative(h)
    return Polynomial([dh[k] + dh[k - 1] - n * h[k] for k in range(n + 1)], n)


def gamma_derivative_formula(h: Polynomial, r: int):
    """``gamma_r = (1/r) [u**(r-1)] Q(u) / (1+u)**(n+1-2r)`` with ``Q`` the local-global numerator.

    Restricted to ``1 <= r`` and ``2r <= n + 1``; use :func:`gamma_extended` beyond that.
    """
    n = h.formal_degree
    if r == 0:
        raise IndexError("the derivative formula starts at r = 1; gamma_0 is h_0")
    if r < 0:
        raise IndexError(f"index must be positive, got {r}")
    if 2 * r > n + 1:
        raise DomainError(
            f"derivative formula needs 2r <= n + 1 (r={r}, n={n}); use gamma_extended"
        )
    Q = local_global_numerator(h)
    val = series_divide(Q, n + 1 - 2 * r, r - 1).coeffs[r - 1]
    return normalize(Fraction(val) / r)


@lru_cache(maxsize=256)
def _gamma_matrix_rows(n: int, M: int, printed: bool) -> tuple:
    rows = []
    for m in range(M + 1):
        row = []
        for l in range(n + 1):
            acc = 0
            for i in range(l, m + 1):
                c = catalan_power_coeff(i, m, printed=printed)
                if c:
                    acc += binom(-n, i - l) * c
            row.append(normalize(acc) if isinstance(acc, Fraction) else acc)
        rows.append(tuple(row))
    return tuple(rows)


def gamma_matrix(n: int, M: int, printed: bool = False) -> GammaMatrix:
    if n < 0 or M < 0:
        raise DomainError("formal degree and row count must be nonnegative")
    return GammaMatrix(_gamma_matrix_rows(n, M, printed), n)


def h_from_gamma(g: GammaVector) -> Polynomial:
    """``sum gamma_m t**m (1+t)**(n-2m)`` for a non-extended gamma vector."""
    if g.extended:
        raise DomainError("an extended gamma series has no polynomial preimage")
    n = g.formal_degree
    out = [0] * (n + 1)
    for m, gm in enumerate(g.entries[: n // 2 + 1]):
        if gm:
            for j, c in enumerate(_basis_element(m, n)):
                if c:
                    out[j] += gm * c
    return Polynomial(out, n)


def gamma_vector(h: Polynomial, order: int = None) -> GammaVector:
    """Gamma vector of ``h``: exact basis solve for reciprocal input when no
    order is requested, otherwise the truncated extended series."""
    if order is None and h.is_reciprocal():
        return gamma_by_basis(h)
    return gamma_extended(h, h.formal_degree if order is None else order)
