"""Catalan numbers, powers of the shifted Catalan series, and Lagrange inversion.

``C(u) = sum C_k u**k`` is the Catalan generating function and
``Ct(u) = C(u) - 1`` its shift; ``Ct`` satisfies ``Ct = u (Ct + 1)**2``, so it
is the compositional solution ``f = x G(f)`` for ``G(x) = (1+x)**2``.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .exact_series import Polynomial, binom, normalize, poly_mul


class CatalanTable:
    """Catalan numbers cached on demand.

    Each new entry is produced by the segmented recurrence and checked
    against ``binom(2k, k) / (k + 1)`` before it is committed.
    """

    def __init__(self):
        self._values = [1]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def get(self, k: int) -> int:
        if k < 0:
            raise DomainError(f"Catalan index must be nonnegative, got {k}")
        values = self._values
        if k < len(values):
            return values[k]
        with self._lock:
            values = list(self._values)
            while len(values) <= k:
                j = len(values) - 1
                nxt = sum(values[i] * values[j - i] for i in range(j + 1))
                closed = math.comb(2 * (j + 1), j + 1) // (j + 2)
                if nxt != closed:
                    raise AssertionError(
                        f"Catalan recurrence and closed form disagree at {j + 1}: {nxt} vs {closed}"
                    )
                values.append(nxt)
            # publish a fully built list; readers never see a partial append
            self._values = values
        return values[k]

    @property
    def values(self) -> tuple:
        return tuple(self._values)


_TABLE = CatalanTable()


def catalan(k: int) -> int:
    return _TABLE.get(k)


def catalan_power_coeff(i: int, m: int, printed: bool = False):
    """Coefficient of ``u**m`` in ``Ct(u)**i``, i.e. ``(i/m) binom(2m, m-i)``.

    With ``printed=True`` the variant ``(i/m) binom(2i, m-i)`` is returned
    instead; it is wrong (e.g. ``(1, 2)`` gives 1 instead of 2) and exists
    only so the discrepancy can be demonstrated.
    """
    if i < 0 or m < 0:
        raise DomainError("catalan_power_coeff needs nonnegative i and m")
    if i == 0 and m == 0:
        return 1
    if i == 0 or m == 0:
        return 0
    top = 2 * i if printed else 2 * m
    return normalize(Fraction(i * binom(top, m - i), m))


def printed_power_coeff_disagreements(max_m: int):
    """Scan ``1 <= i <= m <= max_m`` (``m`` major) comparing the printed and
    correct closed forms. Yields ``(i, m, printed, correct)`` on mismatch."""
    for m in range(1, max_m + 1):
        for i in range(1, m + 1):
            p = catalan_power_coeff(i, m, printed=True)
            c = catalan_power_coeff(i, m)
            if p != c:
                yield i, m, p, c


def catalan_convolution_shifted(k: int, n: int) -> int:
    """``sum over compositions n = i_1 + ... + i_k (parts >= 1) of prod C_{i_j - 1}``.

    Closed form ``k/(2n-k) binom(2n-k, n)``, the coefficient of ``u**n`` in ``(u C(u))**k``.
    """
    if k <= 0 or k > n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    val = Fraction(k * math.comb(2 * n - k, n), 2 * n - k)
    assert val.denominator == 1
    return val.numerator


def _floor_half_offset(m: int):
    # (m/2 - 1, m/2) for even m, ((m-1)/2, (m-1)/2) for odd m
    if m % 2 == 0:
        return m // 2 - 1, m // 2
    return (m - 1) // 2, (m - 1) // 2


def catalan_convolution_unshifted(m: int, n: int, form: str = "binomial") -> int:
    """``[u**n] C(u)**m`` via the parity-split closed forms.

    ``form`` selects ``"product"`` (rising/falling products), ``"binomial"``
    (ratio of binomials) or ``"unified"`` (single floor-based formula); all
    three are exact and agree.
    """
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    if n < 0:
        return 0
    if form == "product":
        if m % 2 == 0:
            h = m // 2
            num = m * math.prod(range(n + 1, n + h))
            den = 2 * math.prod(range(n + h + 2, n + m + 1))
            val = Fraction(num, den) * catalan(n + h)
        else:
            h = (m - 1) // 2
            num = m * math.prod(range(n + 1, n + h + 1))
            den = math.prod(range(n + (m + 3) // 2, n + m + 1))
            val = Fraction(num, den) * catalan(n + h)
    elif form == "binomial":
        j, shift = _floor_half_offset(m)
        lead = Fraction(m, 2) if m % 2 == 0 else Fraction(m)
        val = lead * Fraction(math.comb(n + j, j), math.comb(n + m, j)) * catalan(n + shift)
    elif form == "unified":
        sgn = (-1) ** (m + 1)
        lead = Fraction(m) / (1 + Fraction(1 - sgn, 2))
        j = m // 2 + (sgn - 1) // 2
        val = lead * Fraction(math.comb(n + j, j), math.comb(n + m, j)) * catalan(n + m // 2)
    else:
        raise DomainError(f"unknown form {form!r}")
    if val.denominator != 1:
        raise AssertionError(f"non-integral convolution value {val} at m={m}, n={n}")
    return val.numerator


@lru_cache(maxsize=None)
def _poly_power(coeffs: tuple, e: int, order: int) -> tuple:
    result = [1]
    base = list(coeffs)
    while e:
        if e & 1:
            result = poly_mul(result, base, order)
        e >>= 1
        if e:
            base = poly_mul(base, base, order)
    result = list(result) + [0] * (order + 1 - len(result))
    return tuple(result[: order + 1])


def lagrange_coefficient(G: Polynomial, k: int, n: int):
    """``[x**n] f(x)**k`` for ``f = x G(f)``, computed as ``(k/n) [x**(n-k)] G(x)**n``."""
    if n <= 0:
        raise DomainError(f"n must be positive, got {n}")
    if G.coeffs[0] == 0:
        raise DomainError("G(0) must be nonzero")
    e = n - k
    if e < 0:
        return 0
    coeff = _poly_power(tuple(G.coeffs), n, e)[e]
    return normalize(Fraction(k) * coeff / n)


def shifted_catalan_series(order: int) -> list:
    """Coefficients ``[0, C_1, C_2, ...]`` of ``Ct(u)`` through ``u**order``."""
    return [0] + [catalan(j) for j in range(1, order + 1)]
