"""Exact polynomial and truncated power series arithmetic over the rationals.

Coefficients are Python ints or :class:`fractions.Fraction`. Every value that
is integral is stored as an ``int``; this keeps the hot loops on machine-fast
integer arithmetic without giving up exactness, and ``int`` and ``Fraction``
compare and combine exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import CompositionDomainError, DomainError

Number = Union[int, Fraction]


def to_rational(x) -> Number:
    """Convert ``x`` to an exact rational, rejecting floats and booleans.

    Strings may be integers, decimals (``"2.5"``) or ``"p/q"``.
    """
    if isinstance(x, bool):
        raise DomainError(f"boolean is not a rational coefficient: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return to_rational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        try:
            return to_rational(Fraction(x.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse rational from {x!r}") from exc
    raise DomainError(f"expected an exact rational, got {type(x).__name__} {x!r}")


def normalize(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def rational_str(x: Number) -> str:
    """Lowest-terms string: ``"3"`` or ``"-7/2"``."""
    x = normalize(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def sign(x: Number) -> int:
    return (x > 0) - (x < 0)


def binom(x: int, k: int) -> int:
    """Generalized binomial coefficient via the falling factorial.

    Defined for every integer ``x``; zero when ``k < 0``. For ``x >= 0`` this
    agrees with :func:`math.comb`, and ``binom(-m, j) == (-1)**j * binom(m+j-1, j)``.
    """
    if k < 0:
        return 0
    if x >= 0:
        return math.comb(x, k)
    # x < 0: upper argument negative
    return (-1) ** k * math.comb(k - x - 1, k)


@dataclass(frozen=True)
class Polynomial:
    """Dense exact polynomial ``sum coeffs[i] t**i`` with a declared formal degree.

    ``formal_degree`` may exceed the index of the last nonzero coefficient;
    ``coeffs`` always holds exactly ``formal_degree + 1`` entries.
    """

    coeffs: tuple
    formal_degree: int = None

    def __post_init__(self):
        cs = [to_rational(c) for c in self.coeffs]
        if not cs:
            cs = [0]
        n = self.formal_degree
        if n is None:
            n = len(cs) - 1
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise DomainError(f"formal degree must be a nonnegative integer, got {n!r}")
        if len(cs) > n + 1:
            if any(cs[n + 1:]):
                raise DomainError(
                    f"coefficient at index > formal degree {n} is nonzero"
                )
            cs = cs[: n + 1]
        cs.extend([0] * (n + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "formal_degree", n)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    @property
    def degree(self) -> int:
        """Actual degree (index of the last nonzero coefficient), -1 for zero."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def is_reciprocal(self) -> bool:
        n = self.formal_degree
        return all(self.coeffs[i] == self.coeffs[n - i] for i in range(n // 2 + 1))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(self.formal_degree, other.formal_degree)
        return Polynomial([self[i] + other[i] for i in range(n + 1)], n)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(self.formal_degree, other.formal_degree)
        return Polynomial([self[i] - other[i] for i in range(n + 1)], n)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.formal_degree)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return Polynomial(
                poly_mul(self.coeffs, other.coeffs),
                self.formal_degree + other.formal_degree,
            )
        c = to_rational(other)
        return Polynomial([normalize(c * x) for x in self.coeffs], self.formal_degree)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return normalize(acc) if isinstance(acc, Fraction) else acc

    def to_json(self) -> dict:
        return {"coeffs": [rational_str(c) for c in self.coeffs], "formal_degree": self.formal_degree}

    @classmethod
    def from_json(cls, doc) -> "Polynomial":
        if not isinstance(doc, dict) or "coeffs" not in doc or "formal_degree" not in doc:
            raise DomainError('polynomial JSON needs "coeffs" and "formal_degree"')
        if not isinstance(doc["coeffs"], list):
            raise DomainError('"coeffs" must be a list')
        return cls(tuple(doc["coeffs"]), doc["formal_degree"])


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known exactly through ``u**order``."""

    coeffs: tuple
    order: int = None

    def __post_init__(self):
        cs = [to_rational(c) for c in self.coeffs]
        N = self.order
        if N is None:
            N = len(cs) - 1
        if N < 0:
            raise DomainError("series order must be nonnegative")
        cs = cs[: N + 1]
        cs.extend([0] * (N + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", N)

    def __getitem__(self, i):
        if 0 <= i <= self.order:
            return self.coeffs[i]
        raise IndexError(f"coefficient {i} beyond truncation order {self.order}")

    def __len__(self):
        return self.order + 1

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        N = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(N + 1)], N)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            N = min(self.order, other.order)
            return TruncatedSeries(poly_mul(self.coeffs, other.coeffs, N), N)
        c = to_rational(other)
        return TruncatedSeries([normalize(c * x) for x in self.coeffs], self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            raise DomainError("negative powers of a truncated series are not supported")
        result = [1] + [0] * self.order
        base = list(self.coeffs)
        while k:
            if k & 1:
                result = poly_mul(result, base, self.order)
            k >>= 1
            if k:
                base = poly_mul(base, base, self.order)
        return TruncatedSeries(result, self.order)


def poly_mul(a: Sequence, b: Sequence, order: int = None) -> list:
    """Schoolbook product of coefficient lists, optionally truncated at ``order``."""
    if order is None:
        order = len(a) + len(b) - 2
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if not x or i > order:
            continue
        lim = min(len(b), order - i + 1)
        for j in range(lim):
            y = b[j]
            if y:
                out[i + j] += x * y
    return [normalize(c) if isinstance(c, Fraction) else c for c in out]


def reciprocal(p: Polynomial) -> Polynomial:
    """``t**n p(1/t)`` with ``n`` the formal degree."""
    return Polynomial(p.coeffs[::-1], p.formal_degree)


def translate(p: Polynomial, c) -> Polynomial:
    """``p(t + c)`` by binomial expansion (Horner in ``t + c``)."""
    c = to_rational(c)
    n = p.formal_degree
    out = [0] * (n + 1)
    # Horner: acc <- acc * (t + c) + p_i
    for a in reversed(p.coeffs):
        for j in range(n, 0, -1):
            out[j] = out[j - 1] + c * out[j]
        out[0] = c * out[0] + a
    return Polynomial(out, n)


def derivative(p: Polynomial) -> Polynomial:
    n = p.formal_degree
    cs = [i * p.coeffs[i] for i in range(1, n + 1)]
    return Polynomial(cs, max(n - 1, 0))


def expand_binomial_power(exponent: int, order: int) -> TruncatedSeries:
    """Series of ``(1+u)**exponent`` through ``u**order``; ``exponent`` may be negative."""
    if order < 0:
        raise DomainError("order must be nonnegative")
    return TruncatedSeries([binom(exponent, j) for j in range(order + 1)], order)


def series_divide(num: Polynomial, denom_exponent: int, order: int) -> TruncatedSeries:
    """``num(u) / (1+u)**denom_exponent`` through ``u**order``."""
    if denom_exponent < 0:
        raise DomainError("denominator exponent must be nonnegative")
    inv = expand_binomial_power(-denom_exponent, order)
    return TruncatedSeries(poly_mul(num.coeffs, inv.coeffs, order), order)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(u))`` truncated at the common order (Horner scheme)."""
    if outer.order != inner.order:
        raise DomainError(
            f"composition needs equal orders, got {outer.order} and {inner.order}"
        )
    if inner.coeffs[0] != 0:
        raise CompositionDomainError(
            f"inner series has nonzero constant term {inner.coeffs[0]}"
        )
    N = outer.order
    g = list(inner.coeffs)
    acc = [0] * (N + 1)
    for k in range(N, -1, -1):
        acc = poly_mul(acc, g, N)
        acc[0] += outer.coeffs[k]
    return TruncatedSeries(acc, N)


def series_from(coeffs: Iterable, order: int) -> TruncatedSeries:
    return TruncatedSeries(list(coeffs), order)
