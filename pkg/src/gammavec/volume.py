"""Gamma vectors of the specialized volume polynomial ``V(u) = (uA + B)**d``.

An intersection sequence ``a_k`` (standing for ``A**k B**(d-k)``) determines
``V`` coefficientwise as ``binom(d, k) a_k``. With
``Q(u) = (1+u) V'(u) - d V(u)`` one has

    r gamma_r = (-1)**(r-1) sum_{i<r} (-1)**i c_i q_i,   c_i = binom(d-r-i-1, r-i-1)

and the sign results below come from comparing consecutive ``c_i |q_i|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import SignClaim, check_r_range, sign_name, strengthen, weak_sign_name
from .errors import DomainError
from .exact_series import Polynomial, binom, normalize, rational_str, sign, to_rational
from .gamma_core import local_global_numerator


@dataclass(frozen=True)
class IntersectionSequence:
    a: tuple
    d: int

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 1:
            raise DomainError(f"d must be a positive integer, got {self.d!r}")
        a = tuple(to_rational(x) for x in self.a)
        if len(a) != self.d + 1:
            raise DomainError(f"expected {self.d + 1} intersection numbers, got {len(a)}")
        object.__setattr__(self, "a", a)

    @classmethod
    def geometric(cls, a0, rho, d: int) -> "IntersectionSequence":
        """``a_k = a0 * rho**k`` (``A = rho B`` with ``a0 = B**d``)."""
        a0, rho = to_rational(a0), to_rational(rho)
        return cls(tuple(normalize(Fraction(a0) * Fraction(rho) ** k) for k in range(d + 1)), d)

    def to_json(self) -> dict:
        return {"a": [rational_str(x) for x in self.a], "d": self.d}

    @classmethod
    def from_json(cls, doc) -> "IntersectionSequence":
        if not isinstance(doc, dict) or not isinstance(doc.get("a"), list) or "d" not in doc:
            raise DomainError('intersection sequence JSON needs "a" (list) and "d"')
        return cls(tuple(doc["a"]), doc["d"])


def _q_from_a(a, d):
    return tuple(normalize(d * binom(d - 1, k) * (a[k + 1] - a[k])) for k in range(d))


@dataclass(frozen=True)
class QNumerator:
    """``q_k = d binom(d-1, k) (a_{k+1} - a_k)`` for the sequence it was built from."""

    q: tuple
    source: IntersectionSequence

    def __post_init__(self):
        q = tuple(to_rational(x) for x in self.q)
        object.__setattr__(self, "q", q)
        if q != _q_from_a(self.source.a, self.source.d):
            raise DomainError("q does not match the intersection sequence")

    def to_json(self) -> dict:
        return {"q": [rational_str(x) for x in self.q]}


def volume_polynomial(s: IntersectionSequence) -> Polynomial:
    return Polynomial([binom(s.d, k) * s.a[k] for k in range(s.d + 1)], s.d)


def volume_q(s: IntersectionSequence) -> QNumerator:
    q = _q_from_a(s.a, s.d)
    Q = local_global_numerator(volume_polynomial(s))
    if list(q) != list(Q.coeffs[: s.d]) or Q.coeffs[s.d] != 0:
        raise AssertionError("q disagrees with (1+u)V' - dV")
    return QNumerator(q, s)


def _weights(d, r):
    return [binom(d - r - i - 1, r - i - 1) for i in range(r)]


def volume_gamma(s: IntersectionSequence, r: int):
    check_r_range(s.d, r)
    q = _q_from_a(s.a, s.d)
    c = _weights(s.d, r)
    total = (-1) ** (r - 1) * sum((-1) ** i * c[i] * q[i] for i in range(r))
    return normalize(Fraction(total) / r)


def _weighted(q, d, r):
    return [c * abs(x) for c, x in zip(_weights(d, r), q)]


def volbd_classify(s: IntersectionSequence, r: int) -> SignClaim:
    """Sign of ``gamma_r`` of the volume polynomial from the shape of ``q``.

    * alternating: ``q_0..q_{r-1}`` nonzero with alternating signs gives
      ``(-1)**(r-1) sgn(q_0)``, strictly.
    * growing: ``q_0..q_{r-1}`` of one sign with ``c_i |q_i|`` nondecreasing
      (equivalently ``q_{i+1}/q_i >= (d-r-i-1)/(r-i-1)``) gives ``sgn(q_0)``.
    * shrinking: one sign with ``c_i |q_i|`` nonincreasing gives
      ``(-1)**(r-1) sgn(q_0)``.
    """
    check_r_range(s.d, r)
    q = _q_from_a(s.a, s.d)[:r]
    w = volume_gamma(s, r)
    if not any(q):
        return SignClaim(r, "gamma_r", "zero", "q vanishes below r", w)
    s0 = sign(q[0])
    if all(x != 0 and sign(x) == (-1) ** i * s0 for i, x in enumerate(q)):
        return SignClaim(r, "gamma_r", sign_name((-1) ** (r - 1) * s0), "part1: q alternates", w)
    if s0 != 0 and all(sign(x) in (0, s0) for x in q):
        m = _weighted(q, s.d, r)
        if all(m[i] <= m[i + 1] for i in range(r - 1)):
            return SignClaim(r, "gamma_r", strengthen(weak_sign_name(s0), w), "part2: weighted q nondecreasing", w)
        if all(m[i] >= m[i + 1] for i in range(r - 1)):
            sg = (-1) ** (r - 1) * s0
            return SignClaim(r, "gamma_r", strengthen(weak_sign_name(sg), w), "part3: weighted q nonincreasing", w)
    return SignClaim(r, "gamma_r", "unknown", "no case applies", w)


def printed_volbd_part1(s: IntersectionSequence) -> bool:
    """Hypothesis of part 1 in its ``q``-alternation form: ``sgn q_k = (-1)**k``.
    The original asserts ``sgn gamma_r = (-1)**(r-1)`` under it."""
    q = _q_from_a(s.a, s.d)
    return all(x != 0 and sign(x) == (-1) ** k for k, x in enumerate(q))


def printed_volbd_part2(s: IntersectionSequence, r: int) -> bool:
    """``(d-k-1)/(k+1) * q_{k+1}/q_k > (d-r-k-1)/(r-k-1)`` for ``0 <= k <= r-2``,
    verbatim; the original asserts ``sgn gamma_r = sgn q_0`` under it."""
    q = _q_from_a(s.a, s.d)
    d = s.d
    for k in range(r - 1):
        if q[k] == 0:
            return False
        lhs = Fraction(d - k - 1, k + 1) * Fraction(q[k + 1]) / q[k]
        if not lhs > Fraction(d - r - k - 1, r - k - 1):
            return False
    return True


def printed_volbd_part3(s: IntersectionSequence) -> bool:
    """``a`` nonnegative and decreasing; the original asserts
    ``sgn gamma_r = (-1)**r`` under it. False: ``a = (3, 2, 0, 0, 0)``,
    ``r = 2`` gives ``gamma_2 = -10``."""
    a = s.a
    return all(x >= 0 for x in a) and all(a[i] >= a[i + 1] for i in range(len(a) - 1))


# --- constant ratio family ----------------------------------------------------

def constant_ratio_threshold(d: int, r: int) -> int:
    """``rho > d - 2r + 1`` makes every large-ratio inequality hold for this ``r``."""
    return d - 2 * r + 1


def large_ratio_condition(rho, d: int, r: int) -> bool:
    """``(d-k-1) rho / (k+1) > (d-r-k-1)/(r-k-1)`` for ``0 <= k <= r-2``."""
    rho = Fraction(to_rational(rho))
    return all(
        Fraction(d - k - 1, k + 1) * rho > Fraction(d - r - k - 1, r - k - 1)
        for k in range(r - 1)
    )


def constant_ratio_classify(rho, a0_sign: int, d: int, r: int) -> SignClaim:
    """Sign of ``gamma_r`` for ``a_k = a0 rho**k`` with ``sgn(a0) = a0_sign``.

    ``sgn(q_0) = sgn(a0 (rho - 1))``. Negative or zero ``rho`` gives
    ``(-1)**(r-1) sgn(q_0)``; ``rho`` past the large-ratio condition gives
    ``sgn(q_0)``; small positive ``rho`` gives ``(-1)**(r-1) sgn(q_0)`` once the
    weighted terms are checked to be nonincreasing. Anything else is unknown.
    """
    rho = to_rational(rho)
    if a0_sign not in (-1, 0, 1):
        raise DomainError(f"a0_sign must be -1, 0 or 1, got {a0_sign!r}")
    check_r_range(d, r)
    s = IntersectionSequence.geometric(a0_sign, rho, d)
    w = volume_gamma(s, r)
    q0 = d * a0_sign * (rho - 1)
    s0 = sign(q0)
    if s0 == 0:
        return SignClaim(r, "gamma_r", "zero", "rho = 1 or a0 = 0", w)
    alt = sign_name((-1) ** (r - 1) * s0)
    if rho < 0:
        return SignClaim(r, "gamma_r", alt, "rho < 0", w)
    if rho == 0:
        return SignClaim(r, "gamma_r", alt, "rho = 0", w)
    if large_ratio_condition(rho, d, r):
        return SignClaim(r, "gamma_r", sign_name(s0), "large rho", w)
    m = _weighted(_q_from_a(s.a, d)[:r], d, r)
    if all(m[i] >= m[i + 1] for i in range(r - 1)):
        return SignClaim(r, "gamma_r", strengthen(weak_sign_name((-1) ** (r - 1) * s0), w), "small rho: weighted terms nonincreasing", w)
    return SignClaim(r, "gamma_r", "unknown", "rho between regimes", w)


# --- log-concavity ------------------------------------------------------------

def log_concave_check(seq, upper_bound=None, lower_bound=None) -> dict:
    """Check ``a_k**2 >= a_{k-1} a_{k+1}`` at every interior ``k``.

    For a positive log-concave sequence the ratios ``a_{k+1}/a_k`` are
    nonincreasing, so an upper bound on all ratios reduces to the first
    ratio and a lower bound to the last one. Both the reduced and the full
    checks are reported.
    """
    a = [to_rational(x) for x in seq]
    violation = None
    equality = True
    for k in range(1, len(a) - 1):
        lhs, rhs = a[k] * a[k], a[k - 1] * a[k + 1]
        if lhs < rhs and violation is None:
            violation = k
        if lhs != rhs:
            equality = False
    report = {"log_concave": violation is None, "equality": violation is None and equality}
    if violation is not None:
        report["first_violation"] = violation
        return report
    if len(a) < 2 or any(x <= 0 for x in a):
        return report
    ratios = [Fraction(a[k + 1]) / a[k] for k in range(len(a) - 1)]
    if any(ratios[k] < ratios[k + 1] for k in range(len(ratios) - 1)):
        raise AssertionError("positive log-concave sequence with increasing ratios")
    report["ratios"] = [rational_str(normalize(x)) for x in ratios]
    report["ratios_nonincreasing"] = True
    if upper_bound is not None:
        C = to_rational(upper_bound)
        report["upper_bound"] = {
            "bound": rational_str(C),
            "first_pair": ratios[0] <= C,
            "all_pairs": all(x <= C for x in ratios),
        }
    if lower_bound is not None:
        C = to_rational(lower_bound)
        report["lower_bound"] = {
            "bound": rational_str(C),
            "last_pair": ratios[-1] >= C,
            "all_pairs": all(x >= C for x in ratios),
        }
    return report
