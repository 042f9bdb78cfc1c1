"""Sign bounds for gamma entries of shifted reciprocal polynomials and of
general coefficient sequences.

Every classifier returns a :class:`SignClaim` whose witness is the exact
value of the quantity being bounded. The constructor refuses a claim that
its own witness contradicts, so a classifier bug surfaces as an exception
instead of a wrong answer.

The classifiers implement corrected, provably sound hypotheses. The
``printed_*`` predicates evaluate the original published hypotheses
verbatim; some of them are false, and the verification suites use them to
exhibit counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, HypothesisError
from .exact_series import binom, normalize, rational_str, sign, to_rational

SIGNS = ("positive", "negative", "zero", "nonpositive", "nonnegative", "unknown")
QUANTITIES = ("gamma_r", "shifted_gamma_r", "alternating_sum")


def _satisfies(value, claimed: str) -> bool:
    s = sign(value)
    return {
        "positive": s > 0,
        "negative": s < 0,
        "zero": s == 0,
        "nonpositive": s <= 0,
        "nonnegative": s >= 0,
        "unknown": True,
    }[claimed]


def sign_name(s: int) -> str:
    return {1: "positive", -1: "negative", 0: "zero"}[s]


def weak_sign_name(s: int) -> str:
    return {1: "nonnegative", -1: "nonpositive"}[s]


def strengthen(claimed: str, witness) -> str:
    """Upgrade a weak claim to the strict sign when the witness is nonzero."""
    if claimed == "nonnegative" and witness > 0:
        return "positive"
    if claimed == "nonpositive" and witness < 0:
        return "negative"
    return claimed


@dataclass(frozen=True)
class SignClaim:
    r: int
    quantity: str
    claimed_sign: str
    hypothesis: str
    witness: object

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise DomainError(f"unknown quantity {self.quantity!r}")
        if self.claimed_sign not in SIGNS:
            raise DomainError(f"unknown sign {self.claimed_sign!r}")
        w = to_rational(self.witness)
        object.__setattr__(self, "witness", w)
        if not _satisfies(w, self.claimed_sign):
            raise AssertionError(
                f"claim {self.claimed_sign} under '{self.hypothesis}' contradicted by witness {w}"
            )

    @property
    def known(self) -> bool:
        return self.claimed_sign != "unknown"

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "quantity": self.quantity,
            "claimed_sign": self.claimed_sign,
            "hypothesis": self.hypothesis,
            "witness": rational_str(self.witness),
        }


def check_r_range(d: int, r: int) -> None:
    if not isinstance(r, int) or isinstance(r, bool) or r < 1 or 2 * r > d:
        raise IndexError(f"need 1 <= r <= d/2, got r={r}, d={d}")


def _pad(seq, d: int) -> list:
    seq = [to_rational(x) for x in seq]
    if len(seq) > d + 1:
        if any(seq[d + 1:]):
            raise DomainError(f"sequence has nonzero entries beyond index d = {d}")
        seq = seq[: d + 1]
    return seq + [0] * (d + 1 - len(seq))


def _exact_len(seq, d: int) -> list:
    seq = [to_rational(x) for x in seq]
    if len(seq) != d + 1:
        raise DomainError(f"expected {d + 1} coefficients for d = {d}, got {len(seq)}")
    return seq


# --- shifted reciprocal polynomials -------------------------------------------

def shiftgam_gamma(a, d: int, r: int):
    """``gamma_r`` of ``B(t) = R(t+1)``, ``R`` the reciprocal of ``A = sum a_k t**k``.

    Uses ``r gamma_r = sum_k -k binom(2r-k-1, r-1) a_k``.
    """
    a = _exact_len(a, d)
    check_r_range(d, r)
    total = sum(-k * binom(2 * r - k - 1, r - 1) * a[k] for k in range(1, d + 1))
    return normalize(Fraction(total) / r)


def _require_nonneg(a, what="a"):
    for i, x in enumerate(a):
        if x < 0:
            raise HypothesisError(f"{what}[{i}] = {rational_str(x)} is negative", i)


def shiftgam_even_bound(k: int, K: int, r: int) -> Fraction:
    """Largest ``a_K / a_k`` for which the ``k``-term absorbs the ``K``-term."""
    return Fraction(k * binom(2 * r - k - 1, r - 1), K * binom(k + r - 2, r - 1))


def shiftgam_classify(a, d: int, r: int) -> SignClaim:
    """Sign of ``gamma_r(B)`` for nonnegative ``a``.

    In ``r gamma_r`` the terms with ``1 <= k <= r`` are nonpositive, those with
    ``r < k < 2r`` vanish and those with ``K >= 2r`` carry sign ``(-1)**(r-1)``.
    For odd ``r`` everything is nonpositive. For even ``r`` each positive
    term at ``K`` is paired with the negative term at ``k = K - 2r + 1`` and
    must be absorbed by it; when ``k > r`` there is nothing to absorb it, so
    ``a_K`` has to vanish.
    """
    a = _exact_len(a, d)
    _require_nonneg(a)
    w = shiftgam_gamma(a, d, r)
    if r % 2 == 1:
        return SignClaim(r, "gamma_r", strengthen("nonpositive", w), "odd r", w)
    for K in range(2 * r, d + 1):
        k = K - 2 * r + 1
        if k > r:
            if a[K] != 0:
                return SignClaim(r, "gamma_r", "unknown", f"even r: a_{K} has no partner term", w)
            continue
        if a[K] == 0:
            continue
        if a[k] == 0:
            return SignClaim(r, "gamma_r", "unknown", f"even r: ratio a_{K}/a_{k} not evaluable", w)
        if Fraction(a[K]) / a[k] > shiftgam_even_bound(k, K, r):
            return SignClaim(r, "gamma_r", "unknown", f"even r: ratio a_{K}/a_{k} too large", w)
    return SignClaim(r, "gamma_r", strengthen("nonpositive", w), "even r: pairwise ratio bound", w)


def printed_shiftgam_ratio_hypothesis(a, d: int, r: int) -> bool:
    """Even-``r`` ratio hypothesis exactly as originally stated:
    ``a_{k+2r-1} / a_k >= k binom(2r-k-1, r-1) / ((k+2r-1) binom(k+r-1, r-1))``
    for ``0 <= k <= min(2r-1, d-2r+1)``. A zero denominator makes it false."""
    a = _exact_len(a, d)
    for k in range(0, min(2 * r - 1, d - 2 * r + 1) + 1):
        K = k + 2 * r - 1
        aK = a[K] if K <= d else 0
        if a[k] == 0:
            return False
        rhs = Fraction(k * binom(2 * r - k - 1, r - 1), K * binom(k + r - 1, r - 1))
        if Fraction(aK) / a[k] < rhs:
            return False
    return True


def printed_shiftgam_claims_nonpositive(a, d: int, r: int) -> bool:
    """Whether the original statement asserts ``gamma_r <= 0``: odd ``r``,
    ``r = d/2``, or the printed even-``r`` ratio hypothesis."""
    return r % 2 == 1 or 2 * r == d or printed_shiftgam_ratio_hypothesis(a, d, r)


# --- general coefficient sequences --------------------------------------------

def ftypesum_terms(b, d: int, r: int):
    """``(x, y)`` with ``x_k = k binom(d-r-k-1, r-k) b_k`` (``k = 0..r``) and
    ``y_k = d binom(d-r-k-1, r-k-1) b_k`` (``k = 0..r``; ``y_r = 0``), so that
    ``r gamma_r = (-1)**r sum_k (-1)**k (x_k + y_k)``."""
    x = [k * binom(d - r - k - 1, r - k) * b[k] for k in range(r + 1)]
    y = [d * binom(d - r - k - 1, r - k - 1) * b[k] for k in range(r + 1)]
    return x, y


def ftypesum_gamma(b, d: int, r: int, printed: bool = False):
    """``gamma_r`` of ``B = sum b_k u**k`` from the two-sum expansion.

    The first sum runs over ``1 <= k <= r``. ``printed=True`` stops it at
    ``r - 1`` as originally published, which drops the ``r b_r`` term and is
    wrong (``b = [3, 3, 1]``, ``d = 2``, ``r = 1`` gives -6 instead of -3).
    """
    check_r_range(d, r)
    b = _pad(b, d)
    x, y = ftypesum_terms(b, d, r)
    top = r - 1 if printed else r
    first = sum((-1) ** k * x[k] for k in range(1, top + 1))
    second = sum((-1) ** k * y[k] for k in range(r))
    return normalize(Fraction((-1) ** r * (first + second)) / r)


def shifted_quantity(b, d: int, r: int):
    """``r gamma_r - (-1)**r d binom(d-r-1, r-1) b_0``."""
    b = _pad(b, d)
    return normalize(r * ftypesum_gamma(b, d, r) - (-1) ** r * d * binom(d - r - 1, r - 1) * b[0])


def _monotone_violation(seq, increasing: bool):
    for i in range(1, len(seq)):
        if (seq[i] < seq[i - 1]) if increasing else (seq[i] > seq[i - 1]):
            return i
    return None


def alternating_sum_sign(seq, monotonicity: str, start: int = 0) -> SignClaim:
    """Sign of ``sum_k (-1)**(start+k) s_k`` for a nonnegative monotone sequence.

    Increasing: the sign of the last term, ``(-1)**(start+N)``, weakly.
    Decreasing: the sign of the first term, ``(-1)**start``, weakly. A weak
    claim becomes strict for increasing input when the sum is nonzero.
    """
    seq = [to_rational(x) for x in seq]
    if monotonicity not in ("increasing", "decreasing"):
        raise DomainError(f"monotonicity must be increasing or decreasing, got {monotonicity!r}")
    _require_nonneg(seq, "seq")
    bad = _monotone_violation(seq, monotonicity == "increasing")
    if bad is not None:
        raise HypothesisError(f"sequence is not {monotonicity} at index {bad}", bad)
    total = normalize(sum((-1) ** (start + k) * s for k, s in enumerate(seq)))
    N = len(seq) - 1
    if monotonicity == "increasing":
        claimed = strengthen(weak_sign_name((-1) ** (start + N)), total) if seq else "zero"
    else:
        claimed = weak_sign_name((-1) ** start) if seq else "zero"
    return SignClaim(N, "alternating_sum", claimed, f"{monotonicity} sequence, start {start}", total)


def _decreasing_nonneg(b, lo, hi) -> bool:
    seg = b[lo: hi + 1]
    return all(x >= 0 for x in seg) and all(seg[i] >= seg[i + 1] for i in range(len(seg) - 1))


def _ratio_2a(b, d, r) -> bool:
    """``b_k / b_{k+1} >= (k+1)(r-k) / (k(d-r-k-1))`` for ``1 <= k <= r-1``."""
    for k in range(1, r):
        den = k * (d - r - k - 1)
        if b[k + 1] == 0 or den == 0:
            return False
        if Fraction(b[k]) / b[k + 1] < Fraction((k + 1) * (r - k), den):
            return False
    return True


def _case_2b(b, d, r) -> bool:
    if any(x < 0 for x in b[: r + 1]):
        return False
    for k in range(0, r - 1):
        den = r - k - 1
        if b[k] == 0:
            return False
        if Fraction(b[k + 1]) / b[k] < Fraction(d - r - k - 1, den):
            return False
    x, y = ftypesum_terms(b, d, r)
    z = [x[k] + y[k] for k in range(r)]
    prev = z[r - 2] if r >= 2 else 0
    return r * b[r] <= z[r - 1] - prev


def boundgam_classify(b, d: int, r: int) -> SignClaim:
    """Sign of ``gamma_r`` or of the shifted quantity
    ``r gamma_r - (-1)**r d binom(d-r-1, r-1) b_0`` for a coefficient sequence.

    Cases tried in order:

    * part1: every ``b_k`` nonzero with sign ``(-1)**k``; ``gamma_r`` has sign ``(-1)**r``.
    * part2a (r = d/2): ``b`` nonnegative and decreasing on ``0..r`` bounds ``gamma_r``
      by ``(-1)**r``; decreasing on ``1..r`` bounds the shifted quantity by ``(-1)**(r+1)``.
    * part2a (3r <= d): nonnegative decreasing on ``1..r``; shifted quantity, ``(-1)**(r+1)``.
    * part2a (ratio): ``b_k / b_{k+1} >= (k+1)(r-k)/(k(d-r-k-1))`` for ``1 <= k <= r-1``
      with ``b`` nonnegative decreasing on ``1..r-1``; shifted quantity, ``(-1)**(r+1)``.
    * part2b: ``b`` nonnegative, ``b_{k+1}/b_k >= (d-r-k-1)/(r-k-1)`` for ``0 <= k <= r-2``
      and ``r b_r <= z_{r-1} - z_{r-2}``; ``gamma_r <= 0``.
    """
    check_r_range(d, r)
    b = _pad(b, d)
    g = ftypesum_gamma(b, d, r)
    s = shifted_quantity(b, d, r)

    def claim(quantity, weak_sign, hyp, strict=False):
        w = g if quantity == "gamma_r" else s
        name = sign_name(weak_sign) if strict else strengthen(weak_sign_name(weak_sign), w)
        return SignClaim(r, quantity, name, hyp, w)

    if all(b[k] != 0 and sign(b[k]) == (-1) ** k for k in range(d + 1)):
        return claim("gamma_r", (-1) ** r, "part1: sgn b_k = (-1)^k", strict=True)
    if 2 * r == d:
        if _decreasing_nonneg(b, 0, r):
            return claim("gamma_r", (-1) ** r, "part2a: r = d/2, b decreasing from b_0")
        if _decreasing_nonneg(b, 1, r):
            return claim("shifted_gamma_r", (-1) ** (r + 1), "part2a: r = d/2, b decreasing from b_1")
    if 3 * r <= d and _decreasing_nonneg(b, 1, r):
        return claim("shifted_gamma_r", (-1) ** (r + 1), "part2a: r <= d/3, b decreasing")
    if _decreasing_nonneg(b, 1, r - 1) and b[r] >= 0 and _ratio_2a(b, d, r):
        return claim("shifted_gamma_r", (-1) ** (r + 1), "part2a: ratio condition")
    if _case_2b(b, d, r):
        return claim("gamma_r", -1, "part2b: increasing ratio condition")
    return SignClaim(r, "gamma_r", "unknown", "no case applies", g)
