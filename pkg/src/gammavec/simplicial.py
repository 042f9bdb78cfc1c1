"""Simplicial complexes given by facets, f/h-vectors, links, and the
auxiliary f-vector decomposition of ``r * gamma_r``.

Throughout, ``d`` is one more than the dimension, so a complex with
``d``-element facets has f-vector ``(f_{-1}, ..., f_{d-1})`` and h-vector
``(h_0, ..., h_d)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable

from .errors import DomainError
from .exact_series import Polynomial, binom, normalize, rational_str, to_rational


def _sort_key(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


class SimplicialComplex:
    """Finite simplicial complex stored by its facets.

    Non-maximal sets among the given facets are dropped. Faces are
    enumerated lazily and cached.
    """

    def __init__(self, facets: Iterable[Iterable[Hashable]], vertices: Iterable[Hashable] = ()):
        sets = {frozenset(f) for f in facets}
        sets |= {frozenset([v]) for v in vertices}
        maximal = [s for s in sets if not any(s < t for t in sets)]
        if not maximal:
            maximal = [frozenset()]
        self.facets = frozenset(maximal)
        self.vertices = frozenset().union(*self.facets)
        self._faces = None

    @property
    def d(self) -> int:
        return max(len(f) for f in self.facets)

    @property
    def dimension(self) -> int:
        return self.d - 1

    def faces(self) -> frozenset:
        if self._faces is None:
            out = set()
            for facet in self.facets:
                items = sorted(facet, key=_sort_key)
                for k in range(len(items) + 1):
                    out.update(frozenset(c) for c in combinations(items, k))
            self._faces = frozenset(out)
        return self._faces

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        fs = sorted((sorted(f, key=_sort_key) for f in self.facets), key=lambda x: (len(x), [_sort_key(v) for v in x]))
        return f"SimplicialComplex({fs})"

    def to_json(self) -> dict:
        fs = sorted(
            (sorted(f, key=_sort_key) for f in self.facets),
            key=lambda x: (len(x), [_sort_key(v) for v in x]),
        )
        return {"facets": [[str(v) for v in f] for f in fs]}

    @classmethod
    def from_json(cls, doc) -> "SimplicialComplex":
        if not isinstance(doc, dict) or not isinstance(doc.get("facets"), list):
            raise DomainError('complex JSON needs a "facets" list')
        facets = []
        for f in doc["facets"]:
            if not isinstance(f, list) or not all(isinstance(v, (str, int)) and not isinstance(v, bool) for v in f):
                raise DomainError("each facet must be a list of vertex labels")
            facets.append([str(v) for v in f])
        return cls(facets)


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the ``d``-simplex: all ``d``-subsets of ``d + 1`` vertices."""
    return SimplicialComplex(combinations(range(1, d + 2), d))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the ``d``-dimensional cross-polytope on vertices ``+-1..+-d``."""
    facets = [[]]
    for i in range(1, d + 1):
        facets = [f + [s] for f in facets for s in (i, -i)]
    return SimplicialComplex(facets)


# --- f/h vectors -------------------------------------------------------------

def h_from_f(f, d: int) -> list:
    """``h_j = sum_i (-1)**(j-i) binom(d-i, j-i) f_{i-1}`` for ``j < len(f)``."""
    return [
        normalize(sum((-1) ** (j - i) * binom(d - i, j - i) * f[i] for i in range(j + 1)))
        for j in range(len(f))
    ]


def f_from_h(h, d: int) -> list:
    """Inverse transform ``f_{j-1} = sum_i binom(d-i, j-i) h_i``."""
    return [
        normalize(sum(binom(d - i, j - i) * h[i] for i in range(j + 1)))
        for j in range(len(h))
    ]


@dataclass(frozen=True)
class FHVectors:
    """Face vector ``f = (f_{-1}, ..., )`` and h-vector of the same length.

    A non-formal vector has ``f_{-1} = 1`` and exactly ``d + 1`` entries. A
    formal one may carry any empty-face entry and extra slots beyond the
    dimension; the transform is applied linearly either way.
    """

    f: tuple
    h: tuple
    d: int
    formal: bool = False

    def __post_init__(self):
        f = tuple(to_rational(x) for x in self.f)
        h = tuple(to_rational(x) for x in self.h)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "h", h)
        if len(f) != len(h):
            raise DomainError("f and h must have the same length")
        if not self.formal:
            if len(f) != self.d + 1:
                raise DomainError(f"expected {self.d + 1} entries for d = {self.d}, got {len(f)}")
            if f[0] != 1:
                raise DomainError("a non-formal f-vector has f_{-1} = 1")
        if list(h) != h_from_f(f, self.d):
            raise DomainError("h is not the transform of f")

    @classmethod
    def from_f(cls, f, d: int = None, formal: bool = False) -> "FHVectors":
        f = [to_rational(x) for x in f]
        if d is None:
            d = len(f) - 1
        return cls(tuple(f), tuple(h_from_f(f, d)), d, formal)

    @classmethod
    def from_h(cls, h, d: int = None, formal: bool = False) -> "FHVectors":
        h = [to_rational(x) for x in h]
        if d is None:
            d = len(h) - 1
        f = f_from_h(h, d)
        return cls(tuple(f), tuple(h), d, formal)

    def f_poly(self) -> Polynomial:
        """``sum f_{i-1} t**i``."""
        return Polynomial(self.f)

    def h_poly(self) -> Polynomial:
        return Polynomial(self.h)

    def to_json(self) -> dict:
        return {
            "f": [rational_str(x) for x in self.f],
            "h": [rational_str(x) for x in self.h],
            "d": self.d,
            "formal": self.formal,
        }


def _face_counts(K: SimplicialComplex, length: int) -> list:
    counts = [0] * length
    for face in K.faces():
        counts[len(face)] += 1
    return counts


def f_vector(K: SimplicialComplex, d: int = None) -> FHVectors:
    """f- and h-vector of ``K``. Passing ``d`` larger than ``K.d`` pads with zeros
    (the h-vector then refers to that ``d``)."""
    if d is None:
        d = K.d
    if d < K.d:
        raise DomainError(f"d = {d} is smaller than the complex's d = {K.d}")
    f = _face_counts(K, d + 1)
    return FHVectors(tuple(f), tuple(h_from_f(f, d)), d)


def link(K: SimplicialComplex, F) -> SimplicialComplex:
    """``{G : F | G in K, F & G empty}``."""
    F = frozenset(F)
    containing = [facet - F for facet in K.facets if F <= facet]
    if not containing:
        raise DomainError(f"{sorted(F, key=_sort_key)} is not a face of the complex")
    return SimplicialComplex(containing)


def star(K: SimplicialComplex, F) -> SimplicialComplex:
    F = frozenset(F)
    containing = [facet for facet in K.facets if F <= facet]
    if not containing:
        raise DomainError(f"{sorted(F, key=_sort_key)} is not a face of the complex")
    return SimplicialComplex(containing)


# --- link identities ---------------------------------------------------------

def _poly_list(p, length):
    out = list(p) + [0] * (length - len(p))
    return out[:length]


def _first_mismatch(lhs, rhs):
    n = max(len(lhs), len(rhs))
    a, b = _poly_list(lhs, n), _poly_list(rhs, n)
    for i in range(n):
        if a[i] != b[i]:
            return {"index": i, "lhs": rational_str(a[i]), "rhs": rational_str(b[i])}
    return None


def verify_link_f_identity(K: SimplicialComplex, ks: Iterable[int] = None) -> dict:
    """Compare ``sum_{|F| = k} f_{lk F}(t)`` with ``f_K^{(k)}(t) / k!`` for each ``k``.

    Report: ``{"holds": bool, "checks": [{"k", "holds", "first_mismatch"?}, ...]}``.
    """
    d = K.d
    f = _face_counts(K, d + 1)
    faces_by_size = {}
    for face in K.faces():
        faces_by_size.setdefault(len(face), []).append(face)
    if ks is None:
        ks = range(d + 1)
    checks = []
    ok = True
    for k in ks:
        # k-th derivative divided by k!: coefficient j is binom(j+k, k) f_{j+k-1}
        rhs = [binom(j + k, k) * f[j + k] for j in range(d + 1 - k)]
        lhs = [0] * max(d + 1 - k, 0)
        for face in faces_by_size.get(k, []):
            lk = link(K, face)
            for j, c in enumerate(_face_counts(lk, lk.d + 1)):
                if j >= len(lhs):
                    lhs.extend([0] * (j + 1 - len(lhs)))
                lhs[j] += c
        mismatch = _first_mismatch(lhs, rhs)
        entry = {"k": k, "holds": mismatch is None}
        if mismatch is not None:
            entry["first_mismatch"] = mismatch
            ok = False
        checks.append(entry)
    return {"holds": ok, "checks": checks}


def _shifted_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _lin(*terms):
    n = max(len(p) for _, p in terms)
    out = [0] * n
    for c, p in terms:
        for i, x in enumerate(p):
            out[i] += c * x
    return out


def verify_h_link_identity(K: SimplicialComplex) -> dict:
    """Check the vertex-link identities for the h-polynomial of ``K``.

    * ``(1-w) h'(w) = sum_p h_{lk p}(w) - d h(w)``
    * ``(1-w)((1+w) h'(w) - d h(w)) = (1+w) sum_p h_{lk p}(w) - 2d h(w)``
    * ``(v-1)**(d-1) f'(1/(v-1)) = sum_p v**(d-1) h_{lk p}(1/v)`` (as polynomials in ``v``)

    Link h-polynomials are taken with respect to ``d - 1``, which is their
    own ``d`` for pure complexes and the correct formal choice otherwise.
    """
    d = K.d
    fv = f_vector(K)
    h = list(fv.h)
    hprime = [i * h[i] for i in range(1, d + 1)] or [0]
    sum_links = [0] * max(d, 1)
    for p in sorted(K.vertices, key=_sort_key):
        lk = link(K, [p])
        lf = _face_counts(lk, d)
        for j, c in enumerate(h_from_f(lf, d - 1)):
            sum_links[j] += c

    one_minus_w = [1, -1]
    one_plus_w = [1, 1]

    lhs1 = _shifted_mul(one_minus_w, hprime)
    rhs1 = _lin((1, sum_links), (-d, h))
    m1 = _first_mismatch(lhs1, rhs1)

    inner = _lin((1, _shifted_mul(one_plus_w, hprime)), (-d, h))
    lhs2 = _shifted_mul(one_minus_w, inner)
    rhs2 = _lin((1, _shifted_mul(one_plus_w, sum_links)), (-2 * d, h))
    m2 = _first_mismatch(lhs2, rhs2)

    # (v-1)**(d-1) f'(1/(v-1)) = sum_{i>=1} i f_{i-1} (v-1)**(d-i)
    lhs3 = [0] * max(d, 1)
    f = fv.f
    for i in range(1, d + 1):
        if f[i]:
            e = d - i
            for j in range(e + 1):
                lhs3[j] += i * f[i] * binom(e, j) * (-1) ** (e - j)
    rhs3 = list(reversed(_poly_list(sum_links, d))) if d else [0]
    m3 = _first_mismatch(lhs3, rhs3)

    report = {
        "holds": m1 is None and m2 is None and m3 is None,
        "derivative_identity": m1 is None,
        "local_global_identity": m2 is None,
        "f_derivative_identity": m3 is None,
    }
    for key, m in (("derivative_identity", m1), ("local_global_identity", m2), ("f_derivative_identity", m3)):
        if m is not None:
            report.setdefault("first_mismatch", {"identity": key, **m})
    return report


# --- realizability and the auxiliary decomposition ----------------------------

def fhex_realizable(f: FHVectors) -> bool:
    """True iff ``f_i >= binom(d, i+1)`` for ``0 <= i <= d-1``; these are exactly
    the f-vectors of ``(d-1)``-dimensional simplicial posets."""
    if f.formal or f.f[0] != 1:
        raise DomainError("realizability is defined for non-formal f-vectors")
    if any(not isinstance(x, int) for x in f.f):
        raise DomainError("realizability needs integer face numbers")
    d = f.d
    return all(f.f[i + 1] >= binom(d, i + 1) for i in range(d))


def fhex_slots(f, d: int) -> list:
    """Per-slot bound check ``f_i >= binom(d, i+1)`` on the nonnegative-index
    slots within the dimension; ``f`` starts at ``f_{-1}``."""
    out = []
    for i in range(d):
        val = f[i + 1] if i + 1 < len(f) else 0
        out.append(val >= binom(d, i + 1))
    return out


@dataclass(frozen=True)
class AuxDecomposition:
    """Two formal f-vectors of dimension ``d - r - 2`` whose h-vectors recombine
    to ``r * gamma_r`` of ``B(u) = sum b_k u**k``.

    part1: ``r gamma_r = h_r(P) - f_{r-1}(P) - d h_{r-1}(Q) + correction``
    part2: ``r gamma_r = -h_{r-1}(R) - d h_{r-1}(S) + correction``

    The correction holds the constant from the empty face together with the
    ``k = r`` term ``r b_r`` that the completed sums do not cover.
    """

    first: FHVectors
    second: FHVectors
    correction: object
    variant: str
    r: int
    d: int

    def recombine(self):
        r, d = self.r, self.d
        if self.variant == "part1":
            val = self.first.h[r] - self.first.f[r] - d * self.second.h[r - 1]
        else:
            val = -self.first.h[r - 1] - d * self.second.h[r - 1]
        return normalize(val + self.correction)

    def realizability(self) -> dict:
        dd = self.d - self.r - 1
        return {
            "first": all(fhex_slots(self.first.f, dd)),
            "second": all(fhex_slots(self.second.f, dd)),
        }

    def to_json(self) -> dict:
        names = ("P", "Q") if self.variant == "part1" else ("R", "S")
        return {
            "variant": self.variant,
            "r": self.r,
            "d": self.d,
            names[0]: self.first.to_json(),
            names[1]: self.second.to_json(),
            "correction": rational_str(self.correction),
            "r_gamma_r": rational_str(self.recombine()),
            "realizable": self.realizability(),
        }


def gamauxpo_decompose(b, d: int, r: int, variant: str = "part1") -> AuxDecomposition:
    """Decompose ``r * gamma_r`` of ``B = sum b_k u**k`` (formal degree ``d``)
    into h-vector data of two auxiliary ``(d-r-2)``-dimensional f-vectors.

    part1: ``P`` has ``f_{k-1} = k b_k`` (``1 <= k <= r-1``), ``f_{-1} = 1`` and
    its top slot ``f_{r-1}`` at the realizability bound ``binom(d-r-1, r)``
    (the slot cancels). ``Q`` has ``f_{k-1} = b_k`` for ``0 <= k <= r-1``, so its
    empty-face slot carries ``b_0``.

    part2: ``R`` has ``f_{k-1} = k (d-2r) b_k / (r-k)``, which requires
    ``(r-k) | k b_k``; ``S`` is ``Q`` from part1.
    """
    from .bounds import ftypesum_gamma, check_r_range

    b = [to_rational(x) for x in b]
    check_r_range(d, r)
    b = b + [0] * (d + 1 - len(b))
    dd = d - r - 1  # the auxiliary complexes have d' = dim + 1 = d - r - 1
    length = max(dd + 1, r + 1)

    second = [0] * length
    for k in range(r):
        second[k] = b[k]

    if variant == "part1":
        first = [0] * length
        first[0] = 1
        for k in range(1, r):
            first[k] = k * b[k]
        first[r] = binom(dd, r)
        correction = -(-1) ** r * binom(dd, r) + r * b[r]
    elif variant == "part2":
        first = [0] * length
        first[0] = 1
        for k in range(1, r):
            if not isinstance(b[k], int) or (k * b[k]) % (r - k):
                raise DomainError(
                    f"part2 needs (r-k) | k*b_k: k={k}, r-k={r - k}, b_k={rational_str(b[k])}",
                )
            first[k] = normalize(Fraction(k * (d - 2 * r) * b[k], r - k))
        correction = -(-1) ** r * binom(dd, r - 1) + r * b[r]
    else:
        raise DomainError(f"unknown variant {variant!r}")

    dec = AuxDecomposition(
        FHVectors.from_f(first, dd, formal=True),
        FHVectors.from_f(second, dd, formal=True),
        normalize(correction),
        variant,
        r,
        d,
    )
    expected = r * ftypesum_gamma(b, d, r)
    if dec.recombine() != expected:
        raise AssertionError(
            f"auxiliary decomposition recombines to {dec.recombine()}, expected {expected}"
        )
    return dec
