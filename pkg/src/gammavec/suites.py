"""Seeded randomized verification suites.

A suite is a list of properties. Each property draws its own random input
from the shared generator and yields ``None`` for every passing check or a
counterexample dict for a failing one; a property whose hypothesis does not
apply to the draw yields nothing. Reports are plain JSON-ready dicts, so
identical seeds give identical reports.
"""

from __future__ import annotations

import math
import random
from itertools import combinations
from fractions import Fraction

from .bounds import (
    boundgam_classify,
    ftypesum_gamma,
    printed_shiftgam_ratio_hypothesis,
    shiftgam_classify,
    shiftgam_gamma,
)
from .catalan import (
    catalan,
    catalan_convolution_shifted,
    catalan_convolution_unshifted,
    catalan_power_coeff,
    lagrange_coefficient,
    shifted_catalan_series,
)
from .exact_series import Polynomial, binom, poly_mul, rational_str, reciprocal, sign, translate
from .gamma_core import (
    gamma_by_basis,
    gamma_catalan_formula,
    gamma_derivative_formula,
    gamma_extended,
    gamma_matrix,
    h_from_gamma,
)
from .simplicial import (
    FHVectors,
    SimplicialComplex,
    f_vector,
    fhex_realizable,
    gamauxpo_decompose,
    verify_h_link_identity,
    verify_link_f_identity,
)
from .volume import (
    IntersectionSequence,
    constant_ratio_classify,
    printed_volbd_part2,
    printed_volbd_part3,
    volbd_classify,
    volume_gamma,
    volume_polynomial,
)

DEFAULT_SEED = 20240601


def _s(xs):
    return [rational_str(x) for x in xs]


def _bad(**kw):
    return {k: (rational_str(v) if isinstance(v, (int, Fraction)) and not isinstance(v, bool) else v) for k, v in kw.items()}


# --- oracles ------------------------------------------------------------------

def series_power(coeffs, e, order):
    out = [1] + [0] * order
    for _ in range(e):
        out = poly_mul(out, coeffs, order)
    return out


def compositions(n, k):
    """All compositions of ``n`` into ``k`` positive parts, as cut points in ``1..n-1``."""
    if k <= 0:
        if n == 0 and k == 0:
            yield ()
        return
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[j + 1] - bounds[j] for j in range(k))


def fixed_point_series(G, order):
    """``f = x G(f)`` by Picard iteration; each pass fixes one more coefficient."""
    f = [0] * (order + 1)
    for _ in range(order + 1):
        acc = [0] * (order + 1)
        for c in reversed(G):
            acc = poly_mul(acc, f, order)
            acc[0] += c
        f = [0] + acc[:order]
    return f


# --- random inputs ------------------------------------------------------------

def random_poly(rng, max_n, reciprocal_only=False):
    n = rng.randint(0, max_n)
    h = [rng.randint(-9, 9) for _ in range(n + 1)]
    if reciprocal_only or rng.random() < 0.5:
        for i in range(n // 2 + 1):
            h[n - i] = h[i]
    return Polynomial(h, n)


def random_nonneg(rng, length):
    scale = rng.choice([1, 3, 10, 100])
    return [rng.randint(0, scale) * (rng.random() < 0.8) for _ in range(length)]


def random_b(rng, d):
    kind = rng.randrange(5)
    if kind == 0:
        return sorted((rng.randint(0, 30) for _ in range(d + 1)), reverse=True)
    if kind == 1:
        return sorted(rng.randint(0, 30) for _ in range(d + 1))
    if kind == 2:
        return [(-1) ** k * rng.randint(1, 9) for k in range(d + 1)]
    if kind == 3:
        base = rng.randint(1, 5)
        return [rng.randint(1, 3) * base ** k for k in range(d + 1)]
    return [rng.randint(-9, 9) for _ in range(d + 1)]


def random_complex(rng, max_vertices=7):
    nv = rng.randint(1, max_vertices)
    verts = list(range(1, nv + 1))
    facets = []
    for _ in range(rng.randint(1, 6)):
        size = rng.randint(1, nv)
        facets.append(rng.sample(verts, size))
    return SimplicialComplex(facets)


# --- agreement ------------------------------------------------------------------

def prop_gamma_agreement(rng, printed=False):
    h = random_poly(rng, 20)
    n = h.formal_degree
    ext = gamma_extended(h, n).entries
    rows = gamma_matrix(n, n, printed=printed).apply(h)
    for m in range(n + 1):
        cat = gamma_catalan_formula(h, m, printed=printed)
        if not ext[m] == cat == rows[m]:
            yield _bad(h=_s(h.coeffs), m=m, extended=ext[m], catalan=cat, matrix=rows[m])
            return
        if 1 <= m and 2 * m <= n + 1:
            der = gamma_derivative_formula(h, m)
            if der != ext[m]:
                yield _bad(h=_s(h.coeffs), m=m, extended=ext[m], derivative=der)
                return
        yield None
    if h.is_reciprocal():
        basis = gamma_by_basis(h).entries
        yield None if list(basis) == list(ext[: n // 2 + 1]) else _bad(h=_s(h.coeffs), basis=_s(basis), extended=_s(ext))


def prop_reciprocal_round_trip(rng, printed=False):
    h = random_poly(rng, 24, reciprocal_only=True)
    n = h.formal_degree
    g = gamma_by_basis(h)
    back = h_from_gamma(g)
    yield None if back == h else _bad(h=_s(h.coeffs), back=_s(back.coeffs))
    ext = gamma_extended(h, n).entries
    yield None if not any(ext[n // 2 + 1:]) else _bad(h=_s(h.coeffs), tail=_s(ext[n // 2 + 1:]))


# --- catalan and lagrange ---------------------------------------------------

def catalan_power_mismatches(max_m, printed=False):
    """m-major scan of the closed form for ``[u**m] Ct**i`` against series powers."""
    ct = shifted_catalan_series(max_m)
    for m in range(1, max_m + 1):
        for i in range(1, m + 1):
            oracle = series_power(ct, i, max_m)[m]
            got = catalan_power_coeff(i, m, printed=printed)
            yield (i, m, got, oracle)


def prop_catalan(rng, printed=False):
    m = rng.randint(1, 20)
    i = rng.randint(1, m)
    oracle = series_power(shifted_catalan_series(m), i, m)[m]
    got = catalan_power_coeff(i, m, printed=printed)
    yield None if got == oracle else _bad(i=i, m=m, closed_form=got, oracle=oracle)
    n = rng.randint(1, 12)
    k = rng.randint(1, n)
    brute = sum(math.prod(catalan(p - 1) for p in comp) for comp in compositions(n, k))
    got = catalan_convolution_shifted(k, n)
    yield None if got == brute else _bad(k=k, n=n, closed_form=got, oracle=brute)
    mm = rng.randint(1, 10)
    nn = rng.randint(0, 20)
    oracle = series_power([catalan(j) for j in range(nn + 1)], mm, nn)[nn]
    for form in ("product", "binomial", "unified"):
        got = catalan_convolution_unshifted(mm, nn, form)
        yield None if got == oracle else _bad(m=mm, n=nn, form=form, closed_form=got, oracle=oracle)


def prop_lagrange(rng, printed=False):
    n = rng.randint(1, 25)
    k = rng.randint(1, n)
    if rng.random() < 0.5:
        G = [1, 2, 1]
    else:
        G = [rng.choice([-2, -1, 1, 2, 3])] + [rng.randint(-3, 3) for _ in range(rng.randint(0, 3))]
    f = fixed_point_series(G, n)
    oracle = series_power(f, k, n)[n]
    got = lagrange_coefficient(Polynomial(G), k, n)
    yield None if got == oracle else _bad(G=_s(G), k=k, n=n, lagrange=got, oracle=oracle)


def prop_catalan_functional_equation(rng, printed=False):
    order = rng.randint(1, 40)
    ct = shifted_catalan_series(order)
    sq = poly_mul([1] + ct[1:], [1] + ct[1:], order)
    rhs = [0] + sq[:order]
    yield None if rhs == ct else _bad(order=order)


# --- shiftgam -----------------------------------------------------------------

def _shift_draw(rng):
    d = rng.randint(2, 16)
    a = random_nonneg(rng, d + 1)
    r = rng.randint(1, d // 2)
    return a, d, r


def _shifted_b(a, d):
    return translate(reciprocal(Polynomial(a, d)), 1)


def prop_shiftgam_formula(rng, printed=False):
    a, d, r = _shift_draw(rng)
    oracle = gamma_extended(_shifted_b(a, d), r)[r]
    got = shiftgam_gamma(a, d, r)
    yield None if got == oracle else _bad(a=_s(a), d=d, r=r, closed_sum=got, oracle=oracle)


def prop_shiftgam_odd(rng, printed=False):
    a, d, r = _shift_draw(rng)
    for rr in range(1, d // 2 + 1, 2):
        g = shiftgam_gamma(a, d, rr)
        yield None if g <= 0 else _bad(a=_s(a), d=d, r=rr, gamma=g)


def prop_shiftgam_classifier(rng, printed=False):
    a, d, r = _shift_draw(rng)
    claim = shiftgam_classify(a, d, r)  # constructor enforces the witness
    yield None if (r % 2 == 0 or claim.known) else _bad(a=_s(a), d=d, r=r, reason="odd r left unknown")


def prop_printed_shiftgam_half(rng, printed=False):
    """γ_{d/2} <= 0 as originally claimed (false when d/2 is even)."""
    d = 2 * rng.randint(1, 8)
    a = random_nonneg(rng, d + 1)
    g = shiftgam_gamma(a, d, d // 2)
    yield None if g <= 0 else _bad(a=_s(a), d=d, r=d // 2, gamma=g)


def prop_printed_shiftgam_ratio(rng, printed=False):
    """Even r: γ_r <= 0 whenever the printed ratio hypothesis holds."""
    a, d, r = _shift_draw(rng)
    if r % 2 or not printed_shiftgam_ratio_hypothesis(a, d, r):
        return
    g = shiftgam_gamma(a, d, r)
    yield None if g <= 0 else _bad(a=_s(a), d=d, r=r, gamma=g)


# --- boundgam -----------------------------------------------------------------

def _b_draw(rng, max_d=20):
    d = rng.randint(2, max_d)
    return random_b(rng, d), d, rng.randint(1, d // 2)


def prop_ftypesum(rng, printed=False):
    b, d, r = _b_draw(rng)
    h = Polynomial(b, d)
    oracle = gamma_derivative_formula(h, r)
    ext = gamma_extended(h, r)[r]
    got = ftypesum_gamma(b, d, r, printed=printed)
    yield None if got == oracle == ext else _bad(b=_s(b), d=d, r=r, ftypesum=got, oracle=oracle)


def prop_boundgam_part1(rng, printed=False):
    d = rng.randint(2, 20)
    b = [(-1) ** k * rng.randint(1, 20) for k in range(d + 1)]
    for r in range(1, d // 2 + 1):
        g = gamma_derivative_formula(Polynomial(b, d), r)
        yield None if sign(g) == (-1) ** r else _bad(b=_s(b), d=d, r=r, gamma=g)


def prop_boundgam_classifier(rng, printed=False):
    b, d, r = _b_draw(rng)
    claim = boundgam_classify(b, d, r)
    if claim.quantity == "gamma_r":
        ok = claim.witness == gamma_derivative_formula(Polynomial(b, d), r)
        yield None if ok else _bad(b=_s(b), d=d, r=r, reason="witness disagrees with oracle")
    else:
        yield None


# --- volume -------------------------------------------------------------------

def _rand_rational(rng, lo=-9, hi=9):
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))


def prop_volume_formula(rng, printed=False):
    d = rng.randint(2, 16)
    s = IntersectionSequence(tuple(_rand_rational(rng) for _ in range(d + 1)), d)
    r = rng.randint(1, d // 2)
    oracle = gamma_derivative_formula(volume_polynomial(s), r)
    got = volume_gamma(s, r)
    yield None if got == oracle else _bad(a=_s(s.a), d=d, r=r, volume=got, oracle=oracle)
    volbd_classify(s, r)  # constructor enforces the witness
    yield None


def alternating_q_sequence(rng, d):
    """A sequence whose ``q_k`` has sign ``(-1)**k``."""
    a = [_rand_rational(rng)]
    for k in range(d):
        step = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        a.append(a[-1] + (-1) ** k * step)
    return IntersectionSequence(tuple(a), d)


def prop_volbd_part1(rng, printed=False):
    d = rng.randint(2, 16)
    s = alternating_q_sequence(rng, d)
    for r in range(1, d // 2 + 1):
        g = volume_gamma(s, r)
        yield None if sign(g) == (-1) ** (r - 1) else _bad(a=_s(s.a), d=d, r=r, gamma=g)


def decreasing_sequence(rng, d):
    vals = sorted((rng.randint(0, rng.choice([3, 10, 50])) for _ in range(d + 1)), reverse=True)
    return IntersectionSequence(tuple(vals), d)


def prop_volbd_part3_corrected(rng, printed=False):
    d = rng.randint(2, 16)
    s = decreasing_sequence(rng, d)
    for r in range(1, d // 2 + 1):
        claim = volbd_classify(s, r)  # constructor enforces the witness
        yield None


def prop_printed_volbd_part3(rng, printed=False):
    """a nonnegative decreasing gives sgn γ_r = (-1)^r, weakly, as originally claimed."""
    d = rng.randint(2, 16)
    s = decreasing_sequence(rng, d)
    if not printed_volbd_part3(s):
        return
    for r in range(1, d // 2 + 1):
        g = volume_gamma(s, r)
        ok = g * (-1) ** r >= 0
        yield None if ok else _bad(a=_s(s.a), d=d, r=r, gamma=g)


def prop_printed_volbd_part2(rng, printed=False):
    d = rng.randint(2, 16)
    s = IntersectionSequence(tuple(_rand_rational(rng, 0, 9) for _ in range(d + 1)), d)
    r = rng.randint(1, d // 2)
    if not printed_volbd_part2(s, r):
        return
    g = volume_gamma(s, r)
    q0 = s.a[1] - s.a[0]
    yield None if sign(g) == sign(q0) else _bad(a=_s(s.a), d=d, r=r, gamma=g)


CONSTANT_RATIOS = (-3, -1, Fraction(-1, 2), 0, Fraction(1, 100))


def prop_constant_ratio(rng, printed=False):
    d = rng.randint(2, 12)
    for rho in CONSTANT_RATIOS + (d + 1, 2 * d):
        for a0 in (1, -1):
            for r in range(1, d // 2 + 1):
                claim = constant_ratio_classify(rho, a0, d, r)
                yield None if claim.known else _bad(rho=rho, a0=a0, d=d, r=r, reason="unclassified")


# --- simplicial and auxpo -----------------------------------------------------

def prop_link_identities(rng, printed=False):
    K = random_complex(rng)
    f_rep = verify_link_f_identity(K)
    yield None if f_rep["holds"] else _bad(complex=K.to_json(), report=f_rep)
    h_rep = verify_h_link_identity(K)
    yield None if h_rep["holds"] else _bad(complex=K.to_json(), report=h_rep)
    fv = f_vector(K)
    back = FHVectors.from_h(fv.h, fv.d)
    yield None if back.f == fv.f else _bad(complex=K.to_json(), reason="f/h round trip")


def prop_formal_round_trip(rng, printed=False):
    d = rng.randint(0, 10)
    f = [_rand_rational(rng) for _ in range(d + 1)]
    fh = FHVectors.from_f(f, d, formal=True)
    back = FHVectors.from_h(fh.h, d, formal=True)
    yield None if back.f == fh.f else _bad(f=_s(f), d=d)


def prop_auxpo(rng, printed=False):
    d = rng.randint(2, 14)
    r = rng.randint(1, d // 2)
    b = random_b(rng, d)
    dec = gamauxpo_decompose(b, d, r, "part1")
    yield None if dec.recombine() == r * ftypesum_gamma(b, d, r) else _bad(b=_s(b), d=d, r=r, variant="part1")
    b2 = [x * (r - k) if 0 < k < r else x for k, x in enumerate(b)]
    dec = gamauxpo_decompose(b2, d, r, "part2")
    yield None if dec.recombine() == r * ftypesum_gamma(b2, d, r) else _bad(b=_s(b2), d=d, r=r, variant="part2")


def prop_fhex_monotone(rng, printed=False):
    d = rng.randint(1, 8)
    f = [1] + [binom(d, i + 1) + rng.randint(-2, 3) for i in range(d)]
    f = [max(x, 0) for x in f]
    before = fhex_realizable(FHVectors.from_f(f, d))
    i = rng.randint(1, d)
    g = list(f)
    g[i] += rng.randint(1, 3)
    after = fhex_realizable(FHVectors.from_f(g, d))
    yield None if (not before or after) else _bad(f=_s(f), raised=_s(g))


SUITES = {
    "agreement": (prop_gamma_agreement, prop_reciprocal_round_trip),
    "catalan": (prop_catalan, prop_catalan_functional_equation),
    "lagrange": (prop_lagrange,),
    "shiftgam": (prop_shiftgam_formula, prop_shiftgam_odd, prop_shiftgam_classifier),
    "boundgam": (prop_ftypesum, prop_boundgam_part1, prop_boundgam_classifier),
    "volume": (prop_volume_formula, prop_volbd_part1, prop_volbd_part3_corrected, prop_constant_ratio),
    "simplicial": (prop_link_identities, prop_formal_round_trip),
    "auxpo": (prop_auxpo, prop_fhex_monotone),
}

# With the diagnostic flag, suites additionally exercise the published
# (uncorrected) formulas and hypotheses.
PRINTED_EXTRAS = {
    "shiftgam": (prop_printed_shiftgam_half, prop_printed_shiftgam_ratio),
    "volume": (prop_printed_volbd_part3, prop_printed_volbd_part2),
}


def _anchors(name, printed):
    """Deterministic checks run ahead of the random trials."""
    if name == "catalan":
        for i, m, got, oracle in catalan_power_mismatches(10, printed):
            yield None if got == oracle else _bad(i=i, m=m, closed_form=got, oracle=oracle)
    elif name == "boundgam":
        got = ftypesum_gamma([3, 3, 1], 2, 1, printed=printed)
        yield None if got == -3 else _bad(b=["3", "3", "1"], d=2, r=1, ftypesum=got, oracle=-3)


def _results(prop, rng, printed):
    """Results of one trial; a classifier contradicted by its own witness
    raises inside the property and is recorded as a violation."""
    try:
        yield from prop(rng, printed)
    except AssertionError as exc:
        yield {"error": str(exc)}


def run_property(prop, seed: int = DEFAULT_SEED, trials: int = 100, printed: bool = False) -> dict:
    rng = random.Random(seed)
    checks = violations = 0
    first = None
    for t in range(trials):
        for res in _results(prop, rng, printed):
            checks += 1
            if res is not None:
                violations += 1
                if first is None:
                    first = {"trial": t, "property": prop.__name__, **res}
    return {"property": prop.__name__, "seed": seed, "trials": trials, "checks": checks,
            "violations": violations, "first_counterexample": first}


def run_suite(name: str, seed: int = DEFAULT_SEED, trials: int = 100, printed: bool = False) -> dict:
    """Run suite ``name``; ``trials = 0`` is a vacuous pass."""
    if name not in SUITES:
        raise KeyError(name)
    props = SUITES[name] + (PRINTED_EXTRAS.get(name, ()) if printed else ())
    checks = violations = 0
    first = None
    if trials > 0:
        for res in _anchors(name, printed):
            checks += 1
            if res is not None:
                violations += 1
                if first is None:
                    first = {"trial": "anchor", **res}
    rng = random.Random(seed)
    for t in range(trials):
        for prop in props:
            for res in _results(prop, rng, printed):
                checks += 1
                if res is not None:
                    violations += 1
                    if first is None:
                        first = {"trial": t, "property": prop.__name__, **res}
    return {"suite": name, "seed": seed, "trials": trials, "printed": printed, "checks": checks,
            "violations": violations, "first_counterexample": first}
