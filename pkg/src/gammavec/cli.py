"""Command-line front end: one JSON document in, one JSON document out.

Exit status is 0 on success, 1 on malformed input (error JSON on stderr) and
2 when a classification is unknown or a verification finds a mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, gamma_core, simplicial, suites, volume
from .errors import DomainError
from .exact_series import Polynomial, rational_str, to_rational

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2


class InputError(Exception):
    pass


def _need(doc, *keys):
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise InputError(f"missing field(s): {', '.join(missing)}")
    return [doc[k] for k in keys]


def _int(x, name):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f'"{name}" must be an integer')
    return x


def _seq(x, name):
    if not isinstance(x, list):
        raise InputError(f'"{name}" must be a list')
    return [to_rational(v) for v in x]


def _strs(xs):
    return [rational_str(x) for x in xs]


# --- verbs ---------------------------------------------------------------------
# Each handler returns (result_json, exit_code).

def cmd_gamma(doc, opts):
    h = Polynomial.from_json(doc)
    g = gamma_core.gamma_vector(h, opts.order)
    out = g.to_json()
    if opts.printed:
        out["printed_catalan_entries"] = [
            rational_str(gamma_core.gamma_catalan_formula(h, m, printed=True))
            for m in range(g.order + 1)
        ]
    return out, EXIT_OK


def cmd_gamma_matrix(doc, opts):
    n = _int(_need(doc, "formal_degree")[0], "formal_degree")
    M = opts.order if opts.order is not None else doc.get("order", n)
    mat = gamma_core.gamma_matrix(n, _int(M, "order"), printed=opts.printed)
    out = mat.to_json()
    if "coeffs" in doc:
        out["applied"] = _strs(mat.apply(Polynomial.from_json(doc)))
    return out, EXIT_OK


def cmd_inverse(doc, opts):
    return gamma_core.h_from_gamma(gamma_core.GammaVector.from_json(doc)).to_json(), EXIT_OK


def _claim_exit(claim):
    return EXIT_OK if claim.known else EXIT_FAIL


def cmd_classify_shift(doc, opts):
    a, d, r = _need(doc, "a", "d", "r")
    a, d, r = _seq(a, "a"), _int(d, "d"), _int(r, "r")
    claim = bounds.shiftgam_classify(a, d, r)
    out = claim.to_json()
    if opts.printed:
        out["printed_claims_nonpositive"] = bounds.printed_shiftgam_claims_nonpositive(a, d, r)
    return out, _claim_exit(claim)


def cmd_classify_bounds(doc, opts):
    if isinstance(doc, dict) and "seq" in doc:
        seq, mono = _need(doc, "seq", "monotonicity")
        claim = bounds.alternating_sum_sign(_seq(seq, "seq"), mono, _int(doc.get("start", 0), "start"))
        return claim.to_json(), _claim_exit(claim)
    b, d, r = _need(doc, "b", "d", "r")
    b, d, r = _seq(b, "b"), _int(d, "d"), _int(r, "r")
    claim = bounds.boundgam_classify(b, d, r)
    out = claim.to_json()
    out["ftypesum"] = rational_str(bounds.ftypesum_gamma(b, d, r, printed=opts.printed))
    return out, _claim_exit(claim)


def cmd_volume_gamma(doc, opts):
    s = volume.IntersectionSequence.from_json(doc)
    rs = [_int(doc["r"], "r")] if "r" in doc else list(range(1, s.d // 2 + 1))
    out = {
        "volume_polynomial": volume.volume_polynomial(s).to_json(),
        "q": volume.volume_q(s).to_json()["q"],
        "gamma": {str(r): rational_str(volume.volume_gamma(s, r)) for r in rs},
        "log_concave": volume.log_concave_check(s.a, doc.get("upper_bound"), doc.get("lower_bound")),
    }
    return out, EXIT_OK


def cmd_classify_volume(doc, opts):
    if isinstance(doc, dict) and "rho" in doc:
        rho, a0, d, r = _need(doc, "rho", "a0_sign", "d", "r")
        claim = volume.constant_ratio_classify(to_rational(rho), _int(a0, "a0_sign"), _int(d, "d"), _int(r, "r"))
        return claim.to_json(), _claim_exit(claim)
    s = volume.IntersectionSequence.from_json(doc)
    claim = volume.volbd_classify(s, _int(_need(doc, "r")[0], "r"))
    out = claim.to_json()
    if opts.printed:
        out["printed_part2"] = volume.printed_volbd_part2(s, claim.r)
        out["printed_part3"] = volume.printed_volbd_part3(s)
    return out, _claim_exit(claim)


def _complex(doc):
    return simplicial.SimplicialComplex.from_json(doc)


def cmd_simplicial_verify(doc, opts):
    K = _complex(doc)
    out = {
        "vectors": simplicial.f_vector(K).to_json(),
        "link_f_identity": simplicial.verify_link_f_identity(K),
        "h_link_identity": simplicial.verify_h_link_identity(K),
    }
    if "face" in doc:
        face = [str(v) for v in doc["face"]]
        out["link"] = simplicial.link(K, face).to_json()
    ok = out["link_f_identity"]["holds"] and out["h_link_identity"]["holds"]
    return out, EXIT_OK if ok else EXIT_FAIL


def cmd_verify_identities(doc, opts):
    K = _complex(doc)
    f_ok = simplicial.verify_link_f_identity(K)["holds"]
    h_ok = simplicial.verify_h_link_identity(K)["holds"]
    return {"f_identity": f_ok, "h_identity": h_ok}, EXIT_OK if f_ok and h_ok else EXIT_FAIL


def _fh(doc):
    formal = doc.get("formal", False) if isinstance(doc, dict) else False
    if not isinstance(formal, bool):
        raise InputError('"formal" must be a boolean')
    d = doc.get("d") if isinstance(doc, dict) else None
    if d is not None:
        _int(d, "d")
    if isinstance(doc, dict) and "f" in doc:
        return simplicial.FHVectors.from_f(_seq(doc["f"], "f"), d, formal)
    if isinstance(doc, dict) and "h" in doc:
        return simplicial.FHVectors.from_h(_seq(doc["h"], "h"), d, formal)
    raise InputError('input needs "f" or "h"')


def cmd_fh_transform(doc, opts):
    return _fh(doc).to_json(), EXIT_OK


def cmd_realizable(doc, opts):
    fh = _fh(doc)
    return {
        "realizable": simplicial.fhex_realizable(fh),
        "slots": simplicial.fhex_slots(fh.f, fh.d),
    }, EXIT_OK


def cmd_decompose_aux(doc, opts):
    b, d, r = _need(doc, "b", "d", "r")
    dec = simplicial.gamauxpo_decompose(_seq(b, "b"), _int(d, "d"), _int(r, "r"), opts.variant)
    return dec.to_json(), EXIT_OK


VERBS = {
    "gamma": cmd_gamma,
    "gamma-matrix": cmd_gamma_matrix,
    "inverse": cmd_inverse,
    "classify-shift": cmd_classify_shift,
    "classify-bounds": cmd_classify_bounds,
    "volume-gamma": cmd_volume_gamma,
    "classify-volume": cmd_classify_volume,
    "simplicial-verify": cmd_simplicial_verify,
    "fh-transform": cmd_fh_transform,
    "realizable": cmd_realizable,
    "decompose-aux": cmd_decompose_aux,
    "verify-identities": cmd_verify_identities,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gammavec",
        description="Exact gamma vectors, sign classifications and identity checks.",
    )
    p.add_argument("verb", help=f"one of: {', '.join(list(VERBS) + ['verify'])}")
    p.add_argument("suite", nargs="?", help="suite name for the verify verb")
    p.add_argument("--input", default="-", help="JSON input file, or - for stdin (default)")
    p.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--order", type=int, default=None, help="truncation order for extended gamma")
    p.add_argument("--variant", choices=("part1", "part2"), default="part1")
    p.add_argument("--diagnostic-printed-formulas", dest="printed", action="store_true",
                   help="use the uncorrected published formulas and hypotheses")
    return p


def _emit(obj, stream):
    stream.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _read_input(path, stdin):
    try:
        text = stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    if opts.verb == "verify":
        if opts.suite not in suites.SUITES:
            _emit({"error": f"unknown suite {opts.suite!r}", "suites": sorted(suites.SUITES)}, stderr)
            return EXIT_INPUT
        if opts.trials < 0:
            _emit({"error": "--trials must be nonnegative"}, stderr)
            return EXIT_INPUT
        report = suites.run_suite(opts.suite, opts.seed, opts.trials, opts.printed)
        _emit(report, stdout)
        return EXIT_OK if report["violations"] == 0 else EXIT_FAIL

    handler = VERBS.get(opts.verb)
    if handler is None:
        stderr.write(parser.format_usage())
        _emit({"error": f"unknown verb {opts.verb!r}"}, stderr)
        return EXIT_INPUT
    try:
        doc = _read_input(opts.input, stdin)
        out, code = handler(doc, opts)
    except (InputError, DomainError, IndexError, TypeError, KeyError) as exc:
        _emit({"error": str(exc), "type": type(exc).__name__}, stderr)
        return EXIT_INPUT
    _emit(out, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
