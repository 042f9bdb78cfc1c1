import io
import json
import subprocess
import sys

import pytest

from gammavec import cli
from gammavec.suites import SUITES, run_suite

TRIANGLE = {"facets": [["1", "2"], ["1", "3"], ["2", "3"]]}

# (argv, input document, expected exit code)
EXAMPLES = [
    (["gamma"], {"coeffs": ["1", "4", "1"], "formal_degree": 2}, 0),
    (["gamma", "--order", "3", "--diagnostic-printed-formulas"], {"coeffs": ["3", "3", "1"], "formal_degree": 2}, 0),
    (["gamma-matrix", "--order", "1"], {"formal_degree": 2, "coeffs": ["1", "4", "1"]}, 0),
    (["inverse"], {"entries": ["1", "2"], "formal_degree": 2, "extended": False}, 0),
    (["classify-shift"], {"a": ["1", "1", "1"], "d": 2, "r": 1}, 0),
    (["classify-shift", "--diagnostic-printed-formulas"], {"a": ["1", "1", "0", "0", "100"], "d": 4, "r": 2}, 2),
    (["classify-bounds"], {"b": ["1", "-1", "1", "-1", "1"], "d": 4, "r": 1}, 0),
    (["classify-bounds", "--diagnostic-printed-formulas"], {"b": ["3", "3", "1"], "d": 2, "r": 1}, 0),
    (["classify-bounds"], {"seq": ["1", "2", "3"], "monotonicity": "increasing"}, 0),
    (["volume-gamma"], {"a": ["1", "5", "25", "125", "625"], "d": 4, "upper_bound": "6"}, 0),
    (["classify-volume"], {"rho": "5", "a0_sign": 1, "d": 4, "r": 2}, 0),
    (["classify-volume", "--diagnostic-printed-formulas"], {"a": ["3", "2", "0", "0", "0"], "d": 4, "r": 2}, 0),
    (["simplicial-verify"], dict(TRIANGLE, face=["1"]), 0),
    (["fh-transform"], {"f": ["1", "4", "6", "4"]}, 0),
    (["fh-transform"], {"h": ["2", "1/2"], "formal": True}, 0),
    (["realizable"], {"f": ["1", "3", "3"]}, 0),
    (["decompose-aux"], {"b": ["3", "3", "1"], "d": 2, "r": 1}, 0),
    (["decompose-aux", "--variant", "part2"], {"b": ["1", "2", "2", "9", "0", "0", "0", "0", "0"], "d": 8, "r": 3}, 0),
    (["verify-identities"], TRIANGLE, 0),
]


def run(argv, doc=None, text=None):
    out, err = io.StringIO(), io.StringIO()
    stdin = io.StringIO(text if text is not None else json.dumps(doc))
    code = cli.main(argv, stdin=stdin, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_spec_examples():
    code, out, _ = run(["gamma"], {"coeffs": ["1", "4", "1"], "formal_degree": 2})
    assert code == 0
    doc = json.loads(out)
    assert doc["entries"] == ["1", "2"] and doc["extended"] is False
    code, out, _ = run(["verify-identities"], TRIANGLE)
    assert code == 0 and json.loads(out) == {"f_identity": True, "h_identity": True}
    code, out, err = run(["gamma"], {"coeffs": ["1", "4"]})
    assert code == 1 and out == "" and "error" in json.loads(err)


@pytest.mark.parametrize("argv,doc,expected", EXAMPLES)
def test_verbs(argv, doc, expected):
    code, out, err = run(argv, doc)
    assert code == expected, err
    json.loads(out)


def test_outputs_use_rational_strings():
    _, out, _ = run(["gamma", "--order", "2"], {"coeffs": ["1/2", "1", "0"], "formal_degree": 2})
    assert json.loads(out)["entries"] == ["1/2", "0", "-1/2"]


def test_input_errors():
    assert run(["gamma"], text="{not json")[0] == 1
    assert run(["gamma"], {"coeffs": [1.5], "formal_degree": 0})[0] == 1
    assert run(["classify-shift"], {"a": ["1", "1", "1"], "d": 2, "r": 5})[0] == 1
    assert run(["classify-shift"], {"a": ["1", "-1", "1"], "d": 2, "r": 1})[0] == 1
    assert run(["decompose-aux", "--variant", "part2"], {"b": ["1", "1", "1", "1", "0", "0", "0", "0", "0"], "d": 8, "r": 3})[0] == 1
    assert run(["realizable"], {"f": ["1", "1/2", "0"]})[0] == 1
    code, _, err = run(["frobnicate"], {})
    assert code == 1 and "usage" in err
    assert run(["verify", "nosuch"])[0] == 1


def test_input_file(tmp_path):
    p = tmp_path / "in.json"
    p.write_text(json.dumps({"coeffs": ["1", "4", "1"], "formal_degree": 2}))
    code, out, _ = run(["gamma", "--input", str(p)], text="")
    assert code == 0 and json.loads(out)["entries"] == ["1", "2"]
    assert run(["gamma", "--input", str(tmp_path / "missing.json")], text="")[0] == 1


def test_verify_suites_exit_codes():
    code, out, _ = run(["verify", "catalan", "--trials", "0"])
    assert code == 0 and json.loads(out)["checks"] == 0
    code, out, _ = run(["verify", "agreement", "--seed", "7", "--trials", "50"])
    assert code == 0 and json.loads(out)["violations"] == 0
    code, out, _ = run(["verify", "boundgam", "--trials", "5", "--diagnostic-printed-formulas"])
    assert code == 2
    first = json.loads(out)["first_counterexample"]
    assert first["ftypesum"] == "-6" and first["oracle"] == "-3"


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_every_suite_clean_by_default(suite):
    rep = run_suite(suite, seed=3, trials=40)
    assert rep["violations"] == 0, rep["first_counterexample"]
    assert rep["checks"] > 0


def test_determinism():
    for argv, doc, _ in EXAMPLES:
        assert run(argv, doc) == run(argv, doc)
    a = run(["verify", "volume", "--seed", "5", "--trials", "20", "--diagnostic-printed-formulas"])
    b = run(["verify", "volume", "--seed", "5", "--trials", "20", "--diagnostic-printed-formulas"])
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gammavec", "gamma"],
        input=json.dumps({"coeffs": ["1", "4", "1"], "formal_degree": 2}),
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"entries":["1","2"],"extended":false,"formal_degree":2}\n'


LIBRARY_OPS = {
    "exact_series": ["reciprocal", "translate", "derivative", "expand_binomial_power", "series_divide", "series_compose"],
    "catalan": ["catalan", "catalan_power_coeff", "catalan_convolution_shifted", "catalan_convolution_unshifted",
                "lagrange_coefficient"],
    "gamma_core": ["gamma_by_basis", "gamma_extended", "gamma_catalan_formula", "gamma_derivative_formula",
                   "gamma_matrix", "h_from_gamma"],
    "simplicial": ["f_vector", "link", "verify_link_f_identity", "verify_h_link_identity", "fhex_realizable",
                   "gamauxpo_decompose"],
    "bounds": ["shiftgam_gamma", "shiftgam_classify", "ftypesum_gamma", "alternating_sum_sign", "boundgam_classify"],
    "volume": ["volume_polynomial", "volume_q", "volume_gamma", "constant_ratio_classify", "log_concave_check"],
}


def test_every_library_operation_reachable_from_cli():
    import importlib

    targets = {}
    for mod, names in LIBRARY_OPS.items():
        m = importlib.import_module(f"gammavec.{mod}")
        for name in names:
            targets[getattr(m, name).__code__] = f"{mod}.{name}"
    seen = set()

    def profiler(frame, event, arg):
        if event == "call" and frame.f_code in targets:
            seen.add(targets[frame.f_code])

    sys.setprofile(profiler)
    try:
        for argv, doc, _ in EXAMPLES:
            run(argv, doc)
        for suite in SUITES:
            run(["verify", suite, "--trials", "3"])
    finally:
        sys.setprofile(None)
    assert set(targets.values()) - seen == set()
