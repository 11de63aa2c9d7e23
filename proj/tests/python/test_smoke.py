"""Smoke tests for the Python bindings.

These exercise the binding layer end to end; the heavy verification lives
in the C++ suites (run one of them at the end as a sanity check).
"""

import pytest

import wronsk

SIMPLE = """\
bases 1
f1: 1*x^0 + 1*x^1
terms 2
1 : f1^2
-1 :
"""

HIDDEN_ZERO = """\
bases 2
f1: 1*x^0 + 1*x^1
f2: 1*x^0 + 2*x^1 + 1*x^2
terms 2
1 : f1^2
-1 : f2^1
"""


def test_canonical_round_trip():
    text = wronsk.canonical(SIMPLE)
    assert wronsk.canonical(text) == text
    assert "bases 1" in text


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError) as err:
        wronsk.canonical("bases 1\nf1: 1*x^0 +\nterms 1\n1 :\n")
    assert "line 2" in str(err.value)


def test_exact_evaluation():
    assert wronsk.evaluate(SIMPLE, "0") == "0"
    assert wronsk.evaluate(SIMPLE, "1") == "3"
    assert wronsk.evaluate(SIMPLE, "-1/2") == "-3/4"


def test_root_report_counts_and_bounds():
    report = wronsk.root_report(SIMPLE, isolate=True, pit=True)
    assert report["exact_count"] == "2"
    assert report["sound"] is True
    assert len(report["isolating"]) == 2
    assert report["pit_blackbox"]["is_zero"] is False
    assert report["pit_whitebox"]["is_zero"] is False
    for key in ("a_priori_sparse", "a_priori_dense", "certified_upsilon",
                "certified_main3"):
        assert int(report[key]) >= 2


def test_bounds_only_view():
    out = wronsk.bounds(SIMPLE)
    assert int(out["a_priori_dense"]) >= int(out["certified_upsilon"]) >= 1
    assert out["reduced_k"] == "2"


def test_budget_degrades_to_notes_or_raises():
    huge = "bases 1\nf1: 1*x^0 + 1*x^1\nterms 1\n1 : f1^500000\n"
    report = wronsk.root_report(huge)
    assert report["exact_count"] is None
    assert any("too large" in note or "expansion" in note for note in report["notes"])
    with pytest.raises(RuntimeError):
        wronsk.pit_blackbox(SIMPLE, max_queries=1)


def test_pit_verdicts_agree():
    black = wronsk.pit_blackbox(HIDDEN_ZERO)
    white = wronsk.pit_whitebox(HIDDEN_ZERO)
    assert black["is_zero"] is True
    assert black["witness"] is None
    assert white["is_zero"] is True
    assert white["certificate_check"] is True

    nonzero = wronsk.pit_blackbox(SIMPLE)
    assert nonzero["is_zero"] is False
    assert nonzero["witness"] == "1"


def test_wronskian_factored_form():
    out = wronsk.wronskian(SIMPLE, prefix=2)
    assert out["shift"] == "2"
    assert out["leading_coefficient"] != "0"
    assert len(out["power_exponents"]) == 1


def test_generate_kinds():
    text = wronsk.generate("optimal", k=2, p=1)
    report = wronsk.root_report(text)
    assert report["exact_count"] == "6"

    zero = wronsk.generate("zero", k=2, seed=11)
    assert wronsk.pit_blackbox(zero)["is_zero"] is True

    a = wronsk.generate("random", k=3, m=2, seed=5)
    b = wronsk.generate("random", k=3, m=2, seed=5)
    assert a == b

    with pytest.raises(ValueError):
        wronsk.generate("nope")


def test_suite_run():
    names = wronsk.suite_names()
    assert "power-derivative" in names
    result = wronsk.run_suite("power-derivative")
    assert result["passed"] is True
    assert result["cases"] == 200
    with pytest.raises(ValueError):
        wronsk.run_suite("no-such-suite")
