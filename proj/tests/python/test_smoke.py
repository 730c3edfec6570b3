import json

import pytest

import branchcuts


def test_analyze_returns_schema_json():
    doc = json.loads(branchcuts.analyze("log(z^2 - 1)"))
    assert doc["expression"] == "log(z^2 - 1)"
    assert doc["variable"] == "z"
    descs = {c["describe"] for c in doc["cuts"]}
    assert "{y = 0, x in (-1, 1)}" in descs
    assert "{x = 0, y in (-inf, inf)}" in descs


def test_cuts_descriptions_and_warnings():
    descs, warnings = branchcuts.cuts("BesselJ(a, z)", parameters=["a"])
    assert len(descs) == 1
    assert warnings == [
        "branch cuts computed which only occur if a is not an integer"
    ]
    descs, warnings = branchcuts.cuts("exp(z)")
    assert descs == [] and warnings == []


def test_classified_analysis():
    doc = json.loads(branchcuts.analyze("log(z + 1) - log(z - 1)", classify=True))
    verdicts = {c["classification"]["numeric-verdict"] for c in doc["cuts"]}
    assert "spurious" in verdicts


def test_svg_and_scan():
    svg = branchcuts.svg("log(z)")
    assert svg.startswith("<svg")
    assert svg == branchcuts.svg("log(z)")
    points = branchcuts.discontinuity_scan("log(z)", viewport=(-2, 2, -2, 2))
    assert points and all(abs(y) < 0.05 and x < 0.05 for x, y in points)
    assert branchcuts.discontinuity_scan("exp(z)") == []


def test_eval_point():
    v = branchcuts.eval_point("log(z)", complex(-1.0, 1e-9))
    assert abs(v.imag - 3.14159265) < 1e-6


def test_defining_cut_table():
    table = json.loads(branchcuts.defining_cut_table())
    names = {entry["name"] for entry in table["functions"]}
    assert {"log", "arcsin", "arctan", "BesselJ"} <= names


def test_parse_error_raises():
    with pytest.raises(branchcuts.ParseError):
        branchcuts.analyze("log(")
