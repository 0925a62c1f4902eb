import json

import pytest

ug4 = pytest.importorskip("_ug4")


def test_algebra_point():
    assert ug4.algebra_point("sl3") == ("-1/3", "1/3", "1/2")
    assert ug4.algebra_point("e8") == ("-1/30", "1/5", "1/3")


def test_dim():
    assert ug4.dim("Y2", algebra="sl3") == "27"
    assert ug4.dim("g", algebra="e8") == "248"
    assert ug4.dim("X4", point=("-1/3", "1/3", "1/2")) == "-70"
    assert ug4.dim("Y2", algebra="sl3", provenance="as-printed") == "27/2"


def test_table_sums():
    t = ug4.table("1111", algebra="g2")
    assert t["sum"] == "1001"
    assert t["sum"] == t["closed_form_total"]
    assert len(t["rows"]) == 13


def test_spectrum_matches_verify():
    spec = ug4.spectrum("sl2", "sym2")
    assert spec["total"] == 6
    entries = {e["eigenvalue"]: e["dim"] for e in spec["entries"]}
    assert entries == {"-1": 1, "1/2": 5}

    rep = ug4.verify("sl3", "asym3")
    assert rep["verdict"] == "pass"
    assert rep["measured_total"] == 56


def test_erratum_regression():
    rep = ug4.verify("sl3", "sym2", provenance="as-printed")
    assert rep["verdict"] == "fail"
    bad = [r for r in rep["rows"] if not r["match"]]
    assert len(bad) == 1
    assert bad[0]["labels"] == ["Y2"]
    assert bad[0]["predicted"] == "27/2"
    assert bad[0]["measured"] == 27


def test_dump_algebra_roundtrip():
    alg = ug4.dump_algebra("sl2")
    assert alg["dimension"] == 3
    assert json.dumps(alg)  # serializable


def test_sum_identity():
    r = ug4.check_sum_identity("31", ("1/5", "1/7", "11/70"))
    assert r["exact"] is True
