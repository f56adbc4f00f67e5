import arnoldnf
import pytest


def test_e12():
    r = arnoldnf.classify("x^3+y^7+x*y^5")
    assert r["type"] == "E_12"
    assert r["mu"] == 12
    assert [p["value"] for p in r["parameters"]] == ["1"]


def test_text():
    assert arnoldnf.classify_text("x^3+y^7+x*y^5").strip() == \
        "type: E_12, normal form: x^3+y^7+a*x*y^5, a = 1, mu = 12"


def test_rejections():
    assert arnoldnf.classify("x^5+y^6")["rejected_reason"] == "modality > 2"
    assert arnoldnf.classify("x^2*y^2")["rejected_reason"] == "non-isolated singularity"
    r = arnoldnf.classify("x^3+y^3+z^3", vars=("x", "y", "z"))
    assert r["rejected_reason"] == "corank > 2"


def test_milnor():
    assert arnoldnf.milnor("x^4+y^5") == 12
    assert arnoldnf.milnor("x^2*y^2") is None


def test_normal_form_round_trip():
    nf = arnoldnf.normal_form("J_{3,1}", ["2", "-1/3"])
    r = arnoldnf.classify(nf)
    assert r["type"] == "J_{3,1}"
    assert [p["value"] for p in r["parameters"]] == ["2", "-1/3"]


def test_trace():
    r = arnoldnf.classify("y^3+x^7+y*x^5", trace=True)
    assert r["type"] == "E_12"
    assert len(r["trace"]) > 0


def test_parse_error():
    with pytest.raises(ValueError):
        arnoldnf.classify("x^^2")


def test_harness():
    rep = arnoldnf.harness(seed=3, count=1, types=["W#_{1,2}"])
    assert rep["summary"]["type_recovered"] == rep["summary"]["cases"]
    assert rep["rows"][0]["leading_ideal_ok"]
