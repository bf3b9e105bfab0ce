import json

import pyconifold as pc


def test_novikov_arithmetic():
    a = pc.Novikov.monomial("1", "0") + pc.Novikov.monomial("1", "1")  # 1 + T
    i = a.inv("3")
    assert str(i) == "1 - 1*T^1 + 1*T^2 (trunc 3)"
    assert a.val() == "0"
    prod = a * i
    one = pc.Novikov.monomial("1", "0")
    assert prod.equal_upto_common_trunc(one)


def test_atlas_embedding():
    atlas = pc.Atlas()
    assert atlas.psi("0", "0", "3") == "4"
    assert atlas.j_embed("0", "-1", "1") == ["-3", "1", "2", "0", "-1"]
    assert atlas.j_inverse(["-3", "1", "2", "0", "-1"]) == ["0", "-1", "1"]
    assert atlas.broken_line_eval("0", "0", "1/2") == ["-2", "1/2", "1"]
    assert atlas.chart_contains(3, "0", "0", "-1")
    assert not atlas.chart_contains(1, "0", "3", "1")


def test_classify():
    assert pc.classify(["-3", "1", "2", "0", "-1"]) == "singular"
    assert pc.classify(["-2", "0.5", "1", "2", "3"]) == "smooth"
    assert pc.classify(["0", "0", "0", "0", "0"]) == "not-in-image"


def test_verify_suite_runs():
    report = json.loads(pc.verify_suite("gluing", samples=50))
    assert report["schema"] == 1
    assert report["suite"] == "gluing"
    assert report["failed"] == 0

    report = json.loads(pc.verify_suite("symbolic", samples=1))
    assert report["failed"] == 0


def test_suite_names():
    names = pc.suite_names()
    assert "diagram" in names and "base" in names
