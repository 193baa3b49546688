import os
import pathlib

import pytest

import hyperring as hr

DATA = pathlib.Path(os.environ.get("HYPERRING_DATA_DIR", pathlib.Path(__file__).parents[2] / "data"))


def test_g_document():
    G = hr.load_document(DATA / "G.json")
    assert len(G) == 6
    assert hr.validate(G)["passed"]
    assert hr.hyperideals(G) == [["0"], ["0", "4"], ["0", "6"], ["0", "3", "6"], ["0", "2", "4", "6"], G.labels]
    r = hr.radical(G, ["0", "4"])
    assert r["by_primes"] == r["by_powers"] == ["0", "2", "4", "6"]
    c = hr.classify(G, ["0", "4"])
    assert c["q_primary"] and not c["prime"]
    assert hr.classify(G, ["0", "3", "6"])["wsq_primary"]


def test_h_refused_then_loaded():
    with pytest.raises(hr.ValidationFailedError):
        hr.load_document(DATA / "H.json")
    H = hr.load_document(DATA / "H.json", validate=False)
    rep = hr.validate(H)
    assert not rep["passed"]
    assert rep["counts"] == {"distributivity": 108}
    assert hr.classify(H, ["0", "2"])["sq_primary"]


def test_constructions_and_round_trip():
    G = hr.builtin("G")
    GG = hr.product(G, G)
    assert len(GG) == 36
    q = hr.quotient(G, ["0", "6"])
    assert q.labels == ["[0|6]", "[1]", "[2|4]", "[3]"]
    assert q.f(["[1]", "[1]"]) == ["[0|6]", "[2|4]"]
    text = q.to_document()
    assert hr.parse_document(text).to_document() == text
    with pytest.raises(hr.NotAHyperidealError):
        hr.quotient(G, ["0", "2"])


def test_errors():
    with pytest.raises(hr.ParseError):
        hr.parse_document("{")
    with pytest.raises(hr.UnknownLabelError):
        hr.radical(hr.builtin("G"), ["5"])
    with pytest.raises(KeyError):
        hr.builtin("nope")


def test_theorems_small():
    res = hr.run_theorems([hr.builtin("G"), hr.builtin("Trivial")])
    assert res["fail"] == 0
    assert res["known_implication_failures"] == 0
    assert res["reports"] == res["pass"] + res["vacuous"]
