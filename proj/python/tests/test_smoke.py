import json
import pathlib

import pytest

import drinfeld

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_analyze_rank_three():
    prof = drinfeld.analyze(load("rank3_f16.json"))
    assert prof["m"] == "x^3+T*x^2+x+T^4+T+1"
    assert prof["r"] == 3
    assert prof["H"] == 1


def test_analyze_accepts_text():
    text = (DATA / "rank3_f16.json").read_text()
    assert drinfeld.analyze(text)["m"] == "x^3+T*x^2+x+T^4+T+1"


def test_end_ring_and_kernel():
    module = load("rank3_f16.json")
    end = drinfeld.end_ring(module)
    assert len(end["basis"]) == 3
    report = drinfeld.kernel_test(module, load("ideal_e2_e3.json"))
    assert report["kernel"] is False
    assert report["witness_in_A"] == "T^2+1"


def test_ideal_act():
    act = drinfeld.ideal_act(load("rank3_f16.json"), load("ideal_e2_e3.json"))
    assert act["u_I"] == "(t^3+t+1)+(t^3+t^2)*tau+(t+1)*tau^2+tau^3"
    assert act["multiplicator_in_end"] is True


def test_census_small():
    records = drinfeld.census(load("census_q2_n1.json"))
    header, *classes, validation = records
    assert header["modules"] == 2
    assert header["isomorphism_classes"] == 2
    assert header["isogeny_classes"] == 2
    assert len(classes) == 2
    assert validation["violations"] == 0


def test_census_deterministic_across_jobs():
    spec = {"field": {"p": 2, "n": 2}, "r": 2}
    assert drinfeld.census(spec, jobs=1) == drinfeld.census(spec, jobs=3)


def test_errors():
    with pytest.raises(drinfeld.TooLarge):
        drinfeld.census(load("census_too_large.json"))
    with pytest.raises(drinfeld.InputError):
        drinfeld.analyze("{")
    with pytest.raises(drinfeld.DrinfeldError):
        drinfeld.analyze({"field": {"p": 2, "n": 1}, "phi_T": [[1]]})
    with pytest.raises(drinfeld.NonCommutativeEndomorphismRing):
        drinfeld.end_ring({"field": {"p": 3, "n": 2}, "phi_T": [[0], [], [1]]})


def test_paper_examples():
    results = drinfeld.paper_examples()
    statuses = {r["status"] for r in results}
    assert "FAIL" not in statuses
    assert sum(r["status"] == "DISCREPANCY" for r in results) == 3
