import json

import pytest

import oxbar


def test_anchor_losses():
    assert oxbar.evaluate("ornoc-ccc", 8, preset="biberman2011")["l_total_db"] == pytest.approx(5.25)
    assert oxbar.evaluate("lambda-router-b", 8, preset="koka2012")["l_total_db"] == pytest.approx(26.15)
    loss = oxbar.evaluate("lambda-router-b", 8, pitch_mm=2.5, p_crossing=0.05, p_propagation=0.5, p_drop=0.5)
    assert loss["l_total_db"] == pytest.approx(8.45)
    assert loss["n_crossing"] == 114


def test_compare_improvement():
    cmp = oxbar.compare("ornoc-ccc", "lambda-router-b", 8, preset="koka2012")
    assert cmp["better"] == "a"
    assert cmp["improvement_pct"] == pytest.approx(90.63, abs=0.05)


def test_resources_and_partition():
    assert oxbar.resources("lambda-router", 4)["mr_crossbar_reduced"] == 224
    assert oxbar.resources("ornoc-ccc", 8)["min_wavelengths"] == 1008
    assert oxbar.partition_waveguides(1008, 16) == 63


def test_assignment_round_trip():
    a = oxbar.assign("ccc", 4)
    assert a["wavelength_count"] == 3
    assert oxbar.validate(a) == []
    a["arcs"] = a["arcs"][1:]
    assert [v["kind"] for v in oxbar.validate(a)] == ["missing"]


def test_verify():
    assert oxbar.verify(8)["summary"] == "0 mismatches"


def test_frontier_and_classify():
    f = oxbar.frontier("lambda-router-a", "lambda-router-b", 8)
    assert f["slope"] == pytest.approx(51 / 3.5)
    assert oxbar.classify(f, 0.05, 1.0) == "b"
    assert oxbar.classify(f, 0.05, 0.5) == "a"


def test_sweep():
    s = oxbar.sweep_n(["ornoc-ccc", "lambda-router-b"], [8, 4], preset="pan2010", lenient=True)
    assert [p["axis_value"] for p in s["points"]] == [4, 8]


def test_errors():
    with pytest.raises(oxbar.ModelError):
        oxbar.evaluate("matrix-b", 4, preset="pan2010")
    with pytest.raises(oxbar.InvalidInput):
        oxbar.evaluate("matrix-a", 3, preset="pan2010")
    with pytest.raises(oxbar.Error):
        oxbar.evaluate("nosuch-a", 4, preset="pan2010")


def test_cli_entry_point():
    code, out, err = oxbar.run_cli(["resources", "--topology", "matrix", "--n", "2"])
    assert code == 0 and err == ""
    assert json.loads(out)["result"]["mr_crossbar_initial"] == 16
    assert oxbar.run_cli(["evaluate"])[0] == 1
