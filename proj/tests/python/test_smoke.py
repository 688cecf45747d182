import math

import pytest

import vaacb


def test_scenario_roundtrip_and_validation():
    sc = vaacb.make_scenario(4, seed=3)
    assert len(sc["geometry"]["uav_initial_positions_m"]) == 4
    assert vaacb.validate(sc) is None
    sc["geometry"]["alt_min_m"] = 120.0
    assert "geometry.alt_min_m" in vaacb.validate(sc)


def test_evaluate_baseline():
    sc = vaacb.make_scenario(3, seed=2)
    g = vaacb.before_cb_genome(sc)
    obj = vaacb.evaluate(sc, g)
    assert obj["f3_j"] == 0.0
    assert obj["violation"] == 0.0
    assert obj["f1_s"] > 0 and obj["f2_linear"] > 0


def test_short_run():
    sc = vaacb.make_scenario(3, seed=2)
    rep = vaacb.run(sc, {"pop_size": 8, "max_iters": 3, "master_seed": 4})
    assert rep["algorithm"] == "cnsga2"
    assert rep["archive"]
    assert rep["hypervolume"] >= 0
    again = vaacb.run(sc, {"pop_size": 8, "max_iters": 3, "master_seed": 4})
    assert again["archive"] == rep["archive"]


def test_bad_config_raises():
    sc = vaacb.make_scenario(3, seed=2)
    with pytest.raises(ValueError, match="pop_size"):
        vaacb.run(sc, {"pop_size": 7})


def test_numeric_helpers():
    lam = 0.125
    g = vaacb.gain([[0, 0, 0], [lam / 2, 0, 0]], [1, 1], lam, math.pi / 2, math.pi / 2, 1.0)
    assert g == pytest.approx(2.0, rel=0.02)
    assert vaacb.propulsion_power(0.0) == pytest.approx(168.4842)
    v = vaacb.max_range_speed()
    assert v / vaacb.propulsion_power(v) >= (v + 0.1) / vaacb.propulsion_power(v + 0.1)
    assert vaacb.chaotic_sequence("logistic", 0.2, 2) == pytest.approx([0.64, 0.9216])
    assert vaacb.hypervolume([[0.5, 0.5], [0.25, 0.75]], [1, 1]) == pytest.approx(0.3125)
