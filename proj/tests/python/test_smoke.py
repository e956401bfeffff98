import json
import math

import pytest

import chronoscale as cs


def test_timescale_jumps():
    ts = cs.TimeScale("Z[0,4]")
    assert ts.sigma(2) == 3
    assert ts.rho(2) == 1
    assert ts.graininess(4) == 0
    assert cs.TimeScale("R[0,1]").graininess(0.5) == 0


def test_integral_on_integers_is_a_sum():
    assert cs.delta_integral_1d("Z[0,5]", lambda t: t * t, 0, 5) == pytest.approx(30.0, abs=1e-12)


def test_integral_on_reals():
    value = cs.delta_integral_2d("R[0,1]", "R[0,1]", lambda x, y: x * y, (0, 1, 0, 1))
    assert value == pytest.approx(0.25, abs=1e-12)


def test_mixed_delta_on_integers():
    assert cs.mixed_delta("x^2*y^2", "Z[0,4]", "Z[0,4]", 1, 2) == pytest.approx(3 * 5, abs=1e-12)


def test_thm21_spot_check():
    r = cs.verify("thm21", "x*y", "R[0,1]", "R[0,1]", (0, 1, 0, 1))
    assert r["pass"]
    assert r["lhs"] == pytest.approx(1 / 144, abs=1e-9)
    assert r["rhs"] == pytest.approx(1 / 16, abs=1e-9)


def test_stated_bound_witness_fails():
    r = cs.verify("thm22-stated", "x*y", "R[0,4]", "R[0,4]", (0, 4, 0, 4))
    assert not r["pass"]
    assert r["lhs"] == pytest.approx(256 / 9, abs=1e-9)


def test_expression_round_trip():
    printed = cs.parse_expr("sin(x)*cos(y) + x^2")
    assert cs.parse_expr(printed) == printed
    assert cs.eval_expr(printed, 0.3, 0.7) == pytest.approx(math.sin(0.3) * math.cos(0.7) + 0.09, abs=1e-12)


def test_bad_descriptor_raises():
    with pytest.raises(ValueError):
        cs.TimeScale("R[1,0]")


def test_campaign_is_deterministic():
    first = json.loads(cs.run_campaign(trials=5, seed=7, theorems=["thm21"]))
    second = json.loads(cs.run_campaign(trials=5, seed=7, theorems=["thm21"]))
    first.pop("duration_seconds")
    second.pop("duration_seconds")
    assert first == second
    assert first["summary"]["records"] == 5
