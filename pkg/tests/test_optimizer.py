import math

import numpy as np
import pytest

from conftest import make_scenario
from wscjam.area_metrics import RegionSpec, delta_field, wsc
from wscjam.channel import Mode, ground_fading_rate, snr_coefficients
from wscjam.errors import InvalidParameterError
from wscjam.optimizer import (
    PowerBudget,
    SweepResult,
    best_per_group,
    f_theta,
    optimize_theta,
    single_jammer_scenario,
    sweep_angle_pairs,
    sweep_height,
    sweep_power_ratio,
    wsc_theta_curve,
)
from wscjam.scenario import JammerConfig
from wscjam.secrecy import SecrecyParams, delta_bar

SMALL = RegionSpec(40.0, 0.5, 16, 36)


def test_sweep_result_ties_go_to_smallest():
    r = SweepResult.from_curve("x", [3, 1, 2], [5.0, 5.0, 1.0])
    assert r.argmax_value == 1 and r.argmax_metric == 5.0


def test_sweep_result_length_mismatch():
    with pytest.raises(InvalidParameterError):
        SweepResult.from_curve("x", [1, 2], [1.0])


def test_best_per_group():
    r = SweepResult.from_curve("a,b", [(1, 0), (1, 5), (2, 0), (2, 5)], [1.0, 2.0, 3.0, 0.0])
    groups = best_per_group(r)
    assert groups[1].argmax_value == 5 and groups[2].argmax_value == 0


def test_power_budget_split():
    p = PowerBudget(30.0, 0.5, 0.5).powers()
    assert p.gamma_a == 15.0
    assert p.gamma_j1 + p.gamma_j2 == pytest.approx(15.0)
    assert p.gamma_j2 / p.gamma_j1 == pytest.approx(0.5)
    assert PowerBudget(30.0, 0.5, 0.0).powers().gamma_j2 == 0.0
    with pytest.raises(InvalidParameterError):
        PowerBudget(30.0, 0.0)
    with pytest.raises(InvalidParameterError):
        PowerBudget(30.0, 0.5, 1.5)


def fig6(d_ab=14.0):
    return make_scenario(d_ab=d_ab, r_j=14.0, z=13.0, g_a=20.0, g_j1=5.0, g_j2=5.0)


@pytest.mark.parametrize("theta", [0.0, 0.7, math.pi])
def test_f_theta_zero_power_is_three(theta):
    assert f_theta(make_scenario(g_j1=0.0, g_j2=0.0), theta) == 3.0


def test_f_theta_range():
    with pytest.raises(InvalidParameterError):
        f_theta(fig6(), -0.1)
    with pytest.raises(InvalidParameterError):
        f_theta(fig6(), math.pi + 0.01)


def test_f_theta_probe_symmetry():
    sc = fig6()
    theta = 1.1
    sym = sc.with_jammers(theta_j1_deg=math.degrees(theta / 2), theta_j2_deg=math.degrees(theta / 2))
    lay = sym.layout()

    def at(pt):
        nj = snr_coefficients(lay, pt, sym.powers, sym.env, Mode.NO_JAMMING)
        j = snr_coefficients(lay, pt, sym.powers, sym.env)
        return delta_bar(nj, j, SecrecyParams(1.0, ground_fading_rate(14.0, 0.3), ground_fading_rate(14.0, 0.3)))

    assert at((0.0, 14.0)) == pytest.approx(at((0.0, -14.0)), rel=1e-14)
    assert f_theta(sc, theta) == pytest.approx(2 * at((0.0, 14.0)) + at((-14.0, 0.0)), rel=1e-14)


def test_optimize_theta_flat_curve():
    res = optimize_theta(make_scenario(g_j1=0.0, g_j2=0.0), math.radians(5))
    assert len(res.axis_values) == 37
    assert set(res.metric_values) == {3.0}
    assert res.argmax_value == 0.0


def test_optimize_theta_workers_identical():
    a = optimize_theta(fig6(), math.radians(3), workers=1)
    b = optimize_theta(fig6(), math.radians(3), workers=4)
    assert a == b


def test_wsc_theta_curve_matches_direct():
    sc = fig6().replace(region=SMALL)
    res = wsc_theta_curve(sc, math.radians(45))
    for theta_deg, m in zip(res.axis_values, res.metric_values):
        half = theta_deg / 2
        direct = wsc(delta_field(sc.with_jammers(theta_j1_deg=half, theta_j2_deg=half), which="delta_bar"))
        assert m == pytest.approx(direct, rel=1e-14)


def test_power_ratio_label_swap():
    sc = make_scenario(r_j=28.0, t1=45.0, t2=45.0).replace(region=SMALL)
    for q in (0.0, 0.3, 1.0):
        p = PowerBudget(30.0, 0.5, q).powers()
        one = wsc(delta_field(sc.with_powers(gamma_a=p.gamma_a, gamma_j1=p.gamma_j1, gamma_j2=p.gamma_j2)))
        two = wsc(delta_field(sc.with_powers(gamma_a=p.gamma_a, gamma_j1=p.gamma_j2, gamma_j2=p.gamma_j1)))
        assert one == pytest.approx(two, rel=1e-12)


def test_power_ratio_sweep_shape():
    sc = make_scenario(r_j=28.0, t1=45.0, t2=45.0).replace(region=SMALL)
    res = sweep_power_ratio(sc, PowerBudget(30.0), [0.0, 0.5, 1.0], which="delta")
    assert res.axis_values == [0.0, 0.5, 1.0]
    with pytest.raises(InvalidParameterError):
        sweep_power_ratio(sc, PowerBudget(30.0), [1.2])


@pytest.mark.parametrize("phi_deg, expected", [(180, (-7, 0)), (90, (0, 7)), (270, (0, -7)), (0, (7, 0)), (200, None)])
def test_single_jammer_placement(phi_deg, expected):
    sc = single_jammer_scenario(make_scenario(), math.radians(phi_deg), 9.0)
    lay = sc.layout()
    active = lay.jammer1_ground if sc.powers.gamma_j1 > 0 else lay.jammer2_ground
    if expected is None:
        expected = (7 * math.cos(math.radians(phi_deg)), 7 * math.sin(math.radians(phi_deg)))
    np.testing.assert_allclose(active, expected, atol=1e-12)
    assert min(sc.powers.gamma_j1, sc.powers.gamma_j2) == 0.0
    assert lay.z_j1 == lay.z_j2 == 9.0


def test_sweep_height_axes():
    sc = make_scenario().replace(region=SMALL)
    res = sweep_height(sc, [5.0, 13.2], np.radians([0, 90, 180, 270]))
    assert res.axis_names == ["z_j", "phi_deg"]
    assert len(res.metric_values) == 8
    with pytest.raises(InvalidParameterError):
        sweep_height(sc, [0.0], [0.0])


def test_angle_pairs_match_direct_fields():
    sc = make_scenario().replace(region=SMALL)
    res = sweep_angle_pairs(sc, [14.0], math.radians(60))
    assert len(res.axis_values) == 16
    for (r_j, t1, t2), m in zip(res.axis_values, res.metric_values):
        direct = wsc(delta_field(sc.with_jammers(r_j=r_j, theta_j1_deg=t1, theta_j2_deg=t2)))
        assert m == pytest.approx(direct, rel=1e-12)


def test_angle_pairs_degenerate_radius():
    sc = make_scenario().replace(region=SMALL)
    res = sweep_angle_pairs(sc, [1e-9], math.radians(30))
    vals = np.array(res.metric_values)
    assert np.max(np.abs(vals - vals[0])) <= 1e-9 * vals[0]


def test_exchange_symmetry():
    a = make_scenario(r_j=14.0, t1=20.0, t2=70.0, g_j1=4.0, g_j2=9.0).replace(region=SMALL)
    a = a.replace(jammers=JammerConfig(14.0, 20.0, 70.0, 8.0, 15.0))
    b = a.replace(jammers=JammerConfig(14.0, 70.0, 20.0, 15.0, 8.0)).with_powers(gamma_j1=9.0, gamma_j2=4.0)
    for which in ("delta", "delta_bar"):
        assert wsc(delta_field(a, which=which)) == pytest.approx(wsc(delta_field(b, which=which)), rel=1e-12)
