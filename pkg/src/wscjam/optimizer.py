"""Parameter sweeps and the exhaustive opening-angle search.

Angle axes in every :class:`SweepResult` are in degrees. Sweep points are
independent and evaluated in axis order; ``workers`` only changes the schedule.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .area_metrics import DeltaField, delta_field, field_from_coefficients, polar_grid, wsc
from .channel import Mode, a2g_pathloss, ground_fading_rate, snr_coefficients
from .errors import InvalidParameterError
from .geometry import JammerAngles, horizontal_distance, place_nodes
from .scenario import PowerBudget, Scenario
from .secrecy import SecrecyParams, delta_bar

__all__ = [
    "PowerBudget",
    "SweepResult",
    "best_per_group",
    "f_theta",
    "optimize_theta",
    "single_jammer_scenario",
    "sweep_angle_pairs",
    "sweep_height",
    "sweep_power_ratio",
    "wsc_theta_curve",
]


@dataclass(frozen=True)
class SweepResult:
    axis_name: str
    axis_values: list
    metric_values: list
    argmax_value: object
    argmax_metric: float

    @classmethod
    def from_curve(cls, axis_name: str, axis_values, metric_values) -> "SweepResult":
        axis_values = list(axis_values)
        metric_values = [float(m) for m in metric_values]
        if len(axis_values) != len(metric_values) or not axis_values:
            raise InvalidParameterError("axis and metric lengths differ or are empty")
        best = max(metric_values)
        # ties go to the smallest axis value
        arg = min(v for v, m in zip(axis_values, metric_values) if m == best)
        return cls(axis_name, axis_values, metric_values, arg, best)

    @property
    def axis_names(self) -> list[str]:
        return self.axis_name.split(",")


def best_per_group(result: SweepResult) -> dict:
    """Split a multi-axis sweep on its first axis and take each group's argmax."""
    groups: dict = {}
    for v, m in zip(result.axis_values, result.metric_values):
        groups.setdefault(v[0], ([], []))
        groups[v[0]][0].append(tuple(v[1:]) if len(v) > 2 else v[1])
        groups[v[0]][1].append(m)
    names = ",".join(result.axis_names[1:])
    return {k: SweepResult.from_curve(names, a, m) for k, (a, m) in groups.items()}


def _map(fn, items, workers: int):
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _angle_grid(step: float) -> np.ndarray:
    """Uniform grid over [0, pi] in radians."""
    if not step > 0:
        raise InvalidParameterError("grid step must be positive")
    n = int(round(math.pi / step))
    return np.linspace(0.0, math.pi, n + 1)


def _degrees(angles) -> list[float]:
    """Axis labels in degrees, rounded so grid points print cleanly."""
    return [round(math.degrees(float(a)), 9) for a in angles]


def scenario_wsc(scenario: Scenario, which: str = "delta_bar") -> float:
    return wsc(delta_field(scenario, which=which))


def symmetric_scenario(scenario: Scenario, theta: float) -> Scenario:
    deg = math.degrees(theta / 2.0)
    return scenario.with_jammers(theta_j1_deg=deg, theta_j2_deg=deg)


def f_theta(scenario: Scenario, theta: float) -> float:
    """Sum of the secrecy-probability ratio at three orbit probes.

    Probes sit at (0, R_J), (0, -R_J) and (-R_J, 0) relative to Alice, with both
    jammers opened symmetrically to half of ``theta`` each.
    """
    if not 0.0 <= theta <= math.pi:
        raise InvalidParameterError(f"theta={theta} outside [0, pi]")
    sc = symmetric_scenario(scenario, theta)
    r_j = sc.jammers.r_j
    probes = (np.array([0.0, 0.0, -r_j]), np.array([r_j, -r_j, 0.0]))
    layout = sc.layout()
    nj = snr_coefficients(layout, probes, sc.powers, sc.env, Mode.NO_JAMMING)
    j = snr_coefficients(layout, probes, sc.powers, sc.env, Mode.JAMMING)
    params = SecrecyParams(
        sc.rate_rs,
        ground_fading_rate(sc.d_ab, sc.env.alpha),
        ground_fading_rate(horizontal_distance(probes, layout.alice), sc.env.alpha),
    )
    return float(np.sum(delta_bar(nj, j, params)))


def optimize_theta(scenario: Scenario, theta_grid_step: float = math.radians(1.0), workers: int = 1) -> SweepResult:
    """Exhaustive maximisation of :func:`f_theta` over [0, pi]."""
    thetas = _angle_grid(theta_grid_step)
    values = _map(lambda t: f_theta(scenario, t), thetas, workers)
    return SweepResult.from_curve("theta_deg", _degrees(thetas), values)


def wsc_theta_curve(scenario: Scenario, theta_grid_step: float = math.radians(1.0), which: str = "delta_bar",
                    workers: int = 1) -> SweepResult:
    """WSC of the full field for each symmetric opening angle; the reference for :func:`optimize_theta`."""
    thetas = _angle_grid(theta_grid_step)
    values = _map(lambda t: scenario_wsc(symmetric_scenario(scenario, t), which), thetas, workers)
    return SweepResult.from_curve("theta_deg", _degrees(thetas), values)


def sweep_power_ratio(scenario: Scenario, budget: PowerBudget, ratios, which: str = "delta_bar",
                      workers: int = 1) -> SweepResult:
    ratios = [float(q) for q in ratios]
    if any(not 0 <= q <= 1 for q in ratios):
        raise InvalidParameterError("ratios must lie in [0, 1]")

    def one(q):
        b = PowerBudget(budget.gamma_t, budget.alice_share, q)
        return scenario_wsc(scenario.replace(budget=b, powers=b.powers()), which)

    return SweepResult.from_curve("jammer_ratio", ratios, _map(one, ratios, workers))


def single_jammer_scenario(scenario: Scenario, phi: float, z: float) -> Scenario:
    """One active jammer at polar angle ``phi`` (counterclockwise from +x) on the orbit.

    The geometry frame only spans [0, pi] per jammer, so the half-plane picks
    which jammer slot carries the power; the other is silenced.
    """
    gamma_j = max(scenario.powers.gamma_j1, scenario.powers.gamma_j2)
    phi = phi % (2.0 * math.pi)
    if phi >= math.pi:
        jam = dict(theta_j1_deg=math.degrees(phi - math.pi), theta_j2_deg=0.0)
        powers = dict(gamma_j1=gamma_j, gamma_j2=0.0)
    else:
        jam = dict(theta_j1_deg=0.0, theta_j2_deg=math.degrees(math.pi - phi))
        powers = dict(gamma_j1=0.0, gamma_j2=gamma_j)
    return scenario.with_jammers(z_j1=z, z_j2=z, **jam).with_powers(**powers)


def sweep_height(scenario: Scenario, heights, angles, which: str = "delta", workers: int = 1) -> SweepResult:
    """Single-jammer WSC over (height, angle). Angles in radians, counterclockwise from +x."""
    heights = [float(z) for z in heights]
    if any(z <= 0 for z in heights):
        raise InvalidParameterError("heights must be positive")
    points = [(z, float(a)) for z in heights for a in angles]
    values = _map(lambda p: scenario_wsc(single_jammer_scenario(scenario, p[1], p[0]), which), points, workers)
    axis = [(z, _degrees([a])[0]) for z, a in points]
    return SweepResult.from_curve("z_j,phi_deg", axis, values)


def _jammer_terms(r_j, angles, sign, z, gamma_j, x, y, env):
    """gamma_j / L for a jammer at each orbit angle, on the point set (x, y)."""
    out = []
    for t in angles:
        ground = (-r_j * math.cos(t), sign * r_j * math.sin(t))
        if gamma_j == 0:
            out.append(np.zeros(np.shape(x)))
        else:
            out.append(gamma_j / a2g_pathloss(z, horizontal_distance((x, y), ground), env))
    return out


def sweep_angle_pairs(scenario: Scenario, rj_values, angle_step: float = math.radians(2.0), which: str = "delta",
                      workers: int = 1) -> SweepResult:
    """Exhaustive (theta_j1, theta_j2) grid per orbit radius.

    Angles are measured from the ray behind Alice. Jamming terms are computed
    once per jammer position and reused across pairs.
    """
    angles = _angle_grid(angle_step)
    grid = polar_grid(scenario.region)
    p, env, jam = scenario.powers, scenario.env, scenario.jammers
    bob_x, bob_y = np.array(scenario.d_ab), np.array(0.0)
    axis, values = [], []
    for r_j in rj_values:
        r_j = float(r_j)
        place_nodes(scenario.d_ab, r_j, JammerAngles(0.0, 0.0), jam.z_j1, jam.z_j2)  # validates
        eve1 = _jammer_terms(r_j, angles, -1.0, jam.z_j1, p.gamma_j1, grid.x, grid.y, env)
        eve2 = _jammer_terms(r_j, angles, 1.0, jam.z_j2, p.gamma_j2, grid.x, grid.y, env)
        bob1 = _jammer_terms(r_j, angles, -1.0, jam.z_j1, p.gamma_j1, bob_x, bob_y, env)
        bob2 = _jammer_terms(r_j, angles, 1.0, jam.z_j2, p.gamma_j2, bob_x, bob_y, env)
        pairs = [(i, k) for i in range(len(angles)) for k in range(len(angles))]

        def one(ik):
            i, k = ik
            a_j = p.gamma_a / (1.0 + float(bob1[i] + bob2[k]))
            b_j = p.gamma_a / (1.0 + (eve1[i] + eve2[k]))
            field: DeltaField = field_from_coefficients(grid, scenario.d_ab, a_j, b_j, p.gamma_a,
                                                        scenario.rate_rs, env.alpha, which)
            return wsc(field)

        values.extend(_map(one, pairs, workers))
        deg = _degrees(angles)
        axis.extend((r_j, deg[i], deg[k]) for i, k in pairs)
    return SweepResult.from_curve("r_j,theta_j1_deg,theta_j2_deg", axis, values)
