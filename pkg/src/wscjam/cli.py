"""Command line entry point: ``wscjam <command> --scenario FILE --out DIR``.

Exit codes: 0 success, 2 config error, 3 numerical-guard error, 4 I/O error.
Errors are reported on stderr as one JSON object ``{"error": ..., "message": ...}``.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import platform
import shutil
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .area_metrics import RegionSpec, area_metrics, delta_field
from .channel import Mode, SnrCoefficients, ground_fading_rate, snr_coefficients
from .errors import ConfigError, InvalidParameterError, NumericalGuardError, WscError
from .geometry import eve_point
from .io import write_field, write_manifest, write_sweep, write_table
from .montecarlo import McConfig, empirical_sop, ratio_estimate
from .optimizer import optimize_theta, sweep_angle_pairs, sweep_height, sweep_power_ratio
from .scenario import PowerBudget, Scenario, load_scenario
from .secrecy import SecrecyParams, delta, sop_closed_form

COMMANDS = (
    "validate",
    "field",
    "metrics",
    "sweep-height",
    "sweep-power",
    "sweep-angles",
    "optimize-theta",
    "mc-check",
)
# Figures 2-5 use the SOP ratio; the opening-angle optimisation uses the secrecy-probability ratio.
DEFAULT_METRIC = {"optimize-theta": "delta_bar"}

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4


def _validate(sc: Scenario, out: Path, tag: str, metric: str, workers: int) -> list[Path]:
    layout = sc.layout()
    omega_ab = ground_fading_rate(sc.d_ab, sc.env.alpha)
    rows = []
    n = sc.sweeps.ring_points
    stream = 0
    for r in sc.sweeps.rings:
        for m in range(n):
            phi = 2.0 * math.pi * m / n
            eve = eve_point(r, phi)
            nj = snr_coefficients(layout, eve, sc.powers, sc.env, Mode.NO_JAMMING)
            j = snr_coefficients(layout, eve, sc.powers, sc.env, Mode.JAMMING)
            params = SecrecyParams(sc.rate_rs, omega_ab, ground_fading_rate(r, sc.env.alpha))
            s_nj, s_j = sop_closed_form(nj, params), sop_closed_form(j, params)
            e_nj = empirical_sop(nj, params, sc.mc, 2 * stream, workers)
            e_j = empirical_sop(j, params, sc.mc, 2 * stream + 1, workers)
            est = ratio_estimate(e_nj, e_j)
            rows.append([float(r), math.degrees(phi), eve[0], eve[1], s_nj, e_nj.value, e_nj.std_error,
                         s_j, e_j.value, e_j.std_error, delta(nj, j, params), est.value, est.std_error])
            stream += 1
    header = ["r", "phi_deg", "x", "y", "sop_nj", "sop_nj_mc", "sop_nj_se", "sop_j", "sop_j_mc", "sop_j_se",
              "delta", "delta_mc", "delta_se"]
    return [write_table(out / f"validate_{tag}.csv", header, rows, {"scenario_hash": tag})]


def _mc_check(sc: Scenario, out: Path, tag: str, metric: str, workers: int) -> list[Path]:
    rng = np.random.default_rng(np.random.SeedSequence(sc.mc.seed, spawn_key=(2**31,)))
    rows = []
    for k in range(sc.sweeps.mc_check_tuples):
        a, b = rng.uniform(1.0, 30.0, 2)
        d_ab, d_ae = rng.uniform(1.0, 40.0, 2)
        rate = float(rng.uniform(0.2, 3.0))
        params = SecrecyParams(rate, ground_fading_rate(d_ab, sc.env.alpha), ground_fading_rate(d_ae, sc.env.alpha))
        coeffs = SnrCoefficients(float(a), float(b), Mode.JAMMING)
        closed = sop_closed_form(coeffs, params)
        est = empirical_sop(coeffs, params, sc.mc, stream=k, workers=workers)
        z = abs(closed - est.value) / est.std_error if est.std_error > 0 else 0.0
        rows.append([float(a), float(b), params.omega_ab, float(params.omega_ae), rate, closed, est.value,
                     est.std_error, z, int(z < 4.0)])
    header = ["a", "b", "omega_ab", "omega_ae", "rate_rs", "sop", "sop_mc", "sop_se", "z", "pass"]
    return [write_table(out / f"mc-check_{tag}.csv", header, rows, {"scenario_hash": tag})]


def _field(sc, out, tag, metric, workers):
    field = delta_field(sc, which=metric)
    meta = {"scenario_hash": tag, "region": dataclasses.asdict(sc.region), "metric": metric}
    return list(write_field(out / f"field_{metric}_{tag}.csv", field, meta))


def _metrics(sc, out, tag, metric, workers):
    m = area_metrics(delta_field(sc, which=metric))
    rows = [[k, m[k]] for k in ("coverage", "efficiency", "wsc", "total_area")]
    return [write_table(out / f"metrics_{metric}_{tag}.csv", ["metric", "value"], rows,
                        {"scenario_hash": tag, "metric": metric})]


def _sweep_height(sc, out, tag, metric, workers):
    step = math.radians(sc.sweeps.angle_step_deg)
    angles = np.arange(0.0, 2.0 * math.pi - 1e-12, step)
    res = sweep_height(sc, sc.sweeps.heights, angles, which=metric, workers=workers)
    return [write_sweep(out / f"sweep-height_{metric}_{tag}.csv", res, {"scenario_hash": tag, "metric": metric})]


def _sweep_power(sc, out, tag, metric, workers):
    paths = []
    for gt in sc.sweeps.gamma_t_values:
        res = sweep_power_ratio(sc, PowerBudget(gt, 0.5), sc.sweeps.ratios, which=metric, workers=workers)
        paths.append(write_sweep(out / f"sweep-power_gt{gt:g}_{metric}_{tag}.csv", res,
                                 {"scenario_hash": tag, "metric": metric, "gamma_t": gt}))
    return paths


def _sweep_angles(sc, out, tag, metric, workers):
    res = sweep_angle_pairs(sc, sc.sweeps.rj_values, math.radians(sc.sweeps.angle_step_deg), which=metric,
                            workers=workers)
    return [write_sweep(out / f"sweep-angles_{metric}_{tag}.csv", res, {"scenario_hash": tag, "metric": metric})]


def _optimize_theta(sc, out, tag, metric, workers):
    rows = []
    step = math.radians(sc.sweeps.theta_step_deg)
    for r_j in sc.sweeps.rj_values:
        for d_ab in sc.sweeps.d_ab_values:
            res = optimize_theta(sc.replace(d_ab=d_ab).with_jammers(r_j=r_j), step, workers=workers)
            rows.append([r_j, d_ab, res.argmax_value, res.argmax_metric])
    return [write_table(out / f"optimize-theta_{tag}.csv", ["r_j", "d_ab", "theta_opt_deg", "f_max"], rows,
                        {"scenario_hash": tag, "metric": "delta_bar"})]


_HANDLERS = {
    "validate": _validate,
    "field": _field,
    "metrics": _metrics,
    "sweep-height": _sweep_height,
    "sweep-power": _sweep_power,
    "sweep-angles": _sweep_angles,
    "optimize-theta": _optimize_theta,
    "mc-check": _mc_check,
}


def run_experiment(command: str, scenario: Scenario, output_dir, metric: str | None = None,
                   workers: int = 1) -> list[Path]:
    """Run one command, returning the written artifact paths (manifest last).

    Files are staged in a hidden directory and only moved into ``output_dir``
    once every artifact has been written.
    """
    if command not in _HANDLERS:
        raise ConfigError(f"unknown command {command!r}")
    metric = (metric or DEFAULT_METRIC.get(command, "delta")).replace("-", "_")
    if metric not in ("delta", "delta_bar"):
        raise ConfigError(f"unknown metric {metric!r}")
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    staging = out / f".staging-{command}"
    shutil.rmtree(staging, ignore_errors=True)
    staging.mkdir()
    tag = scenario.hash()
    try:
        files = _HANDLERS[command](scenario, staging, tag, metric, workers)
        info = {
            "command": command,
            "scenario_hash": tag,
            "metric": metric,
            "seed": scenario.mc.seed,
            "n_samples": scenario.mc.n_samples,
            "n_substreams": scenario.mc.n_substreams,
            "grid": dataclasses.asdict(scenario.region),
            "versions": {"wscjam": __version__, "numpy": np.__version__, "python": platform.python_version()},
        }
        manifest = write_manifest(staging / f"manifest_{command}_{tag}.json", info, files)
        final = []
        for p in [*files, manifest]:
            target = out / p.name
            p.replace(target)
            final.append(target)
        return final
    finally:
        shutil.rmtree(staging, ignore_errors=True)


def _grid(text: str) -> tuple[int, int]:
    try:
        nr, na = text.lower().split("x")
        return int(nr), int(na)
    except ValueError:
        raise argparse.ArgumentTypeError("grid must look like 64x180")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wscjam", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--scenario", required=True, help="YAML scenario file")
    p.add_argument("--out", default="results", help="output directory")
    p.add_argument("--seed", type=int, help="Monte Carlo seed (u64)")
    p.add_argument("--samples", type=int, help="Monte Carlo samples per estimate")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--metric", choices=("delta", "delta-bar"))
    p.add_argument("--grid", type=_grid, help="n_radial x n_angular, e.g. 64x180")
    return p


def apply_overrides(sc: Scenario, seed=None, samples=None, grid=None) -> Scenario:
    if seed is not None or samples is not None:
        mc = sc.mc
        sc = sc.replace(mc=McConfig(samples if samples is not None else mc.n_samples,
                                    seed if seed is not None else mc.seed, mc.n_substreams))
    if grid is not None:
        r = sc.region
        sc = sc.replace(region=RegionSpec(r.radius_s, r.exclusion_radius, grid[0], grid[1]))
    return sc


def _fail(code: int, category: str, message: str) -> int:
    print(json.dumps({"error": category, "message": message}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        sc = load_scenario(args.scenario)
        sc = apply_overrides(sc, args.seed, args.samples, args.grid)
        if args.workers < 1:
            raise ConfigError("workers must be >= 1")
        paths = run_experiment(args.command, sc, args.out, args.metric, args.workers)
    except (ConfigError, InvalidParameterError) as exc:
        return _fail(EXIT_CONFIG, exc.category, str(exc))
    except NumericalGuardError as exc:
        return _fail(EXIT_NUMERIC, exc.category, str(exc))
    except OSError as exc:
        return _fail(EXIT_IO, "io", str(exc))
    except WscError as exc:
        return _fail(EXIT_CONFIG, exc.category, str(exc))
    for path in paths:
        print(path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
