"""Run every CLI experiment on its figure scenario and summarise the outcome.

    python scripts/reproduce_figures.py --out results --workers 4
"""

import argparse
import math
from pathlib import Path

from wscjam.cli import run_experiment
from wscjam.io import read_table
from wscjam.scenario import load_scenario

ROOT = Path(__file__).resolve().parents[1]
JOBS = [
    ("fig2a", "validate"),
    ("fig2b", "validate"),
    ("fig2c", "validate"),
    ("fig2c", "field"),
    ("fig3", "sweep-height"),
    ("fig4", "sweep-angles"),
    ("fig5", "sweep-power"),
    ("fig6", "metrics"),
    ("fig7", "optimize-theta"),
    ("minimal", "mc-check"),
]


def summarise(command, paths):
    csvs = [p for p in paths if p.suffix == ".csv"]
    if command == "validate":
        _, header, rows = read_table(csvs[0])
        col = {h: i for i, h in enumerate(header)}
        z = [abs(float(r[col["delta"]]) - float(r[col["delta_mc"]])) / float(r[col["delta_se"]]) for r in rows]
        return f"{sum(v < 4 for v in z)}/{len(z)} Eve points with |delta - MC| < 4 SE"
    if command in ("sweep-height", "sweep-angles", "sweep-power"):
        out = []
        for p in csvs:
            meta, _, _ = read_table(p)
            out.append(f"argmax {meta['argmax_value']} (WSC {float(meta['argmax_metric']):.1f})")
        return "; ".join(out)
    if command == "optimize-theta":
        _, _, rows = read_table(csvs[0])
        return f"{len(rows)} (r_j, d_ab) optima, theta_opt in [{min(float(r[2]) for r in rows):g}, " \
               f"{max(float(r[2]) for r in rows):g}] deg"
    if command == "mc-check":
        _, _, rows = read_table(csvs[0])
        return f"{sum(int(r[-1]) for r in rows)}/{len(rows)} tuples pass"
    return ", ".join(p.name for p in csvs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()
    for name, command in JOBS:
        sc = load_scenario(ROOT / "scenarios" / f"{name}.yaml")
        paths = run_experiment(command, sc, Path(args.out) / name, workers=args.workers)
        print(f"{name:8s} {command:15s} {summarise(command, paths)}")


if __name__ == "__main__":
    main()
