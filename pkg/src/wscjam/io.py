"""CSV and manifest writers. Floats use ``repr`` so reruns are byte-identical."""

from __future__ import annotations

import csv
import hashlib
import json
from pathlib import Path

from .area_metrics import FIELD_COLUMNS, DeltaField


def _fmt(v):
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_table(path: Path, header, rows, meta: dict | None = None) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        for key, value in (meta or {}).items():
            fh.write(f"# {key}: {value}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])
    return path


def read_table(path: Path) -> tuple[dict, list[str], list[list[str]]]:
    meta, lines = {}, []
    for line in Path(path).read_text().splitlines():
        if line.startswith("# "):
            k, _, v = line[2:].partition(": ")
            meta[k] = v
        else:
            lines.append(line)
    rows = list(csv.reader(lines))
    return meta, rows[0], rows[1:]


def write_sweep(path: Path, result, meta: dict | None = None) -> Path:
    """``axis..., metric`` rows with the argmax recorded in the comment header."""
    meta = dict(meta or {})
    meta.update(axis_name=result.axis_name, argmax_value=result.argmax_value, argmax_metric=repr(result.argmax_metric))
    rows = []
    for v, m in zip(result.axis_values, result.metric_values):
        rows.append([*(v if isinstance(v, tuple) else (v,)), m])
    return write_table(path, [*result.axis_names, "metric"], rows, meta)


def write_field(path: Path, field: DeltaField, meta: dict) -> tuple[Path, Path]:
    path = Path(path)
    write_table(path, FIELD_COLUMNS, field.rows())
    sidecar = path.with_suffix(".meta.json")
    sidecar.write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")
    return path, sidecar


def sha256_file(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def write_manifest(path: Path, info: dict, files) -> Path:
    info = dict(info)
    info["files"] = [{"name": Path(f).name, "sha256": sha256_file(f)} for f in sorted(files, key=lambda p: Path(p).name)]
    Path(path).write_text(json.dumps(info, sort_keys=True, indent=2) + "\n")
    return Path(path)
