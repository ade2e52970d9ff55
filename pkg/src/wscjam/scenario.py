"""Scenario records and their YAML form.

A scenario file is a YAML mapping. Every section is optional except ``d_ab``;
missing keys take the Urban defaults. Unknown keys are rejected. Angles are
given in degrees, SNRs as linear ratios unless ``snr_unit: db``.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .area_metrics import RegionSpec
from .channel import EnvConstants, TransmitPowers, db_to_linear
from .errors import ConfigError, InvalidParameterError
from .geometry import JammerAngles, NodeLayout, place_nodes
from .montecarlo import McConfig
from .secrecy import DEFAULT_RATE


@dataclass(frozen=True)
class JammerConfig:
    r_j: float = 7.0
    theta_j1_deg: float = 0.0
    theta_j2_deg: float = 0.0
    z_j1: float = 13.2
    z_j2: float = 13.2

    @property
    def angles(self) -> JammerAngles:
        return JammerAngles(math.radians(self.theta_j1_deg), math.radians(self.theta_j2_deg))

    def __post_init__(self):
        self.angles  # range check
        if not (self.r_j > 0 and self.z_j1 > 0 and self.z_j2 > 0):
            raise InvalidParameterError("r_j and heights must be positive")


@dataclass(frozen=True)
class PowerBudget:
    """Total SNR budget split between Alice and the two jammers.

    ``jammer_ratio`` is min/max of the two jamming SNRs; jammer 1 takes the
    larger share, so ratio 0 puts everything on jammer 1.
    """

    gamma_t: float
    alice_share: float = 0.5
    jammer_ratio: float = 1.0

    def __post_init__(self):
        if not self.gamma_t > 0:
            raise InvalidParameterError("gamma_t must be positive")
        if not 0 < self.alice_share <= 1:
            raise InvalidParameterError("alice_share must be in (0, 1]")
        if not 0 <= self.jammer_ratio <= 1:
            raise InvalidParameterError("jammer_ratio must be in [0, 1]")

    def powers(self) -> TransmitPowers:
        jam = (1.0 - self.alice_share) * self.gamma_t
        q = self.jammer_ratio
        return TransmitPowers(self.alice_share * self.gamma_t, jam / (1.0 + q), jam * q / (1.0 + q))


@dataclass(frozen=True)
class SweepSpec:
    """Axes for the figure-level experiments."""

    heights: tuple[float, ...] = (1.0, 3.0, 5.0, 7.0, 9.0, 11.0, 13.2, 15.0, 17.0, 20.0, 25.0)
    angle_step_deg: float = 2.0
    ratios: tuple[float, ...] = tuple(k / 10 for k in range(11))
    gamma_t_values: tuple[float, ...] = (10.0, 30.0, 60.0)
    rj_values: tuple[float, ...] = (7.0, 14.0, 21.0, 28.0)
    d_ab_values: tuple[float, ...] = (6.0, 10.0, 14.0, 20.0, 30.0, 39.0)
    theta_step_deg: float = 1.0
    rings: tuple[float, ...] = (5.0, 15.0, 30.0)
    ring_points: int = 36
    mc_check_tuples: int = 20


@dataclass(frozen=True)
class Scenario:
    d_ab: float
    rate_rs: float = DEFAULT_RATE
    powers: TransmitPowers = field(default_factory=TransmitPowers)
    budget: PowerBudget | None = None
    jammers: JammerConfig = field(default_factory=JammerConfig)
    region: RegionSpec = field(default_factory=RegionSpec)
    env: EnvConstants = field(default_factory=EnvConstants)
    mc: McConfig = field(default_factory=McConfig)
    sweeps: SweepSpec = field(default_factory=SweepSpec)

    def __post_init__(self):
        if not self.d_ab > 0:
            raise InvalidParameterError("d_ab must be positive")
        if not self.rate_rs > 0:
            raise InvalidParameterError("rate_rs must be positive")
        if self.budget is not None and self.budget.powers() != self.powers:
            object.__setattr__(self, "powers", self.budget.powers())

    def layout(self) -> NodeLayout:
        j = self.jammers
        return place_nodes(self.d_ab, j.r_j, j.angles, j.z_j1, j.z_j2)

    def replace(self, **changes) -> "Scenario":
        return dataclasses.replace(self, **changes)

    def with_jammers(self, **changes) -> "Scenario":
        return self.replace(jammers=dataclasses.replace(self.jammers, **changes))

    def with_powers(self, **changes) -> "Scenario":
        return self.replace(powers=dataclasses.replace(self.powers, **changes), budget=None)

    def to_dict(self) -> dict:
        return _plain(dataclasses.asdict(self))

    def hash(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


_SECTIONS = {
    "powers": TransmitPowers,
    "budget": PowerBudget,
    "jammers": JammerConfig,
    "region": RegionSpec,
    "env": EnvConstants,
    "mc": McConfig,
    "sweeps": SweepSpec,
}
_TOP_LEVEL = {"d_ab", "rate_rs", "snr_unit", *_SECTIONS}


def _build(cls, name: str, raw) -> object:
    if not isinstance(raw, dict):
        raise ConfigError(f"{name}: expected a mapping")
    known = {f.name: f for f in dataclasses.fields(cls)}
    unknown = sorted(set(raw) - set(known))
    if unknown:
        raise ConfigError(f"{name}: unknown key(s) {', '.join(unknown)}")
    kwargs = {}
    for key, value in raw.items():
        default = known[key].default
        if isinstance(default, tuple):
            if not isinstance(value, list):
                raise ConfigError(f"{name}.{key}: expected a list")
            value = tuple(float(v) for v in value)
        elif isinstance(default, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{name}.{key}: expected a number, got {value!r}")
        elif isinstance(default, int):
            if isinstance(value, float) and not value.is_integer():
                raise ConfigError(f"{name}.{key}: expected an integer")
            value = int(value)
        else:
            value = float(value)
        kwargs[key] = value
    try:
        return cls(**kwargs)
    except InvalidParameterError as exc:
        raise ConfigError(f"{name}: {exc}") from exc
    except TypeError as exc:
        raise ConfigError(f"{name}: {exc}") from exc


def scenario_from_dict(raw: dict) -> Scenario:
    if not isinstance(raw, dict):
        raise ConfigError("scenario: top level must be a mapping")
    unknown = sorted(set(raw) - _TOP_LEVEL)
    if unknown:
        raise ConfigError(f"scenario: unknown key(s) {', '.join(unknown)}")
    if "d_ab" not in raw:
        raise ConfigError("scenario: d_ab is required")
    unit = raw.get("snr_unit", "linear")
    if unit not in ("linear", "db"):
        raise ConfigError("snr_unit: expected 'linear' or 'db'")
    raw = dict(raw)
    if unit == "db":
        for section, keys in (("powers", ("gamma_a", "gamma_j1", "gamma_j2")), ("budget", ("gamma_t",))):
            if isinstance(raw.get(section), dict):
                raw[section] = {
                    k: (float(db_to_linear(v)) if k in keys and isinstance(v, (int, float)) else v)
                    for k, v in raw[section].items()
                }
    kwargs = {}
    for key in ("d_ab", "rate_rs"):
        if key in raw:
            if isinstance(raw[key], bool) or not isinstance(raw[key], (int, float)):
                raise ConfigError(f"{key}: expected a number")
            kwargs[key] = float(raw[key])
    for section, cls in _SECTIONS.items():
        if raw.get(section) is not None:
            kwargs[section] = _build(cls, section, raw[section])
    try:
        return Scenario(**kwargs)
    except InvalidParameterError as exc:
        raise ConfigError(f"scenario: {exc}") from exc


def load_scenario(path) -> Scenario:
    text = Path(path).read_text()
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"parse error in {path}: {exc}") from exc
    return scenario_from_dict(raw)


def dump_scenario(scenario: Scenario, path=None) -> str:
    """Canonical YAML (linear SNRs, every field explicit)."""
    data = scenario.to_dict()
    if data["budget"] is None:
        del data["budget"]
    data["snr_unit"] = "linear"
    text = yaml.safe_dump(data, sort_keys=True)
    if path is not None:
        Path(path).write_text(text)
    return text
