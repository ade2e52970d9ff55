"""Improvement fields over the circular region around Alice and the
area metrics built on them: Coverage, Efficiency and WSC.

The region is an annulus ``exclusion_radius <= r <= radius_s`` sampled by a
midpoint polar rule, so ``sum(cell_area)`` reproduces the annulus area up to
rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import EXCLUSION_RADIUS, Mode, SnrCoefficients, ground_fading_rate, snr_coefficients
from .errors import InvalidParameterError
from .secrecy import SecrecyParams, improvement

FIELD_COLUMNS = ("x", "y", "r", "phi", "delta", "cell_area")


@dataclass(frozen=True)
class RegionSpec:
    radius_s: float = 40.0
    exclusion_radius: float = EXCLUSION_RADIUS
    n_radial: int = 64
    n_angular: int = 180

    def __post_init__(self):
        if not self.radius_s > self.exclusion_radius >= 0:
            raise InvalidParameterError("need radius_s > exclusion_radius >= 0")
        if self.n_radial < 8 or self.n_angular < 16:
            raise InvalidParameterError("grid needs n_radial >= 8 and n_angular >= 16")

    @property
    def area(self) -> float:
        return math.pi * (self.radius_s**2 - self.exclusion_radius**2)

    def refined(self, factor: int = 2) -> "RegionSpec":
        return RegionSpec(self.radius_s, self.exclusion_radius, self.n_radial * factor, self.n_angular * factor)


@dataclass(frozen=True)
class PolarGrid:
    """Cell-centre coordinates, shape ``(n_radial, n_angular)``."""

    x: np.ndarray
    y: np.ndarray
    r: np.ndarray
    phi: np.ndarray
    cell_area: np.ndarray


def polar_grid(region: RegionSpec) -> PolarGrid:
    dr = (region.radius_s - region.exclusion_radius) / region.n_radial
    dphi = 2.0 * math.pi / region.n_angular
    radii = region.exclusion_radius + dr * (np.arange(region.n_radial) + 0.5)
    angles = dphi * np.arange(region.n_angular)
    r, phi = np.meshgrid(radii, angles, indexing="ij")
    return PolarGrid(r * np.cos(phi), r * np.sin(phi), r, phi, r * dr * dphi)


@dataclass(frozen=True)
class DeltaField:
    grid: PolarGrid
    delta: np.ndarray
    which: str = "delta"

    def __post_init__(self):
        if np.any(~(self.delta > 0)):
            raise InvalidParameterError("improvement values must be positive")

    @property
    def cell_area(self) -> np.ndarray:
        return self.grid.cell_area

    @property
    def total_area(self) -> float:
        return float(np.sum(self.grid.cell_area))

    @classmethod
    def from_function(cls, region: RegionSpec, fn, which: str = "delta") -> "DeltaField":
        """Field from an analytic ``fn(x, y) -> values``, used to test the quadrature."""
        grid = polar_grid(region)
        values = np.broadcast_to(np.asarray(fn(grid.x, grid.y), dtype=float), grid.r.shape)
        return cls(grid, np.array(values), which)

    def rows(self):
        g = self.grid
        cols = (g.x, g.y, g.r, g.phi, self.delta, g.cell_area)
        return zip(*(c.ravel().tolist() for c in cols))


def field_from_coefficients(grid: PolarGrid, d_ab: float, a_j, b_j, gamma_a: float, rate_rs: float,
                            alpha: float, which: str) -> DeltaField:
    """Build the field from jamming-mode multipliers already evaluated on ``grid``."""
    params = SecrecyParams(rate_rs, ground_fading_rate(d_ab, alpha), ground_fading_rate(grid.r, alpha))
    nj = SnrCoefficients(gamma_a, gamma_a, Mode.NO_JAMMING)
    j = SnrCoefficients(a_j, b_j, Mode.JAMMING)
    return DeltaField(grid, np.asarray(improvement(nj, j, params, which)), which.replace("-", "_"))


def delta_field(scenario, region: RegionSpec | None = None, which: str = "delta") -> DeltaField:
    region = region or scenario.region
    grid = polar_grid(region)
    layout = scenario.layout()
    coeffs = snr_coefficients(layout, (grid.x, grid.y), scenario.powers, scenario.env, Mode.JAMMING)
    return field_from_coefficients(grid, scenario.d_ab, coeffs.a, coeffs.b, scenario.powers.gamma_a,
                                   scenario.rate_rs, scenario.env.alpha, which)


def coverage(field: DeltaField) -> float:
    return float(np.sum(field.cell_area[field.delta > 1.0]))


def efficiency(field: DeltaField) -> float:
    return float(np.sum(field.delta * field.cell_area)) / field.total_area


def wsc(field: DeltaField) -> float:
    return coverage(field) * efficiency(field)


def area_metrics(field: DeltaField) -> dict[str, float]:
    cov, eff = coverage(field), efficiency(field)
    return {"coverage": cov, "efficiency": eff, "wsc": cov * eff, "total_area": field.total_area}
