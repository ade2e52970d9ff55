"""Node placement in the common Cartesian frame.

Alice sits at the origin and Bob at ``(d_ab, 0)``. Jammer angles are measured
from the negative-x ray (behind Alice): jammer 1 opens clockwise into
``y < 0`` and jammer 2 counterclockwise into ``y > 0``.

Eve positions use the ordinary polar convention instead (counterclockwise from
the positive-x ray), see :func:`eve_point`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError

Point = tuple[float, float]


@dataclass(frozen=True)
class JammerAngles:
    theta_j1: float
    theta_j2: float

    def __post_init__(self):
        for name in ("theta_j1", "theta_j2"):
            v = getattr(self, name)
            if not 0.0 <= v <= math.pi:
                raise InvalidParameterError(f"{name}={v} outside [0, pi]")

    @property
    def opening(self) -> float:
        return self.theta_j1 + self.theta_j2

    @classmethod
    def symmetric(cls, opening: float) -> "JammerAngles":
        return cls(opening / 2.0, opening / 2.0)


@dataclass(frozen=True)
class NodeLayout:
    alice: Point
    bob: Point
    jammer1_ground: Point
    jammer2_ground: Point
    z_j1: float
    z_j2: float

    @property
    def d_ab(self) -> float:
        return self.bob[0]

    @property
    def jammers(self) -> tuple[tuple[Point, float], tuple[Point, float]]:
        return ((self.jammer1_ground, self.z_j1), (self.jammer2_ground, self.z_j2))


def place_nodes(d_ab: float, r_j: float, angles: JammerAngles, z_j1: float, z_j2: float) -> NodeLayout:
    """Build the canonical layout from the cylindrical jammer parameters."""
    for name, v in (("d_ab", d_ab), ("r_j", r_j), ("z_j1", z_j1), ("z_j2", z_j2)):
        if not v > 0:
            raise InvalidParameterError(f"{name} must be positive, got {v}")
    j1 = (-r_j * math.cos(angles.theta_j1), -r_j * math.sin(angles.theta_j1))
    j2 = (-r_j * math.cos(angles.theta_j2), r_j * math.sin(angles.theta_j2))
    return NodeLayout((0.0, 0.0), (float(d_ab), 0.0), j1, j2, float(z_j1), float(z_j2))


def eve_point(r: float, phi: float) -> Point:
    """Eve at radius ``r`` and angle ``phi`` counterclockwise from +x."""
    return (r * math.cos(phi), r * math.sin(phi))


def horizontal_distance(p, q):
    """Euclidean ground distance. Accepts scalars or broadcastable arrays."""
    d = np.hypot(np.subtract(p[0], q[0]), np.subtract(p[1], q[1]))
    return float(d) if np.ndim(d) == 0 else d
