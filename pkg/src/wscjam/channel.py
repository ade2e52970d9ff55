"""Ground Rayleigh links, probabilistic-LoS air-to-ground pathloss and the
received-SNR multipliers ``(a, b)`` for Bob and Eve.

All SNR quantities are linear ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateGeometryError, InvalidParameterError
from .geometry import NodeLayout, horizontal_distance

# Eve closer than this to Alice makes the Alice-Eve fading rate degenerate.
EXCLUSION_RADIUS = 0.5


@dataclass(frozen=True)
class EnvConstants:
    """Urban defaults."""

    psi: float = 9.61
    omega: float = 0.16
    alpha: float = 0.3
    alpha_j: float = 0.3
    eta_los: float = 1.0
    eta_nlos: float = 20.0

    def __post_init__(self):
        for name in ("psi", "omega", "alpha", "alpha_j"):
            if not getattr(self, name) > 0:
                raise InvalidParameterError(f"{name} must be positive")
        if not self.eta_los >= 1:
            raise InvalidParameterError("eta_los must be >= 1")
        if not self.eta_nlos >= self.eta_los:
            raise InvalidParameterError("eta_nlos must be >= eta_los")


@dataclass(frozen=True)
class TransmitPowers:
    gamma_a: float = 15.0
    gamma_j1: float = 15.0
    gamma_j2: float = 15.0

    def __post_init__(self):
        if not self.gamma_a > 0:
            raise InvalidParameterError("gamma_a must be positive")
        if self.gamma_j1 < 0 or self.gamma_j2 < 0:
            raise InvalidParameterError("jamming SNRs must be non-negative")


class Mode(str, Enum):
    NO_JAMMING = "no-jamming"
    JAMMING = "jamming"


@dataclass(frozen=True)
class SnrCoefficients:
    """``gamma_B = a |h_AB|^2`` and ``gamma_E = b |h_AE|^2``.

    ``b`` may be an array when Eve is a grid of points.
    """

    a: float | np.ndarray
    b: float | np.ndarray
    mode: Mode


def db_to_linear(x):
    return 10.0 ** (np.asarray(x, dtype=float) / 10.0)


def los_probability(z, r, env: EnvConstants):
    if np.any(np.asarray(z) <= 0):
        raise InvalidParameterError("jammer height must be positive")
    elevation = np.degrees(np.arctan2(z, r))
    return 1.0 / (1.0 + env.psi * np.exp(-env.omega * (elevation - env.psi)))


def a2g_pathloss(z, r, env: EnvConstants):
    """Average air-to-ground pathloss L (linear, >= 1 for distances >= 1)."""
    p_los = los_probability(z, r, env)
    p_nlos = 1.0 - p_los
    dist = (np.square(z) + np.square(r)) ** (env.alpha_j / 2.0)
    return dist * (p_los * env.eta_los + p_nlos * env.eta_nlos)


def ground_fading_rate(d, alpha: float):
    """Rate of the exponential channel gain, mean ``d**-alpha``."""
    d = np.asarray(d, dtype=float)
    if np.any(d <= 0):
        raise DegenerateGeometryError("ground link distance must be positive")
    out = d**alpha
    return float(out) if out.ndim == 0 else out


def jamming_term(jammer_ground, z_j: float, gamma_j: float, receiver, env: EnvConstants):
    """``gamma_j / L`` seen by ``receiver`` (point or arrays of x, y)."""
    if gamma_j == 0:
        return np.zeros(np.broadcast(np.asarray(receiver[0]), np.asarray(receiver[1])).shape)
    r = horizontal_distance(receiver, jammer_ground)
    return gamma_j / a2g_pathloss(z_j, r, env)


def snr_coefficients(
    layout: NodeLayout,
    eve,
    powers: TransmitPowers,
    env: EnvConstants,
    mode: Mode = Mode.JAMMING,
    exclusion_radius: float = EXCLUSION_RADIUS,
) -> SnrCoefficients:
    mode = Mode(mode)
    d_ae = horizontal_distance(eve, layout.alice)
    if np.any(np.asarray(d_ae) < exclusion_radius) or np.any(np.asarray(d_ae) <= 0):
        raise DegenerateGeometryError(f"Eve within {exclusion_radius} m of Alice")
    g = powers.gamma_a
    if mode is Mode.NO_JAMMING:
        b = g if np.ndim(d_ae) == 0 else np.full(np.shape(d_ae), g)
        return SnrCoefficients(g, b, mode)
    gammas = (powers.gamma_j1, powers.gamma_j2)
    bob_terms = sum(
        jamming_term(pos, z, gj, layout.bob, env) for (pos, z), gj in zip(layout.jammers, gammas)
    )
    eve_terms = sum(
        jamming_term(pos, z, gj, eve, env) for (pos, z), gj in zip(layout.jammers, gammas)
    )
    a = g / (1.0 + bob_terms)
    b = g / (1.0 + eve_terms)
    return SnrCoefficients(float(a), float(b) if np.ndim(b) == 0 else b, mode)

