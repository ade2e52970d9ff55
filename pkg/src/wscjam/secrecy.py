"""Closed-form secrecy outage probability and the jamming improvement ratios.

Functions broadcast over numpy arrays so a whole Eve grid can be evaluated in
one call.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import Mode, SnrCoefficients
from .errors import InvalidParameterError, NumericalGuardError

DEFAULT_RATE = 1.0


@dataclass(frozen=True)
class SecrecyParams:
    rate_rs: float
    omega_ab: float
    omega_ae: float | np.ndarray

    def __post_init__(self):
        if not self.rate_rs > 0:
            raise InvalidParameterError("secrecy rate must be positive")
        if not self.omega_ab > 0 or np.any(np.asarray(self.omega_ae) <= 0):
            raise InvalidParameterError("fading rates must be positive")


def secrecy_capacity(gamma_b, gamma_e):
    c = np.maximum(0.0, np.log2((1.0 + np.asarray(gamma_b)) / (1.0 + np.asarray(gamma_e))))
    return float(c) if c.ndim == 0 else c


def log_secrecy_probability(coeffs: SnrCoefficients, params: SecrecyParams):
    """``log(1 - SOP)``.

    1 - SOP = exp(-(W_ab/a)(2^R - 1)) / (1 + 2^R (W_ab/W_ae)(b/a)).
    """
    two_r = 2.0**params.rate_rs
    a = np.asarray(coeffs.a, dtype=float)
    b = np.asarray(coeffs.b, dtype=float)
    k = params.omega_ab / a * (two_r - 1.0)
    c = two_r * (params.omega_ab / np.asarray(params.omega_ae)) * (b / a)
    return -(k + np.log1p(c))


def sop_closed_form(coeffs: SnrCoefficients, params: SecrecyParams):
    sop = -np.expm1(log_secrecy_probability(coeffs, params))
    sop = np.clip(sop, 0.0, 1.0)
    return float(sop) if sop.ndim == 0 else sop


def _check_modes(nj: SnrCoefficients, j: SnrCoefficients):
    if nj.mode is not Mode.NO_JAMMING or j.mode is not Mode.JAMMING:
        raise InvalidParameterError("expected (no-jamming, jamming) coefficient pair")


def delta(nj: SnrCoefficients, j: SnrCoefficients, params: SecrecyParams):
    """SOP without jamming over SOP with jamming; > 1 where jamming helps."""
    _check_modes(nj, j)
    sop_nj = np.asarray(sop_closed_form(nj, params))
    sop_j = np.asarray(sop_closed_form(j, params))
    if np.any(sop_j <= 0):
        raise NumericalGuardError("SOP with jamming is zero; ratio undefined")
    out = sop_nj / sop_j
    return float(out) if out.ndim == 0 else out


def delta_bar(nj: SnrCoefficients, j: SnrCoefficients, params: SecrecyParams):
    """Ratio of secrecy-achieving probabilities (1 - SOP_J) / (1 - SOP_NJ).

    Crosses 1 exactly where :func:`delta` does.
    """
    _check_modes(nj, j)
    out = np.exp(log_secrecy_probability(j, params) - log_secrecy_probability(nj, params))
    return float(out) if out.ndim == 0 else out


def improvement(nj: SnrCoefficients, j: SnrCoefficients, params: SecrecyParams, which: str):
    """Dispatch on ``which`` in {"delta", "delta_bar"}."""
    which = which.replace("-", "_")
    if which == "delta":
        return delta(nj, j, params)
    if which == "delta_bar":
        return delta_bar(nj, j, params)
    raise InvalidParameterError(f"unknown improvement metric {which!r}")
