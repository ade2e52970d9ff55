"""Monte Carlo oracle for the secrecy outage probability.

Samples are split into ``n_substreams`` chunks. Chunk ``k`` of logical stream
``s`` draws from ``SeedSequence(seed, spawn_key=(s, k))`` so the estimate only
depends on ``(seed, n_substreams, n_samples)``; the worker count changes the
schedule, never the numbers. Chunk results are integer outage counts merged by
exact summation.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channel import SnrCoefficients
from .errors import InsufficientSamplesError, InvalidParameterError
from .secrecy import SecrecyParams, secrecy_capacity

DEFAULT_SAMPLES = 1_000_000


@dataclass(frozen=True)
class McConfig:
    n_samples: int = DEFAULT_SAMPLES
    seed: int = 20210901
    n_substreams: int = 16

    def __post_init__(self):
        if self.n_samples < 1000:
            raise InvalidParameterError("n_samples must be >= 1000")
        if not 1 <= self.n_substreams <= self.n_samples:
            raise InvalidParameterError("n_substreams must be in [1, n_samples]")
        if not 0 <= self.seed < 2**64:
            raise InvalidParameterError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class McEstimate:
    value: float
    std_error: float
    n: int


def substream(seed: int, stream: int, chunk: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream, chunk))))


def chunk_sizes(n: int, parts: int) -> list[int]:
    base, extra = divmod(n, parts)
    return [base + (1 if k < extra else 0) for k in range(parts)]


def exponential_from_uniform(u, rate):
    """Inverse-CDF transform of uniforms in [0, 1) to Exp(rate) gains."""
    return -np.log1p(-np.asarray(u)) / rate


def sample_channel_gain(rate: float, rng: np.random.Generator, size=None):
    if not rate > 0:
        raise InvalidParameterError("rate must be positive")
    return exponential_from_uniform(rng.random(size), rate)


def _outage_count(coeffs, params, rng, size):
    h_ab = sample_channel_gain(params.omega_ab, rng, size)
    h_ae = sample_channel_gain(float(params.omega_ae), rng, size)
    cs = secrecy_capacity(coeffs.a * h_ab, coeffs.b * h_ae)
    return int(np.count_nonzero(cs < params.rate_rs))


def empirical_sop(
    coeffs: SnrCoefficients,
    params: SecrecyParams,
    mc: McConfig,
    stream: int = 0,
    workers: int = 1,
) -> McEstimate:
    sizes = chunk_sizes(mc.n_samples, mc.n_substreams)

    def run(k):
        return _outage_count(coeffs, params, substream(mc.seed, stream, k), sizes[k])

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            counts = list(pool.map(run, range(len(sizes))))
    else:
        counts = [run(k) for k in range(len(sizes))]
    n = mc.n_samples
    p = sum(counts) / n
    return McEstimate(p, math.sqrt(p * (1.0 - p) / n), n)


def empirical_delta(
    nj: SnrCoefficients,
    j: SnrCoefficients,
    params: SecrecyParams,
    mc: McConfig,
    stream: int = 0,
    workers: int = 1,
) -> McEstimate:
    """Ratio of two independent SOP estimates (streams ``2s`` and ``2s+1``)."""
    e_nj = empirical_sop(nj, params, mc, 2 * stream, workers)
    e_j = empirical_sop(j, params, mc, 2 * stream + 1, workers)
    return ratio_estimate(e_nj, e_j)


def ratio_estimate(num: McEstimate, den: McEstimate) -> McEstimate:
    """First-order error propagation for the ratio of independent estimates."""
    if den.value == 0:
        raise InsufficientSamplesError("no outage events with jamming; raise n_samples")
    r = num.value / den.value
    rel_num = num.std_error / num.value if num.value > 0 else 0.0
    rel_den = den.std_error / den.value
    return McEstimate(r, r * math.hypot(rel_num, rel_den), min(num.n, den.n))
