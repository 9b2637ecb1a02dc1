#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
RIS Channel Sampler

Monte-Carlo oracle for the RIS link:

    X = sum_i |h_i||g_i| cos(theta_i),   Y = sum_i |h_i||g_i| sin(theta_i)

with Rayleigh envelopes and theta_i uniform on [-pi/L, pi/L]. Samples are drawn
in fixed-size blocks, each from its own SeedSequence child, and block partials
are reduced in block order, so results do not depend on the thread count.

Within a block the generator is consumed in the same order for every b
(|h|, |g|, then phase uniforms), so runs that differ only in b share their
random numbers.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, NamedTuple, Sequence, Tuple, TypeVar

import numpy as np

from ..settings import worker_count
from .config import McEstimate, SystemConfig

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1 << 16
MIN_OUTAGE_SAMPLES = 10_000

T = TypeVar('T')


class MomentEstimates(NamedTuple):
    """Raw moments E[X^2], E[X^4], E[Y^2], E[Y^4]"""
    x2: McEstimate
    x4: McEstimate
    y2: McEstimate
    y4: McEstimate


def sample_rayleigh(rng: np.random.Generator, size, power: float = 1.0) -> np.ndarray:
    """
    Rayleigh envelopes with E|h|^2 = power by inverse CDF.

    Args:
        rng: Generator to consume
        size: Output shape
        power: Mean square of the envelope

    Returns:
        sqrt(-power * ln(1 - u)) for u uniform on [0, 1)
    """
    u = rng.random(size)
    return np.sqrt(-power * np.log1p(-u))


def sample_xy(config: SystemConfig, rng: np.random.Generator, n_samples: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """
    Draw (X, Y) pairs.

    Args:
        config: Link configuration
        rng: Generator to consume
        n_samples: Number of pairs

    Returns:
        Arrays X (nonnegative for every b) and Y
    """
    shape = (n_samples, config.elements)
    h = sample_rayleigh(rng, shape, config.channel_power)
    g = sample_rayleigh(rng, shape, config.channel_power)
    u = rng.random(shape)
    cascade = h * g

    if config.continuous_phase:
        return cascade.sum(axis=1), np.zeros(n_samples)

    theta = (2.0 * u - 1.0) * (math.pi / config.levels)
    x = (cascade * np.cos(theta)).sum(axis=1)
    y = (cascade * np.sin(theta)).sum(axis=1)
    return x, y


def _block_sizes(n_samples: int) -> List[int]:
    full, rest = divmod(n_samples, BLOCK_SIZE)
    return [BLOCK_SIZE] * full + ([rest] if rest else [])


def _check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < 2 ** 64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def run_blocks(config: SystemConfig, n_samples: int, seed: int,
               reducer: Callable[[np.ndarray, np.ndarray], T]) -> List[T]:
    """
    Apply reducer to each sample block; results come back in block order.

    Args:
        config: Link configuration
        n_samples: Total number of pairs
        seed: Root seed for the SeedSequence
        reducer: Function of (X, Y) for one block

    Returns:
        One reducer result per block
    """
    if n_samples < 1:
        raise ValueError(f"n_samples must be positive, got {n_samples}")
    sizes = _block_sizes(int(n_samples))
    children = np.random.SeedSequence(_check_seed(seed)).spawn(len(sizes))

    def work(index: int) -> T:
        rng = np.random.default_rng(children[index])
        x, y = sample_xy(config, rng, sizes[index])
        return reducer(x, y)

    workers = min(worker_count(), len(sizes))
    logger.debug(f"Sampling {n_samples} pairs in {len(sizes)} blocks on {workers} threads")
    if workers == 1:
        return [work(i) for i in range(len(sizes))]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(work, range(len(sizes))))


def sample_pairs(config: SystemConfig, n_samples: int, seed: int) -> Tuple[np.ndarray, np.ndarray]:
    """All (X, Y) samples of a run, concatenated in block order"""
    blocks = run_blocks(config, n_samples, seed, lambda x, y: (x, y))
    return (np.concatenate([b[0] for b in blocks]),
            np.concatenate([b[1] for b in blocks]))


def sample_gain(config: SystemConfig, n_samples: int, seed: int) -> np.ndarray:
    """Received gain G = X^2 + Y^2 for every sample of a run"""
    blocks = run_blocks(config, n_samples, seed, lambda x, y: x * x + y * y)
    return np.concatenate(blocks)


def _mean_estimate(total: float, total_sq: float, n: int, seed: int) -> McEstimate:
    mean = total / n
    variance = max(total_sq - n * mean * mean, 0.0) / (n - 1) if n > 1 else 0.0
    return McEstimate(value=float(mean), std_error=float(math.sqrt(variance / n)), n_samples=n, seed=seed)


def _proportion_estimate(count: int, n: int, seed: int) -> McEstimate:
    p = count / n
    variance = p * (1.0 - p) * n / (n - 1) if n > 1 else 0.0
    return McEstimate(value=float(p), std_error=float(math.sqrt(variance / n)), n_samples=n, seed=seed)


def estimate_outage(config: SystemConfig, n_samples: int, seed: int) -> McEstimate:
    """
    Fraction of samples with X^2 + Y^2 <= rho_t.

    Args:
        config: Link configuration (threshold and SNR set rho_t)
        n_samples: Number of samples, at least 10^4
        seed: Root seed

    Returns:
        McEstimate of the outage probability
    """
    if n_samples < MIN_OUTAGE_SAMPLES:
        raise ValueError(f"Outage estimation needs at least {MIN_OUTAGE_SAMPLES} samples, got {n_samples}")
    rho_t = config.normalized_threshold
    counts = run_blocks(config, n_samples, seed, lambda x, y: int(np.count_nonzero(x * x + y * y <= rho_t)))
    estimate = _proportion_estimate(sum(counts), int(n_samples), int(seed))
    logger.debug(f"MC outage M={config.elements} b={config.bits} rho_t={rho_t:.4g}: {estimate.value:.4g}")
    return estimate


def estimate_outage_curve(config: SystemConfig, transmit_snrs: Sequence[float],
                          n_samples: int, seed: int) -> List[McEstimate]:
    """
    Outage at several transmit SNRs from one common sample set.

    Args:
        config: Link configuration (transmit_snr is ignored)
        transmit_snrs: Linear rho_S values
        n_samples: Number of samples, at least 10^4
        seed: Root seed

    Returns:
        One McEstimate per SNR, in input order
    """
    if n_samples < MIN_OUTAGE_SAMPLES:
        raise ValueError(f"Outage estimation needs at least {MIN_OUTAGE_SAMPLES} samples, got {n_samples}")
    gain = np.sort(sample_gain(config, n_samples, seed))
    estimates = []
    for snr in transmit_snrs:
        rho_t = config.with_transmit_snr(float(snr)).normalized_threshold
        count = int(np.searchsorted(gain, rho_t, side='right'))
        estimates.append(_proportion_estimate(count, len(gain), int(seed)))
    return estimates


def estimate_moments(config: SystemConfig, n_samples: int, seed: int) -> MomentEstimates:
    """
    Raw second and fourth moments of X and Y.

    Args:
        config: Link configuration
        n_samples: Number of samples
        seed: Root seed

    Returns:
        MomentEstimates (x2, x4, y2, y4)
    """
    def reducer(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x2, y2 = x * x, y * y
        x4, y4 = x2 * x2, y2 * y2
        return np.array([x2.sum(), (x2 * x2).sum(), x4.sum(), (x4 * x4).sum(),
                         y2.sum(), (y2 * y2).sum(), y4.sum(), (y4 * y4).sum()])

    totals = np.zeros(8)
    for partial in run_blocks(config, n_samples, seed, reducer):
        totals += partial
    n, seed = int(n_samples), int(seed)
    return MomentEstimates(
        x2=_mean_estimate(totals[0], totals[1], n, seed),
        x4=_mean_estimate(totals[2], totals[3], n, seed),
        y2=_mean_estimate(totals[4], totals[5], n, seed),
        y4=_mean_estimate(totals[6], totals[7], n, seed),
    )


def gain_quantile(config: SystemConfig, probability: float, n_samples: int, seed: int) -> float:
    """Empirical quantile of G = X^2 + Y^2"""
    if not 0 < probability < 1:
        raise ValueError(f"probability must lie in (0, 1), got {probability}")
    return float(np.quantile(sample_gain(config, n_samples, seed), probability))


def quantization_power_loss_db(reference: SystemConfig, other: SystemConfig, target: float,
                               n_samples: int, seed: int) -> float:
    """
    Horizontal gap between two outage curves at outage level `target`.

    Outage is P(G <= gamma_th / rho), so the SNR reaching `target` is
    gamma_th / q(target) and the gap in dB is 10 log10(q_ref / q_other).

    Args:
        reference: Configuration of the better curve (e.g. continuous phase)
        other: Configuration compared against it
        target: Outage level, e.g. 1e-2
        n_samples: Samples per curve
        seed: Shared seed (common random numbers)

    Returns:
        Extra SNR in dB that `other` needs to match `reference`
    """
    q_reference = gain_quantile(reference, target, n_samples, seed)
    q_other = gain_quantile(other, target, n_samples, seed)
    loss = 10.0 * math.log10(q_reference / q_other)
    logger.info(f"Power loss at outage {target:g}: {loss:.3f} dB")
    return loss
