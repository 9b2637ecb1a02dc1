#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FGM Parameter Fitting

Maximum pseudo-likelihood estimate of theta from paired samples. Samples are
mapped to pseudo-observations through analytic margin CDFs or through ranks
i/(n+1); the FGM log-likelihood sum_i ln(1 + theta w_i), w_i = (2u_i-1)(2v_i-1),
is concave in theta, so a bounded scalar search plus an endpoint check finds
the maximiser.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize, stats

from ..errors import DegenerateError
from ..marginals import cdf_x, cdf_y
from ..moments.gamma_fit import GammaFit
from .fgm import FgmTheta

logger = logging.getLogger(__name__)

MIN_FIT_SAMPLES = 1000
PSEUDO_CLIP = 1e-12
GRADIENT_FLOOR = 1e-15

MarginCdf = Callable[[np.ndarray], np.ndarray]


class MarginMode(Enum):
    """How samples become pseudo-observations"""
    ANALYTIC = "analytic"
    RANK = "rank"


@dataclass(frozen=True)
class ThetaFit:
    """Fitted FGM parameter with its pseudo-log-likelihood"""
    theta: FgmTheta
    log_likelihood: float
    n_samples: int
    margin_mode: MarginMode

    def summary(self) -> str:
        return "\n".join([
            f"theta: {self.theta.theta:.12g}",
            f"log_likelihood: {self.log_likelihood:.12g}",
            f"n: {self.n_samples}",
            f"margins: {self.margin_mode.value}",
        ])


def _split_pairs(paired_samples) -> Tuple[np.ndarray, np.ndarray]:
    if isinstance(paired_samples, tuple) and len(paired_samples) == 2 \
            and all(isinstance(part, np.ndarray) and part.ndim == 1 for part in paired_samples):
        x, y = paired_samples
        return x.astype(float), y.astype(float)
    data = np.asarray(paired_samples, dtype=float)
    if data.ndim != 2 or data.shape[1] != 2:
        raise ValueError(f"Expected an (n, 2) array of pairs, got shape {data.shape}")
    return data[:, 0], data[:, 1]


def pseudo_observations(values: np.ndarray, cdf: Optional[MarginCdf] = None) -> np.ndarray:
    """
    Map samples to (0, 1).

    Args:
        values: One coordinate of the samples
        cdf: Analytic margin CDF, or None for ranks i/(n+1)

    Returns:
        Pseudo-observations strictly inside the unit interval
    """
    values = np.asarray(values, dtype=float)
    if cdf is None:
        return stats.rankdata(values) / (values.size + 1.0)
    return np.clip(np.asarray(cdf(values), dtype=float), PSEUDO_CLIP, 1.0 - PSEUDO_CLIP)


def pseudo_log_likelihood(theta: float, weights: np.ndarray) -> float:
    """sum_i ln(1 + theta w_i)"""
    return float(np.sum(np.log1p(theta * weights)))


def fit_theta(paired_samples, margin_cdfs: Optional[Sequence[MarginCdf]] = None) -> ThetaFit:
    """
    Maximum pseudo-likelihood estimate of the FGM parameter.

    Args:
        paired_samples: (n, 2) array of pairs, or a tuple (x_array, y_array)
        margin_cdfs: (F, G) analytic margin CDFs; None selects rank margins

    Returns:
        ThetaFit with theta in [-1, 1]
    """
    x, y = _split_pairs(paired_samples)
    if x.size != y.size:
        raise ValueError(f"Paired samples differ in length: {x.size} vs {y.size}")
    if x.size < MIN_FIT_SAMPLES:
        raise ValueError(f"fit_theta needs at least {MIN_FIT_SAMPLES} pairs, got {x.size}")

    if margin_cdfs is None:
        mode = MarginMode.RANK
        u, v = pseudo_observations(x), pseudo_observations(y)
    else:
        mode = MarginMode.ANALYTIC
        cdf_first, cdf_second = margin_cdfs
        u, v = pseudo_observations(x, cdf_first), pseudo_observations(y, cdf_second)

    weights = (2.0 * u - 1.0) * (2.0 * v - 1.0)
    if np.max(np.abs(weights)) < GRADIENT_FLOOR:
        raise DegenerateError("All pseudo-observation pairs give zero likelihood gradient")

    def gradient(theta: float) -> float:
        return float(np.sum(weights / (1.0 + theta * weights)))

    if gradient(1.0) >= 0.0:
        theta = 1.0
    elif gradient(-1.0) <= 0.0:
        theta = -1.0
    else:
        result = optimize.minimize_scalar(
            lambda t: -pseudo_log_likelihood(t, weights),
            bounds=(-1.0, 1.0),
            method='bounded',
            options={'xatol': 1e-10},
        )
        theta = float(np.clip(result.x, -1.0, 1.0))

    fit = ThetaFit(
        theta=FgmTheta(theta),
        log_likelihood=pseudo_log_likelihood(theta, weights),
        n_samples=int(x.size),
        margin_mode=mode,
    )
    logger.info(f"Fitted theta={fit.theta.theta:.4f} from {fit.n_samples} pairs ({mode.value} margins)")
    return fit


def onebit_margins(elements: int, scale: float = 1.0) -> Tuple[MarginCdf, MarginCdf]:
    """Analytic CDFs of (X, Y) under one-bit quantization"""
    return partial(cdf_x, elements, scale=scale), partial(cdf_y, elements, scale=scale)


def gamma_margins(fit_x: GammaFit, fit_y: GammaFit) -> Tuple[MarginCdf, MarginCdf]:
    """Gamma-fit CDFs of (X^2, Y^2)"""
    return fit_x.cdf, fit_y.cdf
