#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Goodness of Fit

Kolmogorov-Smirnov distance between Monte-Carlo samples and an analytic CDF.
"""

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import stats

logger = logging.getLogger(__name__)

KS_PASS_THRESHOLD = 0.002


@dataclass(frozen=True)
class KsResult:
    """Two-sided KS statistic with its asymptotic p-value"""
    distance: float
    pvalue: float
    n_samples: int

    def passes(self, threshold: float = KS_PASS_THRESHOLD) -> bool:
        return self.distance < threshold


def ks_test(samples, cdf: Callable[[np.ndarray], np.ndarray]) -> KsResult:
    """
    Compare samples with a continuous CDF.

    Args:
        samples: One-dimensional sample (any order)
        cdf: Vectorised CDF

    Returns:
        KsResult with the sup-norm distance between empirical and model CDF
    """
    data = np.asarray(samples, dtype=float).ravel()
    if data.size == 0:
        raise ValueError("KS distance needs at least one sample")
    result = stats.kstest(data, cdf)
    return KsResult(distance=float(result.statistic), pvalue=float(result.pvalue), n_samples=int(data.size))


def ks_distance(samples, cdf: Callable[[np.ndarray], np.ndarray]) -> float:
    """Sup-norm distance between the empirical CDF of samples and cdf, in [0, 1]"""
    return ks_test(samples, cdf).distance
