#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
One-Bit Outage in Closed Form

With 1 - F_Y(a) = e^(-a) sum_n q_n a^n the inner Y-integral of the outage disc
becomes polynomial-times-exponential in a = sqrt(r - x^2), and every term
reduces to the disc kernel

    T(alpha, beta, n, gamma) = int_0^sqrt(r) x^alpha e^(-beta x)
                               (r - x^2)^(n/2) e^(-gamma sqrt(r - x^2)) dx
                             = r^((alpha+1+n)/2) / 2 * H(beta sqrt(r), gamma sqrt(r))

where H is a bivariate Fox-H function with kernel

    Gamma(s) Gamma((alpha+1-s)/2) Gamma(t) Gamma((n+2-t)/2)
    / Gamma((alpha+n+3-s-t)/2).

Full disc:  O = F_X(sqrt r) - (2/Gamma(M)) sum_n q_n T(M-1, 1, n, 1)

The FGM term integrates to zero over the full disc, so the full-disc value does
not depend on theta. The Y >= 0 half-disc is H0 + theta H1 with

    H0 = F_X(sqrt r)/2 - sum_n q_n T(M-1, 1, n, 1) / Gamma(M)
    H1 = (F_X^2 - F_X)(sqrt r)/4
         - sum_n q_n     [T(M-1, 1, n, 1) - 2 sum_j T(M-1+j, 2, n, 1)/j!] / Gamma(M)
         + sum_n (q*q)_n [T(M-1, 1, n, 2) - 2 sum_j T(M-1+j, 2, n, 2)/j!] / Gamma(M)

with j = 0..M-1 from f_X (2F_X - 1) and (q*q) the coefficient convolution.
"""

import logging
import math
from functools import lru_cache
from typing import Dict, Tuple, Union

import numpy as np
from scipy import special

from ..copula import FgmTheta, as_theta
from ..marginals import cdf_x, laplace_sum_tail_series
from ..montecarlo.config import SystemConfig
from ..specfun import ContourSettings, FoxHBivariateParams, evaluate_bivariate
from .quadrature import ZERO_THRESHOLD, check_onebit, standardized_threshold
from .result import OutageMethod, OutageResult, Region, clipped

logger = logging.getLogger(__name__)

OUTAGE_CONTOUR = ContourSettings(half_height=30.0, nodes=128, tolerance=1e-7)


@lru_cache(maxsize=None)
def disc_kernel_params(alpha: int, n: int) -> FoxHBivariateParams:
    """H-parameters of T(alpha, ., n, .); the rates enter through the arguments"""
    return FoxHBivariateParams(
        joint_lower=((-(alpha + 1 + n) / 2.0, 0.5, 0.5),),
        var1_upper=(((1.0 - alpha) / 2.0, 0.5),),
        var1_lower=((0.0, 1.0),),
        var2_upper=((-n / 2.0, 0.5),),
        var2_lower=((0.0, 1.0),),
        m1=1, n1=1, m2=1, n2=1,
    )


def disc_kernel(alpha: int, beta: float, n: int, gamma: float, r: float,
                contour: ContourSettings = OUTAGE_CONTOUR) -> Tuple[float, float]:
    """
    T(alpha, beta, n, gamma) over the disc of radius sqrt(r).

    Returns:
        (value, contour residual)
    """
    root = math.sqrt(r)
    result = evaluate_bivariate(disc_kernel_params(int(alpha), int(n)), beta * root, gamma * root, contour)
    factor = 0.5 * r ** ((alpha + 1 + n) / 2.0)
    return factor * result.value, factor * result.residual


class _KernelTable:
    """Memoised disc kernels for one threshold, with accumulated residuals"""

    def __init__(self, r: float, contour: ContourSettings):
        self.r = r
        self.contour = contour
        self.values: Dict[Tuple[int, float, int, float], Tuple[float, float]] = {}

    def __call__(self, alpha: int, beta: float, n: int, gamma: float) -> Tuple[float, float]:
        key = (alpha, beta, n, gamma)
        if key not in self.values:
            self.values[key] = disc_kernel(alpha, beta, n, gamma, self.r, self.contour)
        return self.values[key]


def _full_disc(M: int, mass: float, series: np.ndarray, kernels: _KernelTable) -> Tuple[float, float]:
    inv_gamma = math.exp(-special.gammaln(M))
    total, error = 0.0, 0.0
    for n, q in enumerate(series):
        value, residual = kernels(M - 1, 1.0, n, 1.0)
        total += q * value
        error += q * residual
    return mass - 2.0 * inv_gamma * total, 2.0 * inv_gamma * error


def _bracket(M: int, n: int, gamma: float, kernels: _KernelTable) -> Tuple[float, float]:
    """T(M-1, 1, n, gamma) - 2 sum_j T(M-1+j, 2, n, gamma)/j!"""
    value, error = kernels(M - 1, 1.0, n, gamma)
    for j in range(M):
        term, residual = kernels(M - 1 + j, 2.0, n, gamma)
        weight = 2.0 / math.factorial(j)
        value -= weight * term
        error += weight * residual
    return value, error


def _half_disc_slope(M: int, mass: float, series: np.ndarray, kernels: _KernelTable) -> Tuple[float, float]:
    inv_gamma = math.exp(-special.gammaln(M))
    slope = 0.25 * (mass * mass - mass)
    error = 0.0
    for n, q in enumerate(series):
        value, residual = _bracket(M, n, 1.0, kernels)
        slope -= inv_gamma * q * value
        error += inv_gamma * q * residual
    for n, qq in enumerate(np.convolve(series, series)):
        value, residual = _bracket(M, n, 2.0, kernels)
        slope += inv_gamma * qq * value
        error += inv_gamma * qq * residual
    return slope, error


def outage_closed_form_onebit(config: SystemConfig, theta: Union[FgmTheta, float],
                              contour: ContourSettings = OUTAGE_CONTOUR,
                              region: Region = Region.FULL) -> OutageResult:
    """
    One-bit outage from bivariate Fox-H disc kernels.

    Args:
        config: One-bit link configuration
        theta: FGM dependence parameter
        contour: Contour settings for every kernel evaluation
        region: FULL (theta-invariant) or PRINTED (affine in theta)

    Returns:
        OutageResult with method ClosedForm1Bit

    Raises:
        ConvergenceError: If a kernel fails its contour self-convergence check
    """
    check_onebit(config)
    t = as_theta(theta).theta
    region = Region(region)
    if config.normalized_threshold <= ZERO_THRESHOLD:
        return OutageResult(0.0, OutageMethod.CLOSED_FORM_1BIT, 0.0, config, t)

    M = config.elements
    r = standardized_threshold(config)
    mass = cdf_x(M, math.sqrt(r))
    series = np.asarray(laplace_sum_tail_series(M))
    kernels = _KernelTable(r, contour)

    value, error = _full_disc(M, mass, series, kernels)
    if region is Region.PRINTED and t != 0.0:
        slope, slope_error = _half_disc_slope(M, mass, series, kernels)
        value += 2.0 * t * slope
        error += 2.0 * abs(t) * slope_error

    logger.debug(f"ClosedForm1Bit M={M} r={r:.4g} theta={t:.3f} {region.value}: "
                 f"{value:.6g} from {len(kernels.values)} kernels")
    return OutageResult(
        value=clipped(value, 'outage_closed_form_onebit'),
        method=OutageMethod.CLOSED_FORM_1BIT,
        err_estimate=error,
        config=config,
        theta=t,
    )


def half_disc_slope(config: SystemConfig, contour: ContourSettings = OUTAGE_CONTOUR) -> float:
    """d/dtheta of P(X^2 + Y^2 <= rho_t, Y >= 0); zero-threshold gives 0"""
    check_onebit(config)
    if config.normalized_threshold <= ZERO_THRESHOLD:
        return 0.0
    M = config.elements
    r = standardized_threshold(config)
    series = np.asarray(laplace_sum_tail_series(M))
    slope, _ = _half_disc_slope(M, cdf_x(M, math.sqrt(r)), series, _KernelTable(r, contour))
    return slope
