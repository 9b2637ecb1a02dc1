#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
One-Bit Outage by Direct Quadrature

The authoritative route: the copula joint density of (X, Y) integrated over the
outage disc X^2 + Y^2 <= rho_t by iterated adaptive Gauss-Kronrod rules. The
outer variable is u = sqrt(x) (so the x^(-1/2) factor of the X^2 form never
appears), the inner y-integral is split at the density kink y = 0.

Everything runs in standardized units: X ~ Gamma(M, 1), Y the unit Laplace sum,
threshold r = rho_t / s^2 with s = channel_power / 2.
"""

import logging
import math
from typing import Callable, Tuple, Union

from scipy import integrate

from ..copula import FgmTheta, as_theta, joint_pdf_xy_onebit
from ..errors import ConvergenceError
from ..marginals import cdf_x
from ..montecarlo.config import SystemConfig
from .result import ZERO_THRESHOLD, OutageMethod, OutageResult, Region, clipped

logger = logging.getLogger(__name__)

OUTER_EPSREL = 1e-6
OUTER_EPSABS = 1e-8
INNER_EPSREL = 1e-9
INNER_EPSABS = 1e-14
QUAD_LIMIT = 200
TOLERANCE_SLACK = 100.0


def adaptive_quad(func: Callable[[float], float], lower: float, upper: float, label: str,
                  epsabs: float, epsrel: float, **kwargs) -> Tuple[float, float]:
    """
    scipy quad with failures turned into ConvergenceError.

    Round-off and subdivision warnings are tolerated when the reported error
    still sits within TOLERANCE_SLACK times the requested tolerance.

    Returns:
        (value, absolute error estimate)
    """
    result = integrate.quad(func, lower, upper, epsabs=epsabs, epsrel=epsrel,
                            limit=QUAD_LIMIT, full_output=1, **kwargs)
    value, error = float(result[0]), float(result[1])
    if len(result) > 3:
        budget = TOLERANCE_SLACK * max(epsabs, epsrel * abs(value))
        if not math.isfinite(value) or error > budget:
            raise ConvergenceError(f"{label}: {result[3]}", value=value, residual=error)
        logger.debug(f"{label}: accepted with warning ({error:.2e} within budget {budget:.2e})")
    return value, error


def standardized_threshold(config: SystemConfig) -> float:
    """r = rho_t / s^2"""
    return config.normalized_threshold / config.onebit_scale ** 2


def check_onebit(config: SystemConfig) -> None:
    if config.continuous_phase or config.bits != 1:
        raise ValueError(f"One-bit routes need bits=1 with quantized phase, got bits={config.bits}"
                         f"{' (continuous phase)' if config.continuous_phase else ''}")


def outage_quadrature_onebit(config: SystemConfig, theta: Union[FgmTheta, float],
                             region: Region = Region.FULL) -> OutageResult:
    """
    One-bit outage by 2-D adaptive quadrature of the FGM joint density.

    Args:
        config: One-bit link configuration
        theta: FGM dependence parameter
        region: FULL (the outage event) or PRINTED (twice the Y >= 0 half)

    Returns:
        OutageResult with method Quadrature1Bit
    """
    check_onebit(config)
    t = as_theta(theta).theta
    region = Region(region)
    rho_t = config.normalized_threshold
    if rho_t <= ZERO_THRESHOLD:
        return OutageResult(0.0, OutageMethod.QUADRATURE_1BIT, 0.0, config, t)

    M = config.elements
    r = standardized_threshold(config)
    root = math.sqrt(r)
    mass = cdf_x(M, root)
    if mass <= 0.0:
        return OutageResult(0.0, OutageMethod.QUADRATURE_1BIT, 0.0, config, t)

    inner_error = [0.0]

    def inner(u: float) -> float:
        a = math.sqrt(max(r - u * u, 0.0))
        if a == 0.0:
            return 0.0

        def density(y: float) -> float:
            return joint_pdf_xy_onebit(u, y, M, t)

        upper, err_upper = adaptive_quad(density, 0.0, a, 'inner y >= 0', INNER_EPSABS, INNER_EPSREL)
        if region is Region.PRINTED:
            inner_error[0] = max(inner_error[0], 2.0 * err_upper)
            return 2.0 * upper
        lower, err_lower = adaptive_quad(density, -a, 0.0, 'inner y <= 0', INNER_EPSABS, INNER_EPSREL)
        inner_error[0] = max(inner_error[0], err_upper + err_lower)
        return upper + lower

    value, error = adaptive_quad(inner, 0.0, root, 'outer u', OUTER_EPSABS * mass, OUTER_EPSREL)
    error += inner_error[0] * root
    logger.debug(f"Quadrature1Bit M={M} r={r:.4g} theta={t:.3f} {region.value}: {value:.6g} (+/- {error:.2e})")
    return OutageResult(
        value=clipped(value, 'outage_quadrature_onebit'),
        method=OutageMethod.QUADRATURE_1BIT,
        err_estimate=error,
        config=config,
        theta=t,
    )
