#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Copula-Based Joint Densities

Joint laws assembled by the chain rule f(x, y) = c(F(x), G(y)) f(x) g(y):
(X, Y) from the one-bit marginals and (X^2, Y^2) from the Gamma moment fits.
"""

import logging
from typing import Union

import numpy as np
from scipy import stats

from ..marginals import cdf_x, cdf_y, pdf_x, pdf_y
from ..moments.gamma_fit import GammaFit
from .fgm import FgmTheta, as_theta

logger = logging.getLogger(__name__)

Number = Union[float, np.ndarray]


def _as_output(values: np.ndarray, x: Number, y: Number) -> Number:
    if np.ndim(x) == 0 and np.ndim(y) == 0:
        return float(values)
    return values


def joint_pdf_xy_onebit(x: Number, y: Number, elements: int, theta: Union[FgmTheta, float],
                        scale: float = 1.0) -> Number:
    """
    Joint density of (X, Y) under one-bit quantization.

    Args:
        x: In-phase value(s), x >= 0
        y: Quadrature value(s)
        elements: Number of RIS elements M
        theta: FGM dependence parameter
        scale: Marginal scale (1 for the standardized law)

    Returns:
        f_X(x) f_Y(y) (1 + theta (2F_X(x) - 1)(2F_Y(y) - 1))
    """
    t = as_theta(theta).theta
    xx = np.asarray(x, dtype=float)
    if np.any(xx < 0):
        raise ValueError(f"joint_pdf_xy_onebit is defined for x >= 0, got {x}")
    yy = np.asarray(y, dtype=float)
    product = pdf_x(elements, xx, scale) * pdf_y(elements, yy, scale)
    if t == 0.0:
        return _as_output(product, x, y)
    copula = 1.0 + t * (2.0 * cdf_x(elements, xx, scale) - 1.0) * (2.0 * cdf_y(elements, yy, scale) - 1.0)
    return _as_output(product * copula, x, y)


def joint_pdf_x2y2_gamma(x: Number, y: Number, fit_x: GammaFit, fit_y: GammaFit,
                         theta: Union[FgmTheta, float]) -> Number:
    """
    Joint density of (X^2, Y^2) with Gamma margins and FGM dependence.

    Args:
        x: X^2 value(s), >= 0
        y: Y^2 value(s), >= 0
        fit_x: Gamma fit of X^2
        fit_y: Gamma fit of Y^2
        theta: FGM dependence parameter

    Returns:
        f(x) g(y) (1 + theta (2F(x) - 1)(2G(y) - 1))
    """
    t = as_theta(theta).theta
    xx = np.asarray(x, dtype=float)
    yy = np.asarray(y, dtype=float)
    if np.any(xx < 0) or np.any(yy < 0):
        raise ValueError(f"joint_pdf_x2y2_gamma is defined on the positive quadrant, got ({x}, {y})")
    law_x = stats.gamma(fit_x.shape, scale=fit_x.scale)
    law_y = stats.gamma(fit_y.shape, scale=fit_y.scale)
    product = law_x.pdf(xx) * law_y.pdf(yy)
    if t == 0.0:
        return _as_output(product, x, y)
    copula = 1.0 + t * (2.0 * law_x.cdf(xx) - 1.0) * (2.0 * law_y.cdf(yy) - 1.0)
    return _as_output(product * copula, x, y)
