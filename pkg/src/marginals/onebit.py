#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
One-Bit Marginal Laws

Under one-bit quantization each in-phase term x_i = |h_i||g_i|cos(theta_i) is
exponential and each quadrature term y_i = |h_i||g_i|sin(theta_i) is Laplace,
both with scale s = E|h|^2 / 2. The sums are therefore

    X ~ Gamma(M, s)
    Y ~ s * (sum of M unit Laplace variables)

The Laplace-sum density is the polynomial-times-exponential form whose
characteristic function is (1 + w^2)^(-M):

    f_Y(y) = e^(-|y|) / (2^M Gamma(M)) * sum_k c_k |y|^(M-1-k)
    c_k = (M-1+k)! / (2^k k! (M-1-k)!)

Functions take `scale` (default 1) so callers can work in standardized or
physical units.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np
from scipy import special, stats

from ..specfun import regularized_lower_gamma, regularized_upper_gamma

logger = logging.getLogger(__name__)

EXACT_COEFFICIENT_LIMIT = 32
LOG2 = math.log(2.0)

Number = Union[float, np.ndarray]


class Axis(Enum):
    """Component of the received sum"""
    IN_PHASE = "X"
    QUADRATURE = "Y"


def _check_elements(elements: int) -> int:
    if int(elements) != elements or elements < 1:
        raise ValueError(f"elements must be an integer >= 1, got {elements}")
    return int(elements)


def _check_scale(scale: float) -> float:
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale}")
    return float(scale)


def _as_output(values: np.ndarray, template) -> Number:
    if np.ndim(template) == 0:
        return float(values)
    return values


@lru_cache(maxsize=None)
def laplace_sum_log_coefficients(elements: int) -> np.ndarray:
    """
    log c_k for k = 0..M-1.

    Exact rational arithmetic up to M = 32, log-gamma beyond.
    """
    M = _check_elements(elements)
    k = np.arange(M)
    if M <= EXACT_COEFFICIENT_LIMIT:
        values = []
        for index in range(M):
            c = Fraction(math.factorial(M - 1 + index),
                         2 ** index * math.factorial(index) * math.factorial(M - 1 - index))
            values.append(math.log(c.numerator) - math.log(c.denominator))
        coefficients = np.array(values)
    else:
        coefficients = special.gammaln(M + k) - k * LOG2 - special.gammaln(k + 1) - special.gammaln(M - k)
    coefficients.setflags(write=False)
    return coefficients


@lru_cache(maxsize=None)
def laplace_sum_tail_weights(elements: int) -> np.ndarray:
    """
    Weights w_k with 1 - F_Y(y) = sum_k w_k Q(M-k, y) for y >= 0; they sum to 1/2.
    """
    M = _check_elements(elements)
    k = np.arange(M)
    log_w = laplace_sum_log_coefficients(M) + special.gammaln(M - k) - M * LOG2 - special.gammaln(M)
    weights = np.exp(log_w)
    weights.setflags(write=False)
    return weights


@lru_cache(maxsize=None)
def laplace_sum_tail_series(elements: int) -> np.ndarray:
    """
    Coefficients q_n with e^a (1 - F_Y(a)) = sum_n q_n a^n for a >= 0 (unit scale).
    """
    M = _check_elements(elements)
    weights = laplace_sum_tail_weights(M)
    cumulative = np.cumsum(weights)
    n = np.arange(M)
    series = cumulative[M - 1 - n] / special.factorial(n)
    series.setflags(write=False)
    return series


def pdf_y_at_zero(elements: int, scale: float = 1.0) -> float:
    """f_Y(0) = Gamma(M - 1/2) / (2 sqrt(pi) Gamma(M)) / scale"""
    M = _check_elements(elements)
    log_value = special.gammaln(M - 0.5) - special.gammaln(M) - math.log(2.0 * math.sqrt(math.pi))
    return math.exp(log_value) / _check_scale(scale)


def pdf_x(elements: int, x: Number, scale: float = 1.0) -> Number:
    """
    Density of X ~ Gamma(M, scale).

    Args:
        elements: Number of RIS elements M
        x: Point(s), x >= 0
        scale: Gamma scale (1 for the standardized law)

    Returns:
        e^(-x/s) x^(M-1) / (Gamma(M) s^M)
    """
    M = _check_elements(elements)
    values = np.asarray(x, dtype=float)
    if np.any(values < 0):
        raise ValueError(f"pdf_x is defined for x >= 0, got {x}")
    return _as_output(stats.gamma.pdf(values, M, scale=_check_scale(scale)), x)


def cdf_x(elements: int, x: Number, scale: float = 1.0) -> Number:
    """F_X(x) = 1 - Gamma(M, x/s) / Gamma(M)"""
    M = _check_elements(elements)
    values = np.asarray(x, dtype=float)
    if np.any(values < 0):
        raise ValueError(f"cdf_x is defined for x >= 0, got {x}")
    return _as_output(regularized_lower_gamma(M, values / _check_scale(scale)), x)


def pdf_y(elements: int, y: Number, scale: float = 1.0) -> Number:
    """
    Density of the scaled Laplace sum Y; symmetric about zero.

    Args:
        elements: Number of RIS elements M
        y: Point(s) on the real line
        scale: Laplace scale of each term

    Returns:
        f_Y(y)
    """
    M = _check_elements(elements)
    scale = _check_scale(scale)
    magnitude = np.abs(np.asarray(y, dtype=float)) / scale
    exponents = M - 1 - np.arange(M)
    log_terms = laplace_sum_log_coefficients(M) + special.xlogy(exponents, magnitude[..., None])
    log_density = (special.logsumexp(log_terms, axis=-1) - magnitude
                   - M * LOG2 - special.gammaln(M) - math.log(scale))
    return _as_output(np.exp(log_density), y)


def cdf_y(elements: int, y: Number, scale: float = 1.0) -> Number:
    """
    F_Y(y) by term-wise incomplete-gamma integration, extended to y < 0 by symmetry.

    Args:
        elements: Number of RIS elements M
        y: Point(s) on the real line
        scale: Laplace scale of each term

    Returns:
        F_Y(y), with F_Y(0) = 1/2
    """
    M = _check_elements(elements)
    values = np.asarray(y, dtype=float)
    magnitude = np.abs(values) / _check_scale(scale)
    shapes = M - np.arange(M)
    tail = (laplace_sum_tail_weights(M) * regularized_upper_gamma(shapes, magnitude[..., None])).sum(axis=-1)
    return _as_output(np.where(values >= 0, 1.0 - tail, tail), y)


@dataclass(frozen=True)
class OneBitMarginal:
    """Marginal law of one component of the one-bit received sum"""
    elements: int
    axis: Axis
    scale: float = 1.0

    def __post_init__(self):
        _check_elements(self.elements)
        _check_scale(self.scale)
        if not isinstance(self.axis, Axis):
            object.__setattr__(self, 'axis', Axis(self.axis))

    @property
    def support_lower(self) -> float:
        return 0.0 if self.axis is Axis.IN_PHASE else -math.inf

    def pdf(self, value: Number) -> Number:
        if self.axis is Axis.IN_PHASE:
            return pdf_x(self.elements, value, self.scale)
        return pdf_y(self.elements, value, self.scale)

    def cdf(self, value: Number) -> Number:
        if self.axis is Axis.IN_PHASE:
            return cdf_x(self.elements, value, self.scale)
        return cdf_y(self.elements, value, self.scale)

    def mean_square(self) -> float:
        """E[X^2] = M(M+1)s^2 or E[Y^2] = 2Ms^2"""
        M, s = self.elements, self.scale
        if self.axis is Axis.IN_PHASE:
            return M * (M + 1) * s * s
        return 2.0 * M * s * s
