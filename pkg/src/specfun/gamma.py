#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Gamma Function Helpers

Complex log-gamma with pole detection and the incomplete gamma functions used
by the marginal laws and the Mellin-Barnes kernels.
"""

import logging
import math
from typing import Union

import numpy as np
from scipy import special

from ..errors import PoleError

logger = logging.getLogger(__name__)

POLE_TOLERANCE = 1e-12

ArrayLike = Union[float, complex, np.ndarray]


def _is_pole(z: complex, tolerance: float = POLE_TOLERANCE) -> bool:
    if abs(z.imag) > tolerance or z.real > tolerance:
        return False
    return abs(z.real - round(z.real)) <= tolerance


def ln_gamma_complex(z: complex) -> complex:
    """
    Principal branch of log Gamma(z).

    Args:
        z: Complex argument, not a nonpositive integer

    Returns:
        log Gamma(z) with the imaginary part continuous off the negative axis
    """
    z = complex(z)
    if _is_pole(z):
        raise PoleError(f"Gamma has a pole at z={z}")
    return complex(special.loggamma(z))


def log_gamma_array(z: np.ndarray) -> np.ndarray:
    """Vectorised complex log-gamma; callers keep their contours off the poles"""
    return special.loggamma(np.asarray(z, dtype=complex))


def upper_incomplete_gamma(a: float, x: float) -> float:
    """
    Non-regularised upper incomplete gamma Gamma(a, x).

    Args:
        a: Shape, a > 0
        x: Lower limit, x >= 0

    Returns:
        Integral of t^(a-1) e^(-t) over [x, inf)
    """
    if a <= 0:
        raise ValueError(f"Shape must be positive, got a={a}")
    if x < 0:
        raise ValueError(f"Argument must be nonnegative, got x={x}")
    q = special.gammaincc(a, x)
    if q == 0.0:
        return 0.0
    return math.exp(math.log(q) + special.gammaln(a))


def lower_incomplete_gamma(a: float, x: float) -> float:
    """Non-regularised lower incomplete gamma gamma(a, x)"""
    if a <= 0:
        raise ValueError(f"Shape must be positive, got a={a}")
    if x < 0:
        raise ValueError(f"Argument must be nonnegative, got x={x}")
    p = special.gammainc(a, x)
    if p == 0.0:
        return 0.0
    return math.exp(math.log(p) + special.gammaln(a))


def regularized_upper_gamma(a: ArrayLike, x: ArrayLike) -> np.ndarray:
    """Q(a, x) = Gamma(a, x) / Gamma(a), broadcasting"""
    return special.gammaincc(a, x)


def regularized_lower_gamma(a: ArrayLike, x: ArrayLike) -> np.ndarray:
    """P(a, x) = gamma(a, x) / Gamma(a), broadcasting"""
    return special.gammainc(a, x)
