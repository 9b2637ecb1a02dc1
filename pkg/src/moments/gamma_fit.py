#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Gamma Moment Matching

X^2 and Y^2 are approximated by Gamma laws whose first two moments match
E[Z^2] and E[Z^4]:

    shape = m2^2 / (m4 - m2^2)
    scale = (m4 - m2^2) / m2
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np
from scipy import stats

from ..errors import DegenerateError
from ..marginals.onebit import Axis
from .closed_form import fourth_moment, mean_square

logger = logging.getLogger(__name__)

RELATIVE_VARIANCE_FLOOR = 1e-12

Number = Union[float, np.ndarray]


@dataclass(frozen=True)
class GammaFit:
    """Moment-matched Gamma law of X^2 or Y^2"""
    shape: float
    scale: float
    axis: Axis
    elements: int
    bits: Optional[int] = None
    _law: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.shape > 0 or not self.scale > 0:
            raise ValueError(f"Gamma fit needs positive shape and scale, got ({self.shape}, {self.scale})")
        if not isinstance(self.axis, Axis):
            object.__setattr__(self, 'axis', Axis(self.axis))
        object.__setattr__(self, '_law', stats.gamma(self.shape, scale=self.scale))

    @property
    def mean(self) -> float:
        return self.shape * self.scale

    @property
    def variance(self) -> float:
        return self.shape * self.scale ** 2

    @property
    def continuous_phase(self) -> bool:
        return self.bits is None

    def pdf(self, value: Number) -> Number:
        result = self._law.pdf(np.asarray(value, dtype=float))
        return float(result) if np.ndim(value) == 0 else result

    def cdf(self, value: Number) -> Number:
        result = self._law.cdf(np.asarray(value, dtype=float))
        return float(result) if np.ndim(value) == 0 else result

    def to_dict(self) -> dict:
        return {
            'axis': self.axis.value,
            'elements': self.elements,
            'bits': self.bits,
            'shape': self.shape,
            'scale': self.scale,
        }


def fit_from_moments(second: float, fourth: float, axis, elements: int,
                     bits: Optional[int] = None) -> GammaFit:
    """
    Match a Gamma law to E[Z^2] and E[Z^4].

    Args:
        second: E[Z^2]
        fourth: E[Z^4]
        axis: Which component Z is
        elements: Number of RIS elements M
        bits: Quantization bits, None for continuous phase

    Returns:
        GammaFit

    Raises:
        DegenerateError: If E[Z^2] vanishes or the variance is not positive
    """
    axis = Axis(axis)
    variance = fourth - second * second
    if not second > 0:
        raise DegenerateError(f"E[{axis.value}^2] = {second:.3g}; the {axis.value}^2 law is a point mass at 0")
    if not variance > RELATIVE_VARIANCE_FLOOR * second * second:
        raise DegenerateError(f"Var[{axis.value}^2] = {variance:.3g} is not positive")
    fit = GammaFit(
        shape=second * second / variance,
        scale=variance / second,
        axis=axis,
        elements=int(elements),
        bits=bits,
    )
    logger.debug(f"Gamma fit {axis.value}^2 (M={elements}, b={bits}): shape={fit.shape:.6g} scale={fit.scale:.6g}")
    return fit


def gamma_fit(elements: int, bits: Optional[int], axis, channel_power: float = 1.0) -> GammaFit:
    """
    Moment-matched Gamma law of X^2 or Y^2 for b-bit quantization.

    Args:
        elements: Number of RIS elements M
        bits: Quantization bits b >= 1, or None for continuous phase
        axis: Axis.IN_PHASE or Axis.QUADRATURE
        channel_power: Per-hop mean power

    Returns:
        GammaFit
    """
    if bits is not None and (int(bits) != bits or bits < 1):
        raise ValueError(f"bits must be an integer >= 1, got {bits}")
    levels = None if bits is None else 2 ** int(bits)
    second = mean_square(elements, levels, axis, channel_power)
    fourth = fourth_moment(elements, levels, axis, channel_power)
    return fit_from_moments(second, fourth, axis, elements, None if bits is None else int(bits))
