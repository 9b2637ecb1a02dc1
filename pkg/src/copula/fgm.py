#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Farlie-Gumbel-Morgenstern Copula

    C(u, v) = u v (1 + theta (1 - u)(1 - v))
    c(u, v) = 1 + theta (2u - 1)(2v - 1),   theta in [-1, 1]
"""

import logging
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

logger = logging.getLogger(__name__)

Number = Union[float, np.ndarray]


@dataclass(frozen=True)
class FgmTheta:
    """Dependence parameter of the FGM copula"""
    theta: float

    def __post_init__(self):
        value = float(self.theta)
        if not -1.0 <= value <= 1.0:
            raise ValueError(f"FGM theta must lie in [-1, 1], got {self.theta}")
        object.__setattr__(self, 'theta', value)

    def __float__(self) -> float:
        return self.theta

    @property
    def kendall_tau(self) -> float:
        return 2.0 * self.theta / 9.0

    @property
    def spearman_rho(self) -> float:
        return self.theta / 3.0


def as_theta(theta: Union[FgmTheta, float]) -> FgmTheta:
    """Accept either a validated FgmTheta or a raw number"""
    if isinstance(theta, FgmTheta):
        return theta
    return FgmTheta(theta)


def _unit_square(u: Number, v: Number) -> Tuple[np.ndarray, np.ndarray]:
    uu = np.asarray(u, dtype=float)
    vv = np.asarray(v, dtype=float)
    if np.any((uu < 0) | (uu > 1)) or np.any((vv < 0) | (vv > 1)):
        raise ValueError(f"Copula arguments must lie in [0, 1], got u={u}, v={v}")
    return uu, vv


def _as_output(values: np.ndarray, u: Number, v: Number) -> Number:
    if np.ndim(u) == 0 and np.ndim(v) == 0:
        return float(values)
    return values


def fgm_density(u: Number, v: Number, theta: Union[FgmTheta, float]) -> Number:
    """
    Copula density c(u, v).

    Args:
        u: First uniform margin value(s) in [0, 1]
        v: Second uniform margin value(s) in [0, 1]
        theta: Dependence parameter

    Returns:
        1 + theta (2u - 1)(2v - 1), nonnegative on the unit square
    """
    uu, vv = _unit_square(u, v)
    t = as_theta(theta).theta
    return _as_output(1.0 + t * (2.0 * uu - 1.0) * (2.0 * vv - 1.0), u, v)


def fgm_cdf(u: Number, v: Number, theta: Union[FgmTheta, float]) -> Number:
    """Copula C(u, v) = u v (1 + theta (1 - u)(1 - v))"""
    uu, vv = _unit_square(u, v)
    t = as_theta(theta).theta
    return _as_output(uu * vv * (1.0 + t * (1.0 - uu) * (1.0 - vv)), u, v)


def sample_fgm(theta: Union[FgmTheta, float], n_samples: int, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """
    Draw (U, V) from the FGM copula by conditional inversion.

    Given U = u, the conditional CDF v (1 + a (1 - v)) with a = theta (1 - 2u)
    is inverted in closed form.

    Args:
        theta: Dependence parameter
        n_samples: Number of pairs
        rng: Generator to consume

    Returns:
        Arrays U, V with uniform margins
    """
    t = as_theta(theta).theta
    u = rng.random(n_samples)
    w = rng.random(n_samples)
    a = t * (1.0 - 2.0 * u)
    v = w.copy()
    active = np.abs(a) > 1e-12
    aa = a[active]
    root = np.sqrt((1.0 + aa) ** 2 - 4.0 * aa * w[active])
    v[active] = (1.0 + aa - root) / (2.0 * aa)
    return u, np.clip(v, 0.0, 1.0)
