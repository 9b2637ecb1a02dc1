#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Closed-Form Moments of X and Y

Second and fourth moments of the in-phase and quadrature sums for a uniform
phase error on [-pi/L, pi/L]. With d_i = z_i cos(theta_i) (X) or
z_i sin(theta_i) (Y) and mu_k = E[d_i^k], the sums of i.i.d. terms give

    E[Z^2] = M mu_2 + M(M-1) mu_1^2
    E[Z^4] = M mu_4 + 3M(M-1) mu_2^2 + 4M(M-1) mu_3 mu_1
             + 6M(M-1)(M-2) mu_2 mu_1^2 + M(M-1)(M-2)(M-3) mu_1^4

The cascade gain z = |h||g| has E z^k = P^k {pi/4, 1, 9pi/16, 4} for per-hop
power P. sinc(x) = sin(x)/x throughout.

`levels=None` is the continuous-phase sentinel (theta = 0).

The `published_*` functions evaluate the printed three-term expansion term by
term. The printed diagonal terms are exact; the cross and square terms are not,
except that X still comes out right at M = 1 (see docs/ERRATA.md).
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..marginals.onebit import Axis

logger = logging.getLogger(__name__)

CASCADE_MOMENTS = (math.pi / 4.0, 1.0, 9.0 * math.pi / 16.0, 4.0)


def sinc(x: float) -> float:
    """Unnormalised sinc, sin(x)/x"""
    return float(np.sinc(x / math.pi))


def _check(elements: int, levels: Optional[int], axis) -> Tuple[int, Optional[int], Axis]:
    if int(elements) != elements or elements < 1:
        raise ValueError(f"elements must be an integer >= 1, got {elements}")
    if levels is not None and (int(levels) != levels or levels < 2):
        raise ValueError(f"levels must be an integer >= 2 (or None for continuous phase), got {levels}")
    return int(elements), (None if levels is None else int(levels)), Axis(axis)


def trig_moments(levels: Optional[int], axis) -> Tuple[float, float, float, float]:
    """E[cos^k theta] (X) or E[sin^k theta] (Y), k = 1..4, theta ~ U[-pi/L, pi/L]"""
    axis = Axis(axis)
    if levels is None:
        return (1.0, 1.0, 1.0, 1.0) if axis is Axis.IN_PHASE else (0.0, 0.0, 0.0, 0.0)
    w = math.pi / levels
    if axis is Axis.IN_PHASE:
        return (
            sinc(w),
            0.5 + 0.5 * sinc(2.0 * w),
            (math.sin(w) - math.sin(w) ** 3 / 3.0) / w,
            0.375 + 0.5 * sinc(2.0 * w) + 0.125 * sinc(4.0 * w),
        )
    return (
        0.0,
        0.5 - 0.5 * sinc(2.0 * w),
        0.0,
        0.375 - 0.5 * sinc(2.0 * w) + 0.125 * sinc(4.0 * w),
    )


def element_moments(levels: Optional[int], axis, channel_power: float = 1.0) -> Tuple[float, float, float, float]:
    """mu_k = E[z^k] E[trig^k], k = 1..4"""
    trig = trig_moments(levels, axis)
    return tuple(channel_power ** (k + 1) * CASCADE_MOMENTS[k] * trig[k] for k in range(4))


def mean_square(elements: int, levels: Optional[int], axis, channel_power: float = 1.0) -> float:
    """
    E[X^2] or E[Y^2].

    Args:
        elements: Number of RIS elements M
        levels: L = 2^b, or None for continuous phase
        axis: Axis.IN_PHASE or Axis.QUADRATURE
        channel_power: Per-hop mean power

    Returns:
        M(1/2 + sinc(2pi/L)/2 + (M-1)L^2 sin^2(pi/L)/16) for X,
        M(1/2 - sinc(2pi/L)/2) for Y (times power^2)
    """
    M, L, axis = _check(elements, levels, axis)
    power = channel_power ** 2
    if L is None:
        if axis is Axis.IN_PHASE:
            return power * (M + M * (M - 1) * math.pi ** 2 / 16.0)
        return 0.0
    if axis is Axis.IN_PHASE:
        value = M * (0.5 + 0.5 * sinc(2.0 * math.pi / L) + (M - 1) * L * L / 16.0 * math.sin(math.pi / L) ** 2)
    else:
        value = M * (0.5 - 0.5 * sinc(2.0 * math.pi / L))
    return power * value


def diagonal_term(elements: int, levels: Optional[int], axis, channel_power: float = 1.0) -> float:
    """E[(sum_i d_i^2)^2] = M mu_4 + M(M-1) mu_2^2"""
    M, L, axis = _check(elements, levels, axis)
    _, mu2, _, mu4 = element_moments(L, axis, channel_power)
    return M * mu4 + M * (M - 1) * mu2 ** 2


def cross_term(elements: int, levels: Optional[int], axis, channel_power: float = 1.0) -> float:
    """2 sum_l sum_{i != j} E[d_l^2 d_i d_j] = 4M(M-1) mu_3 mu_1 + 2M(M-1)(M-2) mu_2 mu_1^2"""
    M, L, axis = _check(elements, levels, axis)
    mu1, mu2, mu3, _ = element_moments(L, axis, channel_power)
    return 4.0 * M * (M - 1) * mu3 * mu1 + 2.0 * M * (M - 1) * (M - 2) * mu2 * mu1 ** 2


def square_term(elements: int, levels: Optional[int], axis, channel_power: float = 1.0) -> float:
    """E[(sum_{i != j} d_i d_j)^2]"""
    M, L, axis = _check(elements, levels, axis)
    mu1, mu2, _, _ = element_moments(L, axis, channel_power)
    return (2.0 * M * (M - 1) * mu2 ** 2
            + 4.0 * M * (M - 1) * (M - 2) * mu2 * mu1 ** 2
            + M * (M - 1) * (M - 2) * (M - 3) * mu1 ** 4)


def fourth_moment(elements: int, levels: Optional[int], axis, channel_power: float = 1.0) -> float:
    """
    E[X^4] or E[Y^4].

    Args:
        elements: Number of RIS elements M
        levels: L = 2^b, or None for continuous phase
        axis: Axis.IN_PHASE or Axis.QUADRATURE
        channel_power: Per-hop mean power

    Returns:
        Fourth raw moment of the sum
    """
    M, L, axis = _check(elements, levels, axis)
    mu1, mu2, mu3, mu4 = element_moments(L, axis, channel_power)
    return (M * mu4
            + 3.0 * M * (M - 1) * mu2 ** 2
            + 4.0 * M * (M - 1) * mu3 * mu1
            + 6.0 * M * (M - 1) * (M - 2) * mu2 * mu1 ** 2
            + M * (M - 1) * (M - 2) * (M - 3) * mu1 ** 4)


def _published_check(elements: int, levels: Optional[int], axis) -> Tuple[int, int, Axis]:
    M, L, axis = _check(elements, levels, axis)
    if L is None:
        raise ValueError("The printed fourth-moment terms need a finite number of levels")
    return M, L, axis


def published_diagonal_term(elements: int, levels: int, axis, channel_power: float = 1.0) -> float:
    """M/(16 pi^2) (A + B) for X, M/(16 pi^2) (B - A) for Y"""
    M, L, axis = _published_check(elements, levels, axis)
    s2 = math.sin(2.0 * math.pi / L)
    s4 = math.sin(4.0 * math.pi / L)
    a = 4.0 * math.pi * (3 + M) * L * s2
    b = L * L * (M - 1) * s2 ** 2 + 2.0 * math.pi * (2.0 * (5 + M) * math.pi + L * s4)
    combined = a + b if axis is Axis.IN_PHASE else b - a
    return channel_power ** 4 * M / (16.0 * math.pi ** 2) * combined


def published_cross_term(elements: int, levels: int, axis, channel_power: float = 1.0) -> float:
    """Printed cross term; zero for Y"""
    M, L, axis = _published_check(elements, levels, axis)
    if axis is Axis.QUADRATURE:
        return 0.0
    w = math.pi / L
    bracket = (11 + 4 * M) * math.pi + 3.0 * math.pi * math.cos(2.0 * w) + 2.0 * L * (M - 1) * math.sin(2.0 * w)
    return channel_power ** 4 * M * (M - 1) * L * L * math.sin(w) ** 2 * bracket / (64.0 * math.pi)


def published_square_term(elements: int, levels: int, axis, channel_power: float = 1.0) -> float:
    """
    Printed square term. The X branch is read with every summand inside the
    M(M-1)/(256 pi^2) prefactor.
    """
    M, L, axis = _published_check(elements, levels, axis)
    w = math.pi / L
    s2 = math.sin(2.0 * w)
    if axis is Axis.QUADRATURE:
        return channel_power ** 4 * M ** 2 * (L * s2 - 2.0 * math.pi) ** 2 / (16.0 * math.pi ** 2)
    sin_w, cos_w = math.sin(w), math.cos(w)
    bracket = (8.0 * L ** 2 * (M - 1) * math.pi ** 2 * sin_w ** 2
               + 8.0 * math.pi * L ** 3 * (M - 1) * sin_w ** 3 * cos_w
               + L ** 4 * (6 - 5 * M + M * M) * math.pi ** 2 * sin_w ** 4
               + 16.0 * (2.0 * math.pi + L * s2) ** 2)
    return channel_power ** 4 * M * (M - 1) / (256.0 * math.pi ** 2) * bracket


def published_fourth_moment(elements: int, levels: int, axis, channel_power: float = 1.0) -> float:
    """Sum of the three printed terms"""
    return (published_diagonal_term(elements, levels, axis, channel_power)
            + published_cross_term(elements, levels, axis, channel_power)
            + published_square_term(elements, levels, axis, channel_power))
