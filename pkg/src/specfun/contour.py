#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Mellin-Barnes Contour Discretisation

Contour settings, pole-free strips and the composite Gauss-Legendre rule used
along each vertical integration line. Panels are graded: narrow next to the
real axis, where the gamma products peak and the nearest poles sit, and
geometrically wider towards +/- half_height where the integrand has decayed.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from ..errors import ContourError

logger = logging.getLogger(__name__)

PANEL_ORDER = 16
MIN_NODES = 64
MIN_GRADING = 0.05
MAX_GRADING = 1.0


@dataclass(frozen=True)
class ContourSettings:
    """
    Discretisation of the vertical integration lines.

    anchor1/anchor2 are the real parts of the lines for the first and second
    Mellin variable; None selects the strip midpoint for the parameters at hand.
    """
    anchor1: Optional[float] = None
    anchor2: Optional[float] = None
    half_height: float = 60.0
    nodes: int = 512
    tolerance: float = 1e-8
    max_refinements: int = 3

    def __post_init__(self):
        if not self.half_height > 0:
            raise ValueError(f"half_height must be positive, got {self.half_height}")
        if self.nodes < MIN_NODES:
            raise ValueError(f"nodes must be >= {MIN_NODES}, got {self.nodes}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_refinements < 0:
            raise ValueError(f"max_refinements must be >= 0, got {self.max_refinements}")


@dataclass(frozen=True)
class Strip:
    """Open interval of admissible real parts for one Mellin variable"""
    lower: float = -math.inf
    upper: float = math.inf

    @property
    def is_empty(self) -> bool:
        return not self.lower < self.upper

    def contains(self, value: float) -> bool:
        return self.lower < value < self.upper

    def midpoint(self) -> float:
        lower_finite = math.isfinite(self.lower)
        upper_finite = math.isfinite(self.upper)
        if lower_finite and upper_finite:
            return 0.5 * (self.lower + self.upper)
        if lower_finite:
            return self.lower + 1.0
        if upper_finite:
            return self.upper - 1.0
        return 0.0

    def clearance(self, value: float) -> float:
        """Distance from value to the nearest strip edge"""
        return min(value - self.lower, self.upper - value)

    def tightened(self, lower: float = -math.inf, upper: float = math.inf) -> 'Strip':
        return Strip(max(self.lower, lower), min(self.upper, upper))


def choose_anchor(strip: Strip, requested: Optional[float], label: str) -> float:
    """
    Validate a requested anchor against its strip, or pick the midpoint.

    Args:
        strip: Pole-free strip
        requested: Anchor from ContourSettings, or None
        label: Variable name used in error messages

    Returns:
        Real part of the integration line
    """
    if strip.is_empty:
        raise ContourError(f"No pole-free strip for {label}: ({strip.lower}, {strip.upper})")
    if requested is None:
        return strip.midpoint()
    if not strip.contains(requested):
        raise ContourError(
            f"Anchor {requested} for {label} does not separate the poles; "
            f"admissible strip is ({strip.lower}, {strip.upper})"
        )
    return float(requested)


def grading_for(strip: Strip, anchor: float) -> float:
    """Width of the innermost panel, tied to the distance to the nearest pole"""
    clearance = strip.clearance(anchor)
    if not math.isfinite(clearance):
        return MAX_GRADING
    return min(MAX_GRADING, max(MIN_GRADING, clearance))


@lru_cache(maxsize=64)
def contour_nodes(half_height: float, nodes: int, grading: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nodes and weights of the composite Gauss-Legendre rule on [-h, h].

    Args:
        half_height: Truncation h of the imaginary axis
        nodes: Requested node count (rounded up to whole symmetric panels)
        grading: Width scale of the innermost panel

    Returns:
        (u, w): symmetric node positions and weights
    """
    per_side = max(1, math.ceil(nodes / (2 * PANEL_ORDER)))
    growth = math.asinh(half_height / grading) / per_side
    edges = grading * np.sinh(growth * np.arange(per_side + 1))
    edges[-1] = half_height

    x, w = np.polynomial.legendre.leggauss(PANEL_ORDER)
    left, right = edges[:-1], edges[1:]
    centre = 0.5 * (left + right)
    half = 0.5 * (right - left)

    positive = (centre[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()

    u = np.concatenate([-positive[::-1], positive])
    wts = np.concatenate([weights[::-1], weights])
    u.setflags(write=False)
    wts.setflags(write=False)
    return u, wts
