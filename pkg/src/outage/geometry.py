#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
RIS Placement Geometry

Transmitter, RIS and receiver on a line of length D; the RIS at distance d
from the transmitter sees hops l1 = d and l2 = D - d.
"""

import logging
import math
from dataclasses import dataclass
from typing import List

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_POSITIONS = 21


def _positive(value: float, label: str) -> float:
    value = float(value)
    if not value > 0 or not math.isfinite(value):
        raise ValueError(f"{label} must be positive and finite, got {value}")
    return value


def path_loss(l1: float, l2: float, nu: float) -> float:
    """
    Large-scale gain of the two-hop link.

    Args:
        l1: Transmitter-RIS distance
        l2: RIS-receiver distance
        nu: Path-loss exponent

    Returns:
        (l1 l2)^(-nu)
    """
    l1, l2, nu = _positive(l1, 'l1'), _positive(l2, 'l2'), _positive(nu, 'nu')
    return math.exp(-nu * (math.log(l1) + math.log(l2)))


@dataclass(frozen=True)
class Placement:
    """One RIS position on the TX-RX segment"""
    distance: float
    total: float
    nu: float

    @property
    def l1(self) -> float:
        return self.distance

    @property
    def l2(self) -> float:
        return self.total - self.distance

    @property
    def path_loss(self) -> float:
        return path_loss(self.l1, self.l2, self.nu)

    @property
    def path_loss_db(self) -> float:
        return 10.0 * math.log10(self.path_loss)


def ris_positions(total: float, n_points: int = DEFAULT_POSITIONS) -> np.ndarray:
    """Interior grid d_i = i D / (n + 1), i = 1..n"""
    total = _positive(total, 'D')
    if int(n_points) != n_points or n_points < 1:
        raise ValueError(f"n_points must be an integer >= 1, got {n_points}")
    return total * np.arange(1, int(n_points) + 1) / (int(n_points) + 1.0)


def placements(total: float, nu: float, n_points: int = DEFAULT_POSITIONS) -> List[Placement]:
    _positive(nu, 'nu')
    return [Placement(float(d), float(total), float(nu)) for d in ris_positions(total, n_points)]
