#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Outage Result Types
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from ..montecarlo.config import McEstimate, SystemConfig

logger = logging.getLogger(__name__)

CLIP_WARNING = 1e-9
ZERO_THRESHOLD = 1e-30


class OutageMethod(Enum):
    """Route that produced an outage value"""
    QUADRATURE_1BIT = "Quadrature1Bit"
    CLOSED_FORM_1BIT = "ClosedForm1Bit"
    QUADRATURE_BBIT = "QuadratureBBit"
    CLOSED_FORM_BBIT = "ClosedFormBBit"
    ASYMPTOTIC = "Asymptotic"
    MONTE_CARLO = "MonteCarlo"


class Region(Enum):
    """
    Integration region of the one-bit routes.

    FULL is the event X^2 + Y^2 <= rho_t; PRINTED doubles the Y >= 0 half.
    """
    FULL = "full"
    PRINTED = "printed"


class AsymptoteMode(Enum):
    """High-SNR asymptote variant"""
    DERIVED = "derived"
    PUBLISHED = "published"


@dataclass(frozen=True)
class OutageResult:
    """Outage probability with its error estimate and provenance"""
    value: float
    method: OutageMethod
    err_estimate: float
    config: SystemConfig
    theta: Optional[float] = None

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"Outage probability must lie in [0, 1], got {self.value}")
        if not self.err_estimate >= 0.0:
            raise ValueError(f"err_estimate must be nonnegative, got {self.err_estimate}")

    def to_dict(self) -> Dict:
        return {
            'value': self.value,
            'method': self.method.value,
            'err_estimate': self.err_estimate,
            'theta': self.theta,
            'config': self.config.to_dict(),
        }


@dataclass(frozen=True)
class AsymptoteResult:
    """High-SNR law O = (G_c / rho_t)^(-G_d)"""
    diversity_order: float
    coding_gain: float
    mode: AsymptoteMode = AsymptoteMode.DERIVED

    def __post_init__(self):
        if not self.coding_gain > 0:
            raise ValueError(f"coding gain must be positive, got {self.coding_gain}")

    def outage(self, normalized_threshold: float) -> float:
        """Asymptotic outage at rho_t, capped at 1"""
        if normalized_threshold <= ZERO_THRESHOLD:
            return 0.0
        log_value = self.diversity_order * (math.log(normalized_threshold) - math.log(self.coding_gain))
        return 1.0 if log_value >= 0 else math.exp(log_value)


def clipped(value: float, label: str) -> float:
    """Clamp a probability to [0, 1], warning when the excursion is not round-off"""
    if value < 0.0 or value > 1.0:
        excursion = -value if value < 0.0 else value - 1.0
        if excursion > CLIP_WARNING:
            logger.warning(f"{label}: value {value:.6g} outside [0, 1], clipped")
        return min(max(value, 0.0), 1.0)
    return float(value)


def from_monte_carlo(estimate: McEstimate, config: SystemConfig) -> OutageResult:
    """Wrap a Monte-Carlo estimate as an OutageResult"""
    return OutageResult(
        value=estimate.value,
        method=OutageMethod.MONTE_CARLO,
        err_estimate=estimate.std_error,
        config=config,
    )
