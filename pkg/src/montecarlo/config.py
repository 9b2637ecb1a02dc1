#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
System Configuration

Link parameters shared by the Monte-Carlo oracle and the analytic routes.
All quantities are linear; dB conversion belongs to the CLI.
"""

import logging
import math
from dataclasses import asdict, dataclass, replace
from typing import Dict, Optional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SystemConfig:
    """
    RIS link configuration.

    Attributes:
        elements: Number of RIS elements M (>= 1)
        bits: Phase quantization bits b (>= 1), L = 2^b levels
        transmit_snr: rho_S = p_t / sigma^2 (linear, > 0)
        path_loss: Large-scale gain l (linear, > 0)
        threshold: SNR threshold gamma_th (linear, >= 0)
        channel_power: Per-hop mean power E|h|^2 = E|g|^2
        continuous_phase: Perfect phase alignment (theta_i = 0), the L -> inf limit
    """
    elements: int
    bits: int = 1
    transmit_snr: float = 1.0
    path_loss: float = 1.0
    threshold: float = 1.0
    channel_power: float = 1.0
    continuous_phase: bool = False

    def __post_init__(self):
        if int(self.elements) != self.elements or self.elements < 1:
            raise ValueError(f"elements must be an integer >= 1, got {self.elements}")
        if int(self.bits) != self.bits or self.bits < 1:
            raise ValueError(f"bits must be an integer >= 1, got {self.bits}")
        if not self.transmit_snr > 0 or not math.isfinite(self.transmit_snr):
            raise ValueError(f"transmit_snr must be positive and finite, got {self.transmit_snr}")
        if not self.path_loss > 0 or not math.isfinite(self.path_loss):
            raise ValueError(f"path_loss must be positive and finite, got {self.path_loss}")
        if not self.threshold >= 0 or math.isnan(self.threshold):
            raise ValueError(f"threshold must be nonnegative, got {self.threshold}")
        if not self.channel_power > 0:
            raise ValueError(f"channel_power must be positive, got {self.channel_power}")

    @property
    def levels(self) -> Optional[int]:
        """L = 2^b, or None for continuous phase"""
        if self.continuous_phase:
            return None
        return 2 ** self.bits

    @property
    def effective_snr(self) -> float:
        """rho = l * rho_S"""
        return self.path_loss * self.transmit_snr

    @property
    def normalized_threshold(self) -> float:
        """rho_t = gamma_th / rho; the outage event is X^2 + Y^2 <= rho_t"""
        return self.threshold / self.effective_snr

    @property
    def onebit_scale(self) -> float:
        """Scale s of the one-bit per-element laws: x_i ~ Exp(mean s), y_i ~ Laplace(s)"""
        return 0.5 * self.channel_power

    def with_transmit_snr(self, transmit_snr: float) -> 'SystemConfig':
        return replace(self, transmit_snr=transmit_snr)

    def with_threshold(self, threshold: float) -> 'SystemConfig':
        return replace(self, threshold=threshold)

    def with_bits(self, bits: int, continuous_phase: bool = False) -> 'SystemConfig':
        return replace(self, bits=bits, continuous_phase=continuous_phase)

    def to_dict(self) -> Dict:
        data = asdict(self)
        data['effective_snr'] = self.effective_snr
        data['normalized_threshold'] = self.normalized_threshold
        return data


@dataclass(frozen=True)
class McEstimate:
    """Monte-Carlo estimate with its standard error"""
    value: float
    std_error: float
    n_samples: int
    seed: int

    def summary_entries(self) -> Dict[str, object]:
        """Ordered fields of the per-run summary"""
        return {
            'seed': self.seed,
            'n': self.n_samples,
            'value': self.value,
            'std_error': self.std_error,
        }

    def summary(self) -> str:
        """Plain-text `key: value` lines"""
        return "\n".join(f"{key}: {value:.12g}" if isinstance(value, float) else f"{key}: {value}"
                         for key, value in self.summary_entries().items())

    def to_dict(self) -> Dict:
        return asdict(self)
