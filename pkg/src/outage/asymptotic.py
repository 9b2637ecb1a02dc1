#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
High-SNR Outage Asymptote (one-bit)

Both variants are written as O = (G_c / rho_t)^(-G_d), rho_t = gamma_th / rho.

DERIVED: near the origin the joint density is f_X(x) f_Y(0) with
f_X(x) ~ x^(M-1)/Gamma(M), so in standardized units

    O ~ C r^((M+1)/2),  C = f_Y(0) B(M/2, 3/2) / Gamma(M),  r = rho_t / s^2

giving G_d = (M+1)/2 and G_c = s^2 C^(-1/G_d).

PUBLISHED: G_d = M/2, G_c = Gamma(M - 1/2) / (2 sqrt(pi) (1 + M/2) Gamma(M)),
applied to rho_t as is.
"""

import logging
import math

from scipy import special

from ..marginals import pdf_y_at_zero
from ..montecarlo.config import SystemConfig
from .quadrature import check_onebit
from .result import AsymptoteMode, AsymptoteResult, OutageMethod, OutageResult

logger = logging.getLogger(__name__)


def asymptote_parameters(elements: int, mode: AsymptoteMode = AsymptoteMode.DERIVED,
                         channel_power: float = 1.0) -> AsymptoteResult:
    """
    Diversity order and coding gain of the one-bit outage.

    Args:
        elements: Number of RIS elements M
        mode: DERIVED or PUBLISHED
        channel_power: Per-hop mean power (DERIVED only)

    Returns:
        AsymptoteResult
    """
    if int(elements) != elements or elements < 1:
        raise ValueError(f"elements must be an integer >= 1, got {elements}")
    M = int(elements)
    mode = AsymptoteMode(mode)
    if mode is AsymptoteMode.PUBLISHED:
        log_gain = (special.gammaln(M - 0.5) - special.gammaln(M)
                    - math.log(2.0 * math.sqrt(math.pi) * (1.0 + M / 2.0)))
        return AsymptoteResult(diversity_order=M / 2.0, coding_gain=math.exp(log_gain), mode=mode)

    order = (M + 1) / 2.0
    log_c = math.log(pdf_y_at_zero(M)) + special.betaln(M / 2.0, 1.5) - special.gammaln(M)
    scale = 0.5 * channel_power
    gain = scale * scale * math.exp(-log_c / order)
    return AsymptoteResult(diversity_order=order, coding_gain=gain, mode=mode)


def outage_asymptotic(config: SystemConfig, mode: AsymptoteMode = AsymptoteMode.DERIVED) -> OutageResult:
    """
    High-SNR approximation of the one-bit outage, capped at 1.

    Args:
        config: One-bit link configuration
        mode: DERIVED or PUBLISHED

    Returns:
        OutageResult with method Asymptotic and zero error estimate
    """
    check_onebit(config)
    law = asymptote_parameters(config.elements, mode, config.channel_power)
    value = law.outage(config.normalized_threshold)
    logger.debug(f"Asymptotic ({law.mode.value}) M={config.elements} G_d={law.diversity_order} "
                 f"G_c={law.coding_gain:.6g}: {value:.6g}")
    return OutageResult(value=value, method=OutageMethod.ASYMPTOTIC, err_estimate=0.0, config=config)
