"""
RIS Copula Outage Toolkit - Monte-Carlo Module

Physical-channel oracle: samples the RIS link, estimates outage and moments,
and provides goodness-of-fit statistics for the analytic modules.
"""

from .config import SystemConfig, McEstimate
from .sampler import (
    MomentEstimates,
    sample_rayleigh,
    sample_xy,
    sample_pairs,
    sample_gain,
    run_blocks,
    estimate_outage,
    estimate_outage_curve,
    estimate_moments,
    gain_quantile,
    quantization_power_loss_db,
)
from .goodness import KsResult, ks_test, ks_distance

__all__ = [
    'SystemConfig',
    'McEstimate',
    'MomentEstimates',
    'sample_rayleigh',
    'sample_xy',
    'sample_pairs',
    'sample_gain',
    'run_blocks',
    'estimate_outage',
    'estimate_outage_curve',
    'estimate_moments',
    'gain_quantile',
    'quantization_power_loss_db',
    'KsResult',
    'ks_test',
    'ks_distance',
]
