"""
RIS Copula Outage Toolkit - Copula Module
FGM copula, copula-based joint densities and pseudo-likelihood fitting of theta
"""

from .fgm import FgmTheta, as_theta, fgm_cdf, fgm_density, sample_fgm
from .fitting import (
    MIN_FIT_SAMPLES,
    MarginMode,
    ThetaFit,
    fit_theta,
    gamma_margins,
    onebit_margins,
    pseudo_log_likelihood,
    pseudo_observations,
)
from .joint import joint_pdf_x2y2_gamma, joint_pdf_xy_onebit

__all__ = [
    'FgmTheta',
    'as_theta',
    'fgm_cdf',
    'fgm_density',
    'sample_fgm',
    'MIN_FIT_SAMPLES',
    'MarginMode',
    'ThetaFit',
    'fit_theta',
    'gamma_margins',
    'onebit_margins',
    'pseudo_log_likelihood',
    'pseudo_observations',
    'joint_pdf_x2y2_gamma',
    'joint_pdf_xy_onebit',
]
