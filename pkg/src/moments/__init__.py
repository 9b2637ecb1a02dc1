"""
RIS Copula Outage Toolkit - Moments Module
Closed-form moments of X and Y under b-bit phase quantization and Gamma moment matching
"""

from .closed_form import (
    CASCADE_MOMENTS,
    cross_term,
    diagonal_term,
    element_moments,
    fourth_moment,
    mean_square,
    published_cross_term,
    published_diagonal_term,
    published_fourth_moment,
    published_square_term,
    sinc,
    square_term,
    trig_moments,
)
from .gamma_fit import GammaFit, fit_from_moments, gamma_fit

__all__ = [
    'CASCADE_MOMENTS',
    'cross_term',
    'diagonal_term',
    'element_moments',
    'fourth_moment',
    'mean_square',
    'published_cross_term',
    'published_diagonal_term',
    'published_fourth_moment',
    'published_square_term',
    'sinc',
    'square_term',
    'trig_moments',
    'GammaFit',
    'fit_from_moments',
    'gamma_fit',
]
