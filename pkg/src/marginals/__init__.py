"""
RIS Copula Outage Toolkit - Marginals Module

Closed-form marginal densities and CDFs of the in-phase (X) and quadrature (Y)
sums under one-bit phase quantization.
"""

from .onebit import (
    Axis,
    OneBitMarginal,
    pdf_x,
    cdf_x,
    pdf_y,
    cdf_y,
    pdf_y_at_zero,
    laplace_sum_log_coefficients,
    laplace_sum_tail_weights,
    laplace_sum_tail_series,
)

__all__ = [
    'Axis',
    'OneBitMarginal',
    'pdf_x',
    'cdf_x',
    'pdf_y',
    'cdf_y',
    'pdf_y_at_zero',
    'laplace_sum_log_coefficients',
    'laplace_sum_tail_weights',
    'laplace_sum_tail_series',
]
