"""
RIS Copula Outage Toolkit - Outage Module
Outage probability of the RIS link by direct quadrature, Fox-H closed forms,
the b-bit Gamma-copula model and the high-SNR asymptote, plus placement geometry
"""

from .result import (
    AsymptoteMode,
    AsymptoteResult,
    OutageMethod,
    OutageResult,
    Region,
    from_monte_carlo,
)
from .quadrature import adaptive_quad, outage_quadrature_onebit, standardized_threshold
from .closed_form import (
    OUTAGE_CONTOUR,
    disc_kernel,
    disc_kernel_params,
    half_disc_slope,
    outage_closed_form_onebit,
)
from .bbit import BBitRoute, default_fits, outage_bbit, squared_cdf_closed_form, squared_cdf_params
from .asymptotic import asymptote_parameters, outage_asymptotic
from .geometry import DEFAULT_POSITIONS, Placement, path_loss, placements, ris_positions

__all__ = [
    'AsymptoteMode',
    'AsymptoteResult',
    'OutageMethod',
    'OutageResult',
    'Region',
    'from_monte_carlo',
    'adaptive_quad',
    'outage_quadrature_onebit',
    'standardized_threshold',
    'OUTAGE_CONTOUR',
    'disc_kernel',
    'disc_kernel_params',
    'half_disc_slope',
    'outage_closed_form_onebit',
    'BBitRoute',
    'default_fits',
    'outage_bbit',
    'squared_cdf_closed_form',
    'squared_cdf_params',
    'asymptote_parameters',
    'outage_asymptotic',
    'DEFAULT_POSITIONS',
    'Placement',
    'path_loss',
    'placements',
    'ris_positions',
]
