"""
RIS Copula Outage Toolkit - Special Functions Module

Complex log-gamma, incomplete gamma functions, and univariate/bivariate Fox-H
(hence Meijer-G) evaluation by numerical Mellin-Barnes contour integration.
"""

from .gamma import (
    ln_gamma_complex,
    upper_incomplete_gamma,
    lower_incomplete_gamma,
    regularized_upper_gamma,
    regularized_lower_gamma,
)
from .contour import ContourSettings, Strip
from .foxh import (
    FoxHUnivariateParams,
    FoxHBivariateParams,
    ContourResult,
    fox_h_univariate,
    fox_h_bivariate,
    evaluate_univariate,
    evaluate_bivariate,
    meijer_g,
    meijer_g_params,
)
from .paramfile import ParameterFile, parse_parameter_text, load_parameter_file

__all__ = [
    'ln_gamma_complex',
    'upper_incomplete_gamma',
    'lower_incomplete_gamma',
    'regularized_upper_gamma',
    'regularized_lower_gamma',
    'ContourSettings',
    'Strip',
    'FoxHUnivariateParams',
    'FoxHBivariateParams',
    'ContourResult',
    'fox_h_univariate',
    'fox_h_bivariate',
    'evaluate_univariate',
    'evaluate_bivariate',
    'meijer_g',
    'meijer_g_params',
    'ParameterFile',
    'parse_parameter_text',
    'load_parameter_file',
]
