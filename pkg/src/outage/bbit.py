#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
b-Bit Outage from the Gamma-Copula Model

X^2 ~ Gamma(k_X, b_X) and Y^2 ~ Gamma(k_Y, b_Y) coupled by an FGM copula. The
inner Y^2-integral over the outage triangle x + y <= rho_t is closed form,

    int_0^a f_Y2(y) (1 + theta g (2F_Y2(y) - 1)) dy = F(a) + theta g (F(a)^2 - F(a)),

so outage is the 1-D integral

    O = int_0^rho_t f_X2(x) [F(a) + theta (2F_X2(x) - 1)(F(a)^2 - F(a))] dx,  a = rho_t - x.

The closed-form route replaces F(a)^2 by its bivariate Fox-H representation
(from gamma(k, w)^2 = 2 int_0^w u^(k-1) e^(-u) gamma(k, u) du) and serves as a
cross-check of the quadrature route.
"""

import logging
import math
from enum import Enum
from functools import lru_cache
from typing import Callable, Optional, Tuple, Union

from scipy import special

from ..copula import FgmTheta, as_theta
from ..marginals import Axis
from ..moments import GammaFit, gamma_fit
from ..montecarlo.config import SystemConfig
from ..specfun import ContourSettings, FoxHBivariateParams, evaluate_bivariate
from .closed_form import OUTAGE_CONTOUR
from .quadrature import OUTER_EPSABS, OUTER_EPSREL, ZERO_THRESHOLD, adaptive_quad
from .result import OutageMethod, OutageResult, clipped

logger = logging.getLogger(__name__)


class BBitRoute(Enum):
    """How F_Y2(a)^2 is evaluated"""
    QUADRATURE = "quadrature"
    CLOSED_FORM = "closed_form"


@lru_cache(maxsize=None)
def squared_cdf_params(shape: float) -> FoxHBivariateParams:
    """
    H-parameters of int_0^w u^(k-1) e^(-u) gamma(k, u) du in the arguments (1, 1/w):
    Gamma(k+s) Gamma(-s) / Gamma(1-s) * Gamma(t) / Gamma(1+t) * Gamma(k-s-t).
    """
    return FoxHBivariateParams(
        joint_upper=((1.0 - shape, 1.0, 1.0),),
        var1_upper=((1.0, 1.0),),
        var1_lower=((shape, 1.0), (0.0, 1.0)),
        var2_upper=((1.0, 1.0),),
        var2_lower=((0.0, 1.0),),
        m1=1, n1=1, m2=1, n2=0,
    )


def squared_cdf_closed_form(fit: GammaFit, value: float,
                            contour: ContourSettings = OUTAGE_CONTOUR) -> Tuple[float, float]:
    """
    F(a)^2 for a Gamma fit through the bivariate H representation.

    Returns:
        (value, contour residual)
    """
    if value <= 0.0:
        return 0.0, 0.0
    w = value / fit.scale
    result = evaluate_bivariate(squared_cdf_params(float(fit.shape)), 1.0, 1.0 / w, contour)
    norm = 2.0 * math.exp(-2.0 * special.gammaln(fit.shape))
    return norm * result.value, norm * result.residual


def default_fits(config: SystemConfig) -> Tuple[GammaFit, GammaFit]:
    """Moment-matched fits of X^2 and Y^2 for a configuration"""
    bits = None if config.continuous_phase else config.bits
    return (gamma_fit(config.elements, bits, Axis.IN_PHASE, config.channel_power),
            gamma_fit(config.elements, bits, Axis.QUADRATURE, config.channel_power))


def _integrate_x2(fit_x: GammaFit, rho_t: float, bracket: Callable[[float], float],
                  epsabs: float) -> Tuple[float, float]:
    """int_0^rho_t f_X2(x) bracket(x) dx, with the x^(k-1) endpoint handled by an algebraic weight"""
    shape, scale = fit_x.shape, fit_x.scale
    if shape < 1.0:
        log_norm = -special.gammaln(shape) - shape * math.log(scale)

        def smooth(x: float) -> float:
            return math.exp(log_norm - x / scale) * bracket(x)

        return adaptive_quad(smooth, 0.0, rho_t, 'b-bit outer', epsabs, OUTER_EPSREL,
                             weight='alg', wvar=(shape - 1.0, 0.0))

    mode = (shape - 1.0) * scale
    points = [mode] if 0.0 < mode < rho_t else None
    return adaptive_quad(lambda x: fit_x.pdf(x) * bracket(x), 0.0, rho_t, 'b-bit outer',
                         epsabs, OUTER_EPSREL, points=points)


def outage_bbit(config: SystemConfig, theta: Union[FgmTheta, float],
                fits: Optional[Tuple[GammaFit, GammaFit]] = None,
                route: BBitRoute = BBitRoute.QUADRATURE,
                contour: ContourSettings = OUTAGE_CONTOUR) -> OutageResult:
    """
    b-bit outage under the Gamma-copula model.

    Args:
        config: Link configuration
        theta: FGM dependence parameter
        fits: (X^2 fit, Y^2 fit); computed from the configuration when omitted
        route: QUADRATURE (F^2 directly) or CLOSED_FORM (F^2 from the H representation)
        contour: Contour settings for the closed-form route

    Returns:
        OutageResult with method QuadratureBBit or ClosedFormBBit

    Raises:
        DegenerateError: If a Gamma fit cannot be formed (continuous phase)
        ConvergenceError: If the outer quadrature or a contour integral fails
    """
    t = as_theta(theta).theta
    route = BBitRoute(route)
    method = OutageMethod.QUADRATURE_BBIT if route is BBitRoute.QUADRATURE else OutageMethod.CLOSED_FORM_BBIT
    rho_t = config.normalized_threshold
    if rho_t <= ZERO_THRESHOLD:
        return OutageResult(0.0, method, 0.0, config, t)

    fit_x, fit_y = fits if fits is not None else default_fits(config)
    mass = fit_x.cdf(rho_t)
    if mass <= 0.0:
        return OutageResult(0.0, method, 0.0, config, t)

    contour_error = [0.0]

    def square(a: float, f_a: float) -> float:
        if route is BBitRoute.QUADRATURE:
            return f_a * f_a
        value, residual = squared_cdf_closed_form(fit_y, a, contour)
        contour_error[0] = max(contour_error[0], residual)
        return value

    def bracket(x: float) -> float:
        a = rho_t - x
        if a <= 0.0:
            return 0.0
        f_a = fit_y.cdf(a)
        if t == 0.0:
            return f_a
        g = 2.0 * fit_x.cdf(x) - 1.0
        return f_a + t * g * (square(a, f_a) - f_a)

    value, error = _integrate_x2(fit_x, rho_t, bracket, OUTER_EPSABS * mass)
    error += abs(t) * contour_error[0]
    logger.debug(f"{method.value} M={config.elements} b={config.bits} rho_t={rho_t:.4g} "
                 f"theta={t:.3f}: {value:.6g}")
    return OutageResult(
        value=clipped(value, 'outage_bbit'),
        method=method,
        err_estimate=error,
        config=config,
        theta=t,
    )
