#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests for specfun module
"""

import math

import mpmath
import pytest
from scipy import integrate

from src.errors import ContourError, PoleError
from src.specfun import (
    ContourSettings,
    FoxHBivariateParams,
    FoxHUnivariateParams,
    Strip,
    evaluate_bivariate,
    evaluate_univariate,
    fox_h_bivariate,
    fox_h_univariate,
    ln_gamma_complex,
    lower_incomplete_gamma,
    meijer_g,
    parse_parameter_text,
    regularized_lower_gamma,
    upper_incomplete_gamma,
)


class TestLogGamma:
    """Test complex log-gamma"""

    def test_unit_argument(self):
        """ln Gamma(1) = 0"""
        assert abs(ln_gamma_complex(1.0)) < 1e-14

    def test_half(self):
        """ln Gamma(1/2) = ln sqrt(pi)"""
        assert ln_gamma_complex(0.5).real == pytest.approx(0.5723649429247001, abs=1e-12)

    @pytest.mark.parametrize("z", [2.5 + 1.5j, -3.3 + 0.2j, 0.1 - 40j, 25 + 3j])
    def test_matches_mpmath(self, z):
        """Principal branch agrees with mpmath.loggamma"""
        expected = complex(mpmath.loggamma(mpmath.mpc(z.real, z.imag)))
        assert abs(ln_gamma_complex(z) - expected) < 1e-10 * max(1.0, abs(expected))

    @pytest.mark.parametrize("z", [0.0, -1.0, -7.0])
    def test_pole(self, z):
        """Nonpositive integers are poles"""
        with pytest.raises(PoleError):
            ln_gamma_complex(z)


class TestIncompleteGamma:
    """Test incomplete gamma functions"""

    def test_exponential_case(self):
        """Gamma(1, x) = e^-x"""
        assert upper_incomplete_gamma(1.0, 0.0) == pytest.approx(1.0)
        assert upper_incomplete_gamma(1.0, 2.3) == pytest.approx(math.exp(-2.3), rel=1e-12)

    def test_complete_value(self):
        """Gamma(3, 0) = 2"""
        assert upper_incomplete_gamma(3.0, 0.0) == pytest.approx(2.0, rel=1e-12)

    def test_against_quadrature(self):
        """Gamma(2.5, 1.7) = int_1.7^inf t^1.5 e^-t dt"""
        expected, _ = integrate.quad(lambda t: t ** 1.5 * math.exp(-t), 1.7, math.inf)
        assert upper_incomplete_gamma(2.5, 1.7) == pytest.approx(expected, rel=1e-9)

    def test_upper_plus_lower(self):
        """gamma(a, x) + Gamma(a, x) = Gamma(a)"""
        total = lower_incomplete_gamma(4.2, 3.1) + upper_incomplete_gamma(4.2, 3.1)
        assert total == pytest.approx(math.gamma(4.2), rel=1e-12)

    def test_decreasing(self):
        """Gamma(a, x) decreases in x"""
        values = [upper_incomplete_gamma(2.0, x) for x in (0.0, 0.5, 1.0, 5.0)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_regularized(self):
        """Regularized lower gamma matches mpmath"""
        expected = float(mpmath.gammainc(3.5, 0, 2.0, regularized=True))
        assert float(regularized_lower_gamma(3.5, 2.0)) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("a, x", [(0.0, 1.0), (-1.0, 1.0), (1.0, -0.1)])
    def test_domain(self, a, x):
        """a <= 0 or x < 0 rejected"""
        with pytest.raises(ValueError):
            upper_incomplete_gamma(a, x)


class TestContourSettings:
    """Test contour validation"""

    def test_defaults(self):
        """Defaults follow the documented values"""
        settings = ContourSettings()
        assert settings.half_height == 60.0
        assert settings.nodes == 512

    @pytest.mark.parametrize("kwargs", [{'half_height': 0.0}, {'nodes': 32}, {'tolerance': 0.0}])
    def test_invalid(self, kwargs):
        """Nonpositive height, too few nodes and zero tolerance rejected"""
        with pytest.raises(ValueError):
            ContourSettings(**kwargs)

    def test_strip_midpoint(self):
        """Finite strips use the midpoint, half-open ones step one unit in"""
        assert Strip(0.0, 2.0).midpoint() == pytest.approx(1.0)
        assert Strip(0.0, math.inf).midpoint() == pytest.approx(1.0)
        assert Strip(-math.inf, 0.0).midpoint() == pytest.approx(-1.0)

    def test_anchor_on_wrong_side(self):
        """An anchor left of the Gamma(s) poles is rejected"""
        params = FoxHUnivariateParams(lower_params=[(0.0, 1.0)], m=1)
        with pytest.raises(ContourError):
            fox_h_univariate(params, 1.0, ContourSettings(anchor1=-0.5))


class TestFoxHUnivariate:
    """Test univariate Fox-H evaluation"""

    def test_exponential(self):
        """H^{1,0}_{0,1}[z | -; (0,1)] = e^-z"""
        params = FoxHUnivariateParams(lower_params=[(0.0, 1.0)], m=1)
        assert fox_h_univariate(params, 1.0) == pytest.approx(math.exp(-1.0), rel=1e-7)

    @pytest.mark.parametrize("x", [0.1, 1.0, 10.0])
    def test_exponential_grid(self, x):
        """Gamma(1, x) = e^-x reproduced on a decade grid"""
        assert meijer_g([], [0.0], 1, 0, x) == pytest.approx(math.exp(-x), rel=1e-8)

    def test_bessel_case(self):
        """G^{2,0}_{0,2}[1 | -; 0, 1/2] = sqrt(pi) e^-2"""
        assert meijer_g([], [0.0, 0.5], 2, 0, 1.0) == pytest.approx(math.sqrt(math.pi) * math.exp(-2.0), rel=1e-7)

    @pytest.mark.parametrize("x", [0.1, 1.0, 10.0])
    def test_lower_incomplete_gamma_case(self, x):
        """G^{1,1}_{1,2}[x | 1; 2, 0] = gamma(2, x)"""
        assert meijer_g([1.0], [2.0, 0.0], 1, 1, x) == pytest.approx(lower_incomplete_gamma(2.0, x), rel=1e-7)

    def test_rational_case(self):
        """G^{1,1}_{1,1}[z | 0; 0] = 1/(1+z)"""
        assert meijer_g([0.0], [0.0], 1, 1, 3.0) == pytest.approx(0.25, rel=1e-7)

    def test_fractional_coefficient(self):
        """H^{1,0}_{0,1}[z | -; (0, 1/2)] = e^(-z^2) scaled: 2 e^(-z^2)"""
        params = FoxHUnivariateParams(lower_params=[(0.0, 0.5)], m=1)
        assert fox_h_univariate(params, 0.8) == pytest.approx(2.0 * math.exp(-0.64), rel=1e-7)

    def test_diagnostics(self):
        """Residual and imaginary residue are within tolerance"""
        params = FoxHUnivariateParams(lower_params=[(0.0, 1.0)], m=1)
        result = evaluate_univariate(params, 2.0)
        assert result.residual <= 1e-8 * abs(result.value) + 1e-14
        assert result.imaginary <= 1e-8 * abs(result.value) + 1e-14

    def test_nondecaying_kernel(self):
        """Kernels without exponential decay are rejected"""
        params = FoxHUnivariateParams(upper_params=[(0.0, 1.0)], lower_params=[(0.0, 1.0)], m=1, n=0)
        with pytest.raises(ContourError):
            fox_h_univariate(params, 1.0)

    def test_bad_split(self):
        """m larger than q is rejected"""
        with pytest.raises(ValueError):
            FoxHUnivariateParams(lower_params=[(0.0, 1.0)], m=2)

    def test_nonpositive_coefficient(self):
        """Per-variable coefficients must be positive"""
        with pytest.raises(ValueError):
            FoxHUnivariateParams(lower_params=[(0.0, 0.0)], m=1)


class TestFoxHBivariate:
    """Test bivariate Fox-H evaluation"""

    def separable(self):
        return FoxHBivariateParams(var1_lower=[(0.0, 1.0)], m1=1, var2_lower=[(0.0, 1.0)], m2=1)

    def test_separable(self):
        """Empty joint groups factorize into univariate values"""
        assert fox_h_bivariate(self.separable(), 1.0, 1.0) == pytest.approx(math.exp(-2.0), rel=1e-8)

    def test_separable_matches_product(self):
        """Separable value equals the product of univariate evaluations"""
        univariate = FoxHUnivariateParams(lower_params=[(0.0, 1.0)], m=1)
        product = fox_h_univariate(univariate, 0.7) * fox_h_univariate(univariate, 2.5)
        assert fox_h_bivariate(self.separable(), 0.7, 2.5) == pytest.approx(product, rel=1e-8)

    def test_beta_coupling(self):
        """Beta-coupled kernel matches its defining integral"""
        # int_0^1 e^(-x u) e^(-y (1-u)) du has kernel Gamma(s) Gamma(t) Gamma(1-s) Gamma(1-t) / Gamma(2-s-t)
        params = FoxHBivariateParams(
            joint_lower=[(-1.0, 1.0, 1.0)],
            var1_upper=[(0.0, 1.0)], var1_lower=[(0.0, 1.0)], m1=1, n1=1,
            var2_upper=[(0.0, 1.0)], var2_lower=[(0.0, 1.0)], m2=1, n2=1,
        )
        x, y = 2.0, 3.0
        expected, _ = integrate.quad(lambda u: math.exp(-x * u - y * (1.0 - u)), 0.0, 1.0, epsabs=1e-14)
        assert fox_h_bivariate(params, x, y) == pytest.approx(expected, rel=1e-6)

    def test_high_resolution_self_oracle(self):
        """Doubling the node count leaves the value unchanged"""
        params = FoxHBivariateParams(
            joint_lower=[(-1.0, 1.0, 1.0)],
            var1_upper=[(0.0, 1.0)], var1_lower=[(0.0, 1.0)], m1=1, n1=1,
            var2_upper=[(0.0, 1.0)], var2_lower=[(0.0, 1.0)], m2=1, n2=1,
        )
        coarse = evaluate_bivariate(params, 2.0, 3.0, ContourSettings(nodes=128, half_height=30.0))
        fine = evaluate_bivariate(params, 2.0, 3.0, ContourSettings(nodes=512, half_height=30.0))
        assert coarse.value == pytest.approx(fine.value, rel=1e-6)

    def test_joint_coefficient_validation(self):
        """Joint coefficients must not both vanish"""
        with pytest.raises(ValueError):
            FoxHBivariateParams(joint_lower=[(0.0, 0.0, 0.0)])


class TestParameterFile:
    """Test specfun-eval parameter files"""

    def test_univariate(self):
        """A univariate file evaluates to the Meijer-G value"""
        spec = parse_parameter_text("# exp(-z)\nlower 0 1\nm 1\nz 1.0\n")
        assert not spec.is_bivariate
        assert spec.evaluate().value == pytest.approx(math.exp(-1.0), rel=1e-7)

    def test_bivariate(self):
        """Bivariate keys select the bivariate evaluator"""
        text = "\n".join([
            "var1_lower 0 1", "m1 1",
            "var2_lower 0 1", "m2 1",
            "x 1", "y 1",
            "nodes 256  # contour",
        ])
        spec = parse_parameter_text(text)
        assert spec.is_bivariate
        assert spec.evaluate().value == pytest.approx(math.exp(-2.0), rel=1e-7)

    def test_missing_argument(self):
        """Univariate files need z"""
        with pytest.raises(ValueError):
            parse_parameter_text("lower 0 1\nm 1\n")
