#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests for moments module
"""

import math

import numpy as np
import pytest
from scipy import integrate, stats

from src.errors import DegenerateError
from src.marginals import Axis, OneBitMarginal
from src.moments import (
    GammaFit,
    cross_term,
    diagonal_term,
    element_moments,
    fit_from_moments,
    fourth_moment,
    gamma_fit,
    mean_square,
    published_cross_term,
    published_diagonal_term,
    published_fourth_moment,
    published_square_term,
    sinc,
    square_term,
    trig_moments,
)
from src.montecarlo import SystemConfig, ks_test, sample_pairs


class TestTrigMoments:
    """Test moments of the quantized phase error"""

    def test_sinc(self):
        """sinc is unnormalised with sinc(0) = 1"""
        assert sinc(0.0) == 1.0
        assert sinc(math.pi / 2.0) == pytest.approx(2.0 / math.pi)

    @pytest.mark.parametrize("L", [2, 4, 8])
    @pytest.mark.parametrize("axis", ["X", "Y"])
    def test_against_quadrature(self, L, axis):
        """Closed forms match E[cos^k] and E[sin^k] over U[-pi/L, pi/L]"""
        trig = math.cos if axis == "X" else math.sin
        w = math.pi / L
        for k, value in enumerate(trig_moments(L, axis), start=1):
            expected, _ = integrate.quad(lambda t: trig(t) ** k, -w, w)
            assert value == pytest.approx(expected / (2.0 * w), abs=1e-12)

    def test_continuous_phase(self):
        """theta = 0 gives cos^k = 1 and sin^k = 0"""
        assert trig_moments(None, Axis.IN_PHASE) == (1.0, 1.0, 1.0, 1.0)
        assert trig_moments(None, Axis.QUADRATURE) == (0.0, 0.0, 0.0, 0.0)

    def test_element_moments_scale(self):
        """mu_k scales with power^k"""
        unit = element_moments(4, "X")
        scaled = element_moments(4, "X", channel_power=2.0)
        assert list(scaled) == pytest.approx([2.0 ** (k + 1) * unit[k] for k in range(4)])


class TestSecondMoment:
    """Test E[X^2] and E[Y^2]"""

    def test_single_element_onebit(self):
        """M = 1, b = 1 gives 0.5 on both axes"""
        assert mean_square(1, 2, "X") == pytest.approx(0.5, abs=1e-15)
        assert mean_square(1, 2, "Y") == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("M", [1, 3, 8])
    def test_onebit_matches_marginals(self, M):
        """One-bit closed form agrees with the exact marginal laws"""
        for axis in Axis:
            assert mean_square(M, 2, axis) == pytest.approx(OneBitMarginal(M, axis, scale=0.5).mean_square(), rel=1e-12)

    @pytest.mark.parametrize("M, L", [(1, 4), (5, 2), (7, 8)])
    def test_total_power(self, M, L):
        """E[X^2] + E[Y^2] = M + M(M-1)|E z e^(j theta)|^2"""
        coherent = math.pi / 4.0 * sinc(math.pi / L)
        total = mean_square(M, L, "X") + mean_square(M, L, "Y")
        assert total == pytest.approx(M + M * (M - 1) * coherent ** 2, rel=1e-12)

    def test_quadrature_decreasing_in_levels(self):
        """E[Y^2] strictly decreases with L"""
        values = [mean_square(6, 2 ** b, "Y") for b in range(1, 7)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_continuous_phase(self):
        """Continuous phase: E[X^2] = M + M(M-1)pi^2/16, E[Y^2] = 0"""
        assert mean_square(3, None, "X") == pytest.approx(3.0 + 6.0 * math.pi ** 2 / 16.0)
        assert mean_square(3, None, "Y") == 0.0

    @pytest.mark.parametrize("kwargs", [{'elements': 0, 'levels': 2}, {'elements': 2, 'levels': 1}])
    def test_invalid(self, kwargs):
        """Element and level counts are validated"""
        with pytest.raises(ValueError):
            mean_square(axis="X", **kwargs)


class TestFourthMoment:
    """Test E[X^4] and E[Y^4]"""

    def test_terms_sum(self):
        """Diagonal, cross and square terms add up to the fourth moment"""
        for axis in ("X", "Y"):
            total = diagonal_term(5, 4, axis) + cross_term(5, 4, axis) + square_term(5, 4, axis)
            assert total == pytest.approx(fourth_moment(5, 4, axis), rel=1e-12)

    @pytest.mark.parametrize("M", [1, 2, 6])
    def test_diagonal_term(self, M):
        """E[(sum d_i^2)^2] = M mu_4 + M(M-1) mu_2^2"""
        for axis in ("X", "Y"):
            _, mu2, _, mu4 = element_moments(8, axis)
            assert diagonal_term(M, 8, axis) == pytest.approx(M * mu4 + M * (M - 1) * mu2 ** 2, rel=1e-12)

    def test_onebit_matches_marginals(self):
        """One-bit X^4 equals the Gamma(M, 1/2) fourth moment"""
        M = 3
        expected, _ = integrate.quad(lambda x: x ** 4 * OneBitMarginal(M, "X", scale=0.5).pdf(x), 0.0, math.inf)
        assert fourth_moment(M, 2, "X") == pytest.approx(expected, rel=1e-8)

    def test_continuous_phase(self):
        """Continuous X is the plain cascade sum"""
        assert fourth_moment(1, None, "X") == pytest.approx(4.0)
        assert fourth_moment(4, None, "Y") == 0.0


class TestPublishedTerms:
    """Test the printed fourth-moment expansion"""

    @pytest.mark.parametrize("M, L", [(1, 2), (4, 4), (9, 8)])
    @pytest.mark.parametrize("axis", ["X", "Y"])
    def test_diagonal_exact(self, M, L, axis):
        """Printed diagonal term equals the expansion"""
        assert published_diagonal_term(M, L, axis) == pytest.approx(diagonal_term(M, L, axis), rel=1e-12)

    @pytest.mark.parametrize("L", [2, 4, 8])
    def test_in_phase_single_element(self, L):
        """X agrees at M = 1"""
        assert published_fourth_moment(1, L, "X") == pytest.approx(fourth_moment(1, L, "X"), rel=1e-12)

    def test_in_phase_disagrees(self):
        """X at M = 4, L = 4 falls well short of the expansion"""
        assert published_fourth_moment(4, 4, "X") < 0.8 * fourth_moment(4, 4, "X")

    @pytest.mark.parametrize("M", [2, 5])
    def test_quadrature_square_factor(self, M):
        """Printed Y square term carries M^2 in place of 2M(M-1)"""
        ratio = 2.0 * (M - 1) / M
        assert published_square_term(M, 4, "Y") * ratio == pytest.approx(square_term(M, 4, "Y"), rel=1e-12)

    def test_quadrature_cross_vanishes(self):
        """Odd sine moments vanish"""
        assert published_cross_term(4, 4, "Y") == 0.0
        assert cross_term(4, 4, "Y") == 0.0

    def test_quadrature_single_element_off(self):
        """Printed Y square term survives at M = 1"""
        excess = published_fourth_moment(1, 2, "Y") - fourth_moment(1, 2, "Y")
        assert excess == pytest.approx(0.25, rel=1e-12)

    def test_needs_finite_levels(self):
        """Printed terms are undefined for continuous phase"""
        with pytest.raises(ValueError):
            published_fourth_moment(2, None, "X")


class TestGammaFit:
    """Test Gamma moment matching"""

    def test_single_element_onebit(self):
        """M = 1, b = 1 gives shape 0.2 and scale 2.5 on both axes"""
        for axis in Axis:
            fit = gamma_fit(1, 1, axis)
            assert fit.shape == pytest.approx(0.2, rel=1e-12)
            assert fit.scale == pytest.approx(2.5, rel=1e-12)

    def test_matches_moments(self):
        """Fitted mean and variance reproduce E[Z^2] and Var[Z^2]"""
        fit = gamma_fit(16, 2, "X")
        second, fourth = mean_square(16, 4, "X"), fourth_moment(16, 4, "X")
        assert fit.mean == pytest.approx(second, rel=1e-12)
        assert fit.variance == pytest.approx(fourth - second ** 2, rel=1e-10)

    def test_continuous_in_phase(self):
        """Continuous X of one element: shape 1/3, scale 3"""
        fit = gamma_fit(1, None, "X")
        assert fit.continuous_phase
        assert fit.shape == pytest.approx(1.0 / 3.0)
        assert fit.scale == pytest.approx(3.0)

    def test_continuous_quadrature_degenerate(self):
        """Continuous Y^2 is a point mass"""
        with pytest.raises(DegenerateError):
            gamma_fit(4, None, "Y")

    def test_zero_variance(self):
        """E[Z^4] = E[Z^2]^2 is degenerate"""
        with pytest.raises(DegenerateError):
            fit_from_moments(2.0, 4.0, "X", 1)

    def test_invalid_bits(self):
        """bits must be a positive integer"""
        with pytest.raises(ValueError):
            gamma_fit(4, 0, "X")

    def test_distribution_methods(self):
        """pdf and cdf follow scipy's Gamma law"""
        fit = GammaFit(shape=1.5, scale=2.0, axis="Y", elements=3, bits=2)
        assert fit.cdf(2.0) == pytest.approx(stats.gamma.cdf(2.0, 1.5, scale=2.0))
        assert isinstance(fit.pdf(2.0), float)
        assert fit.cdf(np.array([1.0, 2.0])).shape == (2,)
        assert fit.to_dict() == {'axis': 'Y', 'elements': 3, 'bits': 2, 'shape': 1.5, 'scale': 2.0}

    def test_nonpositive_parameters(self):
        """Shape and scale must be positive"""
        with pytest.raises(ValueError):
            GammaFit(shape=0.0, scale=1.0, axis="X", elements=1)

    def test_tracks_channel(self):
        """Gamma fit of X^2 stays close to the sampled law"""
        x, _ = sample_pairs(SystemConfig(elements=16, bits=2), 100_000, seed=31)
        fit = gamma_fit(16, 2, "X")
        assert ks_test(x * x, fit.cdf).distance < 0.05
