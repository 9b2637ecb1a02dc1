#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Error Types

Exceptions raised by the numerical engines. Domain violations that are plain
argument mistakes raise ValueError directly; the classes here mark failures the
caller may want to handle separately (the CLI turns ConvergenceError into an
empty CSV cell and exit code 2).
"""

from typing import Optional


class RisCopulaError(Exception):
    """Base class for toolkit errors"""


class PoleError(RisCopulaError, ValueError):
    """Gamma function evaluated at (or within tolerance of) a pole"""


class ContourError(RisCopulaError, ValueError):
    """Mellin-Barnes contour cannot separate the poles or does not decay"""


class DegenerateError(RisCopulaError, ValueError):
    """Fit input carries no information (zero variance, zero gradient)"""


class ConvergenceError(RisCopulaError, RuntimeError):
    """
    Numerical integration failed its self-convergence check.

    Attributes:
        value: Last computed value, if any
        residual: Last change between successive refinements
    """

    def __init__(self, message: str, value: Optional[float] = None, residual: Optional[float] = None):
        super().__init__(message)
        self.value = value
        self.residual = residual
