#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Fox H-Function Evaluation

Univariate and bivariate Fox H-functions (hence Meijer-G) by direct numerical
integration of their Mellin-Barnes representations.

Convention for the univariate kernel, with s = sigma + i*u:

    H(z) = 1/(2 pi i) * Integral chi(s) z^(-s) ds
    chi(s) = prod_{j<=m} Gamma(b_j + B_j s) * prod_{j<=n} Gamma(1 - a_j - A_j s)
             / ( prod_{j>m} Gamma(1 - b_j - B_j s) * prod_{j>n} Gamma(a_j + A_j s) )

The bivariate kernel multiplies one such factor per variable by joint factors
Gamma(1 - c - C1 s - C2 t), in the numerator for joint_upper entries and in the
denominator for joint_lower entries. All products are formed in the log domain
and the largest real log is subtracted before exponentiation.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Tuple

import numpy as np

from ..errors import ContourError, ConvergenceError
from .contour import ContourSettings, Strip, choose_anchor, contour_nodes, grading_for
from .gamma import log_gamma_array

logger = logging.getLogger(__name__)

Pair = Tuple[float, float]
Triple = Tuple[float, float, float]

ROUNDOFF_FACTOR = 64 * np.finfo(float).eps
CHUNK_ELEMENTS = 1 << 18
DECAY_DIRECTIONS = 72
TWO_PI = 2.0 * math.pi


def _as_pairs(values: Iterable[Sequence[float]], label: str) -> Tuple[Pair, ...]:
    pairs = []
    for item in values:
        if len(item) != 2:
            raise ValueError(f"{label} entries must be (value, coefficient) pairs, got {item!r}")
        value, coeff = float(item[0]), float(item[1])
        if not coeff > 0:
            raise ValueError(f"{label} coefficients must be strictly positive, got {coeff}")
        pairs.append((value, coeff))
    return tuple(pairs)


def _as_triples(values: Iterable[Sequence[float]], label: str) -> Tuple[Triple, ...]:
    triples = []
    for item in values:
        if len(item) != 3:
            raise ValueError(f"{label} entries must be (c, C1, C2) triples, got {item!r}")
        c, c1, c2 = (float(v) for v in item)
        if c1 < 0 or c2 < 0 or not c1 + c2 > 0:
            raise ValueError(f"{label} coefficients must be >= 0 with C1 + C2 > 0, got ({c1}, {c2})")
        triples.append((c, c1, c2))
    return tuple(triples)


def _check_split(m: int, n: int, lower: Tuple, upper: Tuple, label: str) -> None:
    if not 0 <= m <= len(lower):
        raise ValueError(f"{label}: need 0 <= m <= q={len(lower)}, got m={m}")
    if not 0 <= n <= len(upper):
        raise ValueError(f"{label}: need 0 <= n <= p={len(upper)}, got n={n}")


@dataclass(frozen=True)
class FoxHUnivariateParams:
    """Parameters of H_{p,q}^{m,n}[z | (a_j, A_j); (b_j, B_j)]"""
    upper_params: Tuple[Pair, ...] = ()
    lower_params: Tuple[Pair, ...] = ()
    m: int = 0
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'upper_params', _as_pairs(self.upper_params, 'upper_params'))
        object.__setattr__(self, 'lower_params', _as_pairs(self.lower_params, 'lower_params'))
        _check_split(self.m, self.n, self.lower_params, self.upper_params, 'FoxHUnivariateParams')

    def strip(self) -> Strip:
        """Real parts separating the Gamma(b+Bs) poles from the Gamma(1-a-As) poles"""
        lower = max((-b / bb for b, bb in self.lower_params[:self.m]), default=-math.inf)
        upper = min(((1.0 - a) / aa for a, aa in self.upper_params[:self.n]), default=math.inf)
        return Strip(lower, upper)

    def numerator_weights(self) -> float:
        return (sum(bb for _, bb in self.lower_params[:self.m])
                + sum(aa for _, aa in self.upper_params[:self.n]))

    def denominator_weights(self) -> float:
        return (sum(bb for _, bb in self.lower_params[self.m:])
                + sum(aa for _, aa in self.upper_params[self.n:]))

    def log_kernel(self, s: np.ndarray) -> np.ndarray:
        """log chi(s) along an array of contour points"""
        total = np.zeros_like(s, dtype=complex)
        for b, bb in self.lower_params[:self.m]:
            total += log_gamma_array(b + bb * s)
        for a, aa in self.upper_params[:self.n]:
            total += log_gamma_array(1.0 - a - aa * s)
        for b, bb in self.lower_params[self.m:]:
            total -= log_gamma_array(1.0 - b - bb * s)
        for a, aa in self.upper_params[self.n:]:
            total -= log_gamma_array(a + aa * s)
        return total


@dataclass(frozen=True)
class FoxHBivariateParams:
    """
    Parameters of a bivariate H-function.

    Per-variable blocks follow the univariate layout (var1 with split m1, n1;
    var2 with split m2, n2). Joint entries (c, C1, C2) enter as
    Gamma(1 - c - C1 s - C2 t): numerator for joint_upper, denominator for
    joint_lower. A factor that involves only one variable but does not fit the
    per-variable layout may be stored as a joint entry with a zero coefficient.
    """
    joint_upper: Tuple[Triple, ...] = ()
    joint_lower: Tuple[Triple, ...] = ()
    var1_upper: Tuple[Pair, ...] = ()
    var1_lower: Tuple[Pair, ...] = ()
    var2_upper: Tuple[Pair, ...] = ()
    var2_lower: Tuple[Pair, ...] = ()
    m1: int = 0
    n1: int = 0
    m2: int = 0
    n2: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'joint_upper', _as_triples(self.joint_upper, 'joint_upper'))
        object.__setattr__(self, 'joint_lower', _as_triples(self.joint_lower, 'joint_lower'))
        for name in ('var1_upper', 'var1_lower', 'var2_upper', 'var2_lower'):
            object.__setattr__(self, name, _as_pairs(getattr(self, name), name))
        _check_split(self.m1, self.n1, self.var1_lower, self.var1_upper, 'var1')
        _check_split(self.m2, self.n2, self.var2_lower, self.var2_upper, 'var2')

    @property
    def first(self) -> FoxHUnivariateParams:
        return FoxHUnivariateParams(self.var1_upper, self.var1_lower, self.m1, self.n1)

    @property
    def second(self) -> FoxHUnivariateParams:
        return FoxHUnivariateParams(self.var2_upper, self.var2_lower, self.m2, self.n2)

    def log_joint(self, s: np.ndarray, t: np.ndarray) -> np.ndarray:
        """Joint log factors on a broadcast grid of (s, t)"""
        total = np.zeros(np.broadcast(s, t).shape, dtype=complex)
        for c, c1, c2 in self.joint_upper:
            total += log_gamma_array(1.0 - c - c1 * s - c2 * t)
        for c, c1, c2 in self.joint_lower:
            total -= log_gamma_array(1.0 - c - c1 * s - c2 * t)
        return total

    def decay_rate(self) -> float:
        """
        Minimum exponential decay rate of |kernel| over directions in the
        (Im s, Im t) plane, in units of pi/2. Must be positive.
        """
        first, second = self.first, self.second
        angles = np.linspace(0.0, 2.0 * math.pi, DECAY_DIRECTIONS, endpoint=False)
        cu, cv = np.abs(np.cos(angles)), np.abs(np.sin(angles))
        rate = (first.numerator_weights() - first.denominator_weights()) * cu
        rate = rate + (second.numerator_weights() - second.denominator_weights()) * cv
        cos_a, sin_a = np.cos(angles), np.sin(angles)
        for _, c1, c2 in self.joint_upper:
            rate = rate + np.abs(c1 * cos_a + c2 * sin_a)
        for _, c1, c2 in self.joint_lower:
            rate = rate - np.abs(c1 * cos_a + c2 * sin_a)
        return float(rate.min())

    def resolve_anchors(self, contour: ContourSettings) -> Tuple[float, float, Strip, Strip]:
        """
        Choose (or validate) both anchors.

        Joint numerators with a zero coefficient bound a single variable; the
        coupled ones bound t once s is fixed, and also cap s so that some t
        remains admissible.
        """
        strip1, strip2 = self.first.strip(), self.second.strip()
        coupled = []
        for c, c1, c2 in self.joint_upper:
            if c2 == 0.0:
                strip1 = strip1.tightened(upper=(1.0 - c) / c1)
            elif c1 == 0.0:
                strip2 = strip2.tightened(upper=(1.0 - c) / c2)
            else:
                coupled.append((c, c1, c2))
        for c, c1, c2 in coupled:
            if math.isfinite(strip2.lower):
                strip1 = strip1.tightened(upper=(1.0 - c - c2 * strip2.lower) / c1)

        sigma = choose_anchor(strip1, contour.anchor1, 'first variable')
        for c, c1, c2 in coupled:
            strip2 = strip2.tightened(upper=(1.0 - c - c1 * sigma) / c2)
        tau = choose_anchor(strip2, contour.anchor2, 'second variable')
        return sigma, tau, strip1, strip2


@dataclass(frozen=True)
class ContourResult:
    """Value of a contour integral with its self-convergence residual"""
    value: float
    residual: float
    nodes: int
    half_height: float
    imaginary: float = 0.0


@dataclass
class _Pass:
    value: complex
    magnitude: float
    edge_ratio: float


def _refine(evaluate: Callable[[int, float], _Pass], contour: ContourSettings, label: str) -> ContourResult:
    """
    Drive node doubling (and half-height doubling when truncation dominates)
    until two successive passes agree to the contour tolerance.
    """
    nodes, half_height = contour.nodes, contour.half_height
    current = evaluate(nodes, half_height)
    residual = math.inf

    for attempt in range(contour.max_refinements + 1):
        if current.edge_ratio > contour.tolerance:
            logger.debug(f"{label}: truncation at h={half_height} (edge ratio {current.edge_ratio:.2e}), widening")
            nodes, half_height = 2 * nodes, 2 * half_height
            current = evaluate(nodes, half_height)
            continue

        refined = evaluate(2 * nodes, half_height)
        residual = abs(refined.value - current.value)
        floor = ROUNDOFF_FACTOR * refined.magnitude
        if residual <= max(contour.tolerance * abs(refined.value.real), floor):
            imaginary = abs(refined.value.imag)
            if imaginary > max(contour.tolerance * max(abs(refined.value.real), 1e-30), floor):
                raise ConvergenceError(
                    f"{label}: imaginary residue {imaginary:.3e} exceeds tolerance",
                    value=refined.value.real, residual=imaginary,
                )
            return ContourResult(
                value=float(refined.value.real),
                residual=float(max(residual, floor)),
                nodes=2 * nodes,
                half_height=half_height,
                imaginary=float(imaginary),
            )
        logger.debug(f"{label}: nodes={nodes} residual={residual:.3e}, doubling")
        nodes *= 2
        current = refined

    raise ConvergenceError(
        f"{label}: no self-convergence after {contour.max_refinements} refinements "
        f"(last residual {residual:.3e})",
        value=float(current.value.real), residual=float(residual),
    )


def _check_argument(value: float, label: str) -> float:
    value = float(value)
    if not value > 0 or not math.isfinite(value):
        raise ValueError(f"{label} must be a positive finite real, got {value}")
    return value


@lru_cache(maxsize=4096)
def _univariate(params: FoxHUnivariateParams, z: float, contour: ContourSettings) -> ContourResult:
    if params.numerator_weights() - params.denominator_weights() <= 0:
        raise ContourError("Mellin-Barnes integrand does not decay along the contour")
    strip = params.strip()
    sigma = choose_anchor(strip, contour.anchor1, 'variable')
    grading = grading_for(strip, sigma)
    log_z = math.log(z)

    def evaluate(nodes: int, half_height: float) -> _Pass:
        u, w = contour_nodes(half_height, nodes, grading)
        s = sigma + 1j * u
        log_terms = params.log_kernel(s) - s * log_z
        shift = float(np.max(log_terms.real))
        terms = np.exp(log_terms - shift)
        magnitude = np.abs(terms)
        scale = math.exp(shift) / TWO_PI
        return _Pass(
            value=complex(w @ terms) * scale,
            magnitude=float(w @ magnitude) * scale,
            edge_ratio=float(max(magnitude[0], magnitude[-1])),
        )

    return _refine(evaluate, contour, 'fox_h_univariate')


def evaluate_univariate(params: FoxHUnivariateParams, z: float,
                        contour: ContourSettings = ContourSettings()) -> ContourResult:
    """Univariate H-function with its convergence diagnostics"""
    return _univariate(params, _check_argument(z, 'z'), contour)


def fox_h_univariate(params: FoxHUnivariateParams, z: float,
                     contour: ContourSettings = ContourSettings()) -> float:
    """
    Evaluate H_{p,q}^{m,n}[z].

    Args:
        params: Gamma parameter groups
        z: Positive real argument
        contour: Line placement and discretisation

    Returns:
        Real value of the Mellin-Barnes integral
    """
    return evaluate_univariate(params, z, contour).value


@lru_cache(maxsize=4096)
def _bivariate(params: FoxHBivariateParams, x: float, y: float, contour: ContourSettings) -> ContourResult:
    if params.decay_rate() <= 0:
        raise ContourError("Bivariate Mellin-Barnes integrand does not decay in every direction")
    sigma, tau, strip1, strip2 = params.resolve_anchors(contour)
    grading1 = grading_for(strip1, sigma)
    grading2 = grading_for(strip2, tau)
    log_x, log_y = math.log(x), math.log(y)
    first, second = params.first, params.second

    def evaluate(nodes: int, half_height: float) -> _Pass:
        u1, w1 = contour_nodes(half_height, nodes, grading1)
        u2, w2 = contour_nodes(half_height, nodes, grading2)
        s = sigma + 1j * u1
        t = tau + 1j * u2
        part1 = first.log_kernel(s) - s * log_x
        part2 = second.log_kernel(t) - t * log_y

        rows = max(1, CHUNK_ELEMENTS // len(t))
        total, magnitude, shift = 0j, 0.0, -math.inf
        edge_log = -math.inf
        last_row = len(s) - 1

        for start in range(0, len(s), rows):
            stop = min(start + rows, len(s))
            grid = part1[start:stop, None] + part2[None, :] + params.log_joint(s[start:stop, None], t[None, :])
            real = grid.real
            chunk_shift = float(real.max())
            terms = np.exp(grid - chunk_shift)
            chunk_total = complex(w1[start:stop] @ terms @ w2)
            chunk_magnitude = float(w1[start:stop] @ np.abs(terms) @ w2)

            border = [real[:, 0].max(), real[:, -1].max()]
            if start == 0:
                border.append(real[0].max())
            if stop - 1 == last_row:
                border.append(real[-1].max())
            edge_log = max(edge_log, float(max(border)))

            if chunk_shift > shift:
                rescale = math.exp(shift - chunk_shift) if math.isfinite(shift) else 0.0
                total, magnitude, shift = total * rescale, magnitude * rescale, chunk_shift
                total += chunk_total
                magnitude += chunk_magnitude
            else:
                rescale = math.exp(chunk_shift - shift)
                total += chunk_total * rescale
                magnitude += chunk_magnitude * rescale

        scale = math.exp(shift) / (TWO_PI * TWO_PI)
        return _Pass(
            value=total * scale,
            magnitude=magnitude * scale,
            edge_ratio=math.exp(edge_log - shift),
        )

    return _refine(evaluate, contour, 'fox_h_bivariate')


def evaluate_bivariate(params: FoxHBivariateParams, x: float, y: float,
                       contour: ContourSettings = ContourSettings()) -> ContourResult:
    """Bivariate H-function with its convergence diagnostics"""
    return _bivariate(params, _check_argument(x, 'x'), _check_argument(y, 'y'), contour)


def fox_h_bivariate(params: FoxHBivariateParams, x: float, y: float,
                    contour: ContourSettings = ContourSettings()) -> float:
    """
    Evaluate the bivariate H-function at (x, y).

    Args:
        params: Joint and per-variable gamma groups
        x: First positive argument
        y: Second positive argument
        contour: Line placement and discretisation

    Returns:
        Real value of the double Mellin-Barnes integral
    """
    return evaluate_bivariate(params, x, y, contour).value


def meijer_g_params(a: Sequence[float], b: Sequence[float], m: int, n: int) -> FoxHUnivariateParams:
    """G_{p,q}^{m,n}[z | a; b] as the all-coefficients-one H-function"""
    return FoxHUnivariateParams(
        upper_params=tuple((value, 1.0) for value in a),
        lower_params=tuple((value, 1.0) for value in b),
        m=m,
        n=n,
    )


def meijer_g(a: Sequence[float], b: Sequence[float], m: int, n: int, z: float,
             contour: ContourSettings = ContourSettings()) -> float:
    """Meijer G-function by contour integration"""
    return fox_h_univariate(meijer_g_params(a, b, m, n), z, contour)
