"""r-dimensional duality integrals by generalized Gauss–Laguerre quadrature.

The integral

    ∫ Π_l t_l^{a-1} e^{-t_l} det(I + (t_l/α)Y) Π_{j<k} |t_k - t_j|^{2α} dt

is divided by the same integral with the determinant replaced by 1. When 2α
is even the integrand is a polynomial and a tensor Gauss rule is exact. When
2α = 1 the absolute Vandermonde is handled by de Bruijn's Pfaffian formula,
which reduces the r-fold integral to one- and two-dimensional ones.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy.special import gamma, gammainc, roots_genlaguerre

from ..algebra.partitions import Scalar, jack_param
from ..config import settings
from ..errors import QuadratureError

logger = logging.getLogger(__name__)

MAX_DIMENSION = 4


@lru_cache(maxsize=64)
def laguerre_rule(order: int, a: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for ∫_0^∞ t^{a-1} e^{-t} f(t) dt."""
    nodes, weights = roots_genlaguerre(order, a - 1)
    return nodes, weights


def _det_factor(t: np.ndarray, y: np.ndarray, alpha: float) -> np.ndarray:
    return np.prod(1 + np.multiply.outer(t, y) / alpha, axis=-1)


def _tensor_ratio(r: int, a: float, alpha: Fraction, y: np.ndarray, order: int) -> complex:
    power = int(2 * alpha)
    # exact once 2n-1 covers the per-axis degree N + 2α(r-1)
    degree = len(y) + power * (r - 1)
    n_nodes = min(order, degree // 2 + 2)
    nodes, weights = laguerre_rule(n_nodes, a)
    f = _det_factor(nodes, y, float(alpha))
    grids = np.meshgrid(*([nodes] * r), indexing="ij")
    w = np.ones_like(grids[0])
    det = np.ones_like(grids[0], dtype=f.dtype)
    for axis in range(r):
        shape = [1] * r
        shape[axis] = n_nodes
        w = w * weights.reshape(shape)
        det = det * f.reshape(shape)
    vander = np.ones_like(grids[0])
    for j, k in itertools.combinations(range(r), 2):
        vander = vander * (grids[k] - grids[j]) ** power
    base = np.sum(w * vander)
    return np.sum(w * vander * det) / base


def _poly_coeffs(y: np.ndarray, alpha: float) -> np.ndarray:
    """Coefficients f_m of Π_i (1 + t y_i/α), lowest degree first."""
    coeffs = np.array([1.0], dtype=np.result_type(y, float))
    for v in y:
        coeffs = np.convolve(coeffs, np.array([1.0, v / alpha]))
    return coeffs


def _scaled_lower_gamma(s: float, x: np.ndarray) -> np.ndarray:
    """γ(s, x)/x^s, smooth on [0, ∞)."""
    return gammainc(s, x) * gamma(s) / x**s


def pfaffian(m: np.ndarray) -> complex:
    """Pfaffian of a small antisymmetric matrix by expansion along the first row."""
    size = m.shape[0]
    if size == 0:
        return 1.0
    if size % 2:
        return 0.0
    total = 0.0
    rest = list(range(1, size))
    for idx, j in enumerate(rest):
        if m[0, j] == 0:
            continue
        keep = [i for i in rest if i != j]
        total += (-1) ** idx * m[0, j] * pfaffian(m[np.ix_(keep, keep)])
    return total


def _pfaffian_value(r: int, a: float, coeffs: np.ndarray, order: int) -> complex:
    # the one-sided integral ∫_0^x y^k g(y) dy carries a factor x^{a+k+m}, absorbed into the weight x^{2a-1}e^{-x}
    nodes, weights = laguerre_rule(order, 2 * a)
    f = np.polynomial.polynomial.polyval(nodes, coeffs)
    # G_j = ∫ t^{j+a-1} e^{-t} f(t) dt exactly via Γ
    moments = np.array(
        [sum(c * gamma(a + j + m) for m, c in enumerate(coeffs)) for j in range(r)]
    )
    scaled_lower = [
        sum(c * nodes**m * _scaled_lower_gamma(a + k + m, nodes) for m, c in enumerate(coeffs))
        for k in range(r)
    ]
    size = r + (r % 2)
    mat = np.zeros((size, size), dtype=np.result_type(coeffs, float))
    for j in range(r):
        for k in range(j + 1, r):
            # ∫∫ sign(y - x) x^j y^k g(x) g(y) dx dy
            cross = np.sum(weights * nodes ** (j + k) * f * scaled_lower[k])
            value = moments[j] * moments[k] - 2 * cross
            mat[j, k] = value
            mat[k, j] = -value
    if r % 2:
        mat[:r, r] = moments
        mat[r, :r] = -moments
    return pfaffian(mat)


def _pfaffian_ratio(r: int, a: float, y: np.ndarray, order: int) -> complex:
    coeffs = _poly_coeffs(y, 0.5)
    return _pfaffian_value(r, a, coeffs, order) / _pfaffian_value(r, a, np.array([1.0]), order)


def duality_integral(
    r: int,
    a: float,
    alpha: Scalar,
    y: Sequence[complex],
    order: int | None = None,
) -> complex | float:
    """Normalized r-dimensional integral equal to ₂F₀^(α)(-r, -a/α-(r-1); Y)."""
    alpha = jack_param(alpha)
    order = order or settings.QUAD_ORDER
    if r < 1:
        raise QuadratureError(f"integral dimension must be positive, got {r}")
    if r > MAX_DIMENSION:
        raise QuadratureError(f"quadrature dimension cap: r={r} > {MAX_DIMENSION}")
    if a <= 0:
        raise QuadratureError(f"a must be positive, got {a}")
    y = np.asarray(y)
    if not np.any(y):
        return 1.0
    twice = 2 * alpha
    if r == 1 or (twice.denominator == 1 and twice % 2 == 0):
        value = _tensor_ratio(r, float(a), alpha, y, order)
    elif twice == 1:
        value = _pfaffian_ratio(r, float(a), y, order)
    else:
        raise QuadratureError(f"no quadrature for |Δ|^{twice} with r={r}")
    logger.debug(f"  duality r={r} a={a} alpha={alpha}: {value}")
    return complex(value).real if np.isrealobj(y) else complex(value)
