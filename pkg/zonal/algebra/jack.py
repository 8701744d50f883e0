"""Jack polynomials P_κ^(α) in the monomial basis.

The symmetric eigenoperator

    D = Σ_j (x_j ∂_j)² + ((N-1)/α) Σ_j x_j ∂_j
        + (2/α) Σ_{j<k} x_j x_k/(x_j - x_k) (∂_j - ∂_k)

is triangular in dominance order on the monomial basis. Its exact matrix is
assembled once per (weight, α, N) and P_κ is obtained by back-substitution
from the normalization a_κκ = 1.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..errors import DegenerateEigenvalueError, SymPolyError
from .cache import jack_cache
from .partitions import (
    Partition,
    Scalar,
    conjugate,
    dominance_le,
    exact,
    gen_pochhammer,
    hook_lower,
    hook_upper,
    jack_param,
    partitions_of,
    EMPTY,
)
from .symfunc import SymPoly, eval_batch, eval_exact, eval_poly, orbit

logger = logging.getLogger(__name__)

OperatorMatrix = dict[Partition, dict[Partition, Fraction]]


def _pair_terms(lam: tuple[int, ...], j: int, k: int):
    """Monomials produced by the (j, k) mixing term on x^λ and its (j, k) swap.

    Yields (exponent vector, integer coefficient). Only called with
    λ_j >= λ_k; when they are equal the swap is λ itself.
    """
    a, b = lam[j], lam[k]
    if a == b:
        yield lam, -a
        return
    for i in range(a - b - 1):
        out = list(lam)
        out[j], out[k] = a - 1 - i, b + 1 + i
        yield tuple(out), a
    if b:
        for i in range(a - b + 1):
            out = list(lam)
            out[j], out[k] = a - i, b + i
            yield tuple(out), -b


def _is_sorted(v: tuple[int, ...]) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


@lru_cache(maxsize=None)
def operator_matrix(weight: int, alpha: Fraction, nvars: int) -> OperatorMatrix:
    """Exact matrix of D on {m_μ : |μ| = weight, ℓ(μ) ≤ N}: ``D[μ][ν]`` is the m_ν coefficient of D m_μ."""
    alpha = jack_param(alpha)
    matrix: OperatorMatrix = {}
    for mu in partitions_of(weight, nvars):
        row: dict[Partition, Fraction] = {}
        row[mu] = Fraction(sum(p * p for p in mu.parts)) + Fraction((nvars - 1) * weight) / alpha
        mixing: dict[tuple[int, ...], int] = {}
        for lam in orbit(mu, nvars):
            for j in range(nvars):
                for k in range(j + 1, nvars):
                    if lam[j] < lam[k]:
                        continue
                    for target, c in _pair_terms(lam, j, k):
                        if _is_sorted(target):
                            mixing[target] = mixing.get(target, 0) + c
        for target, c in mixing.items():
            if c:
                nu = Partition(target)
                row[nu] = row.get(nu, Fraction(0)) + 2 * Fraction(c) / alpha
        matrix[mu] = {nu: c for nu, c in row.items() if c != 0}
    return matrix


def eigenvalue(kappa: Partition, alpha: Scalar, nvars: int) -> Fraction:
    """Closed form Σκ_j² + (1/α)Σ_j (N+1-2j)κ_j of the D-eigenvalue of P_κ."""
    alpha = jack_param(alpha)
    return Fraction(sum(p * p for p in kappa.parts)) + sum(
        Fraction((nvars + 1 - 2 * j) * p) for j, p in enumerate(kappa.parts, 1)
    ) / alpha


def _solve(kappa: Partition, alpha: Fraction, nvars: int) -> SymPoly:
    matrix = operator_matrix(kappa.weight, alpha, nvars)
    e_kappa = matrix[kappa][kappa]
    # decreasing lex order refines dominance, so every ν > μ is already solved
    below = [mu for mu in partitions_of(kappa.weight, nvars) if mu < kappa and dominance_le(mu, kappa)]
    coeffs: dict[Partition, Fraction] = {kappa: Fraction(1)}
    for mu in below:
        num = sum((a * matrix[nu].get(mu, 0) for nu, a in coeffs.items()), Fraction(0))
        if num == 0:
            continue
        gap = e_kappa - matrix[mu][mu]
        if gap == 0:
            raise DegenerateEigenvalueError(f"degenerate eigenvalue: e{kappa} = e{mu} at alpha={alpha}")
        coeffs[mu] = num / gap
    return SymPoly(nvars, coeffs)


def jack_poly(kappa: Partition, alpha: Scalar, nvars: int) -> SymPoly:
    """P_κ^(α) in N variables, normalized so the m_κ coefficient is 1.

    Tables come from the shared cache when present; otherwise they are solved
    exactly and stored. Raises ``SymPolyError`` when κ has more than N parts and
    ``DegenerateEigenvalueError`` if two dominance-comparable eigenvalues meet.
    """
    alpha = jack_param(alpha)
    if kappa.length > nvars:
        raise SymPolyError(f"{kappa} has more than {nvars} parts")
    key = (kappa, alpha, nvars)
    poly = jack_cache.get(key)
    if poly is None:
        poly = _solve(kappa, alpha, nvars)
        jack_cache.put(key, poly)
        logger.debug(f"  → P{kappa} alpha={alpha} N={nvars}: {len(poly.coeffs)} terms")
    return poly


def c_factor(kappa: Partition, alpha: Scalar) -> Fraction:
    """α^{|κ|}|κ|!/d'_κ, the ratio C_κ/P_κ."""
    alpha = jack_param(alpha)
    return alpha ** kappa.weight * math.factorial(kappa.weight) / hook_upper(kappa, alpha)


def jack_C_poly(kappa: Partition, alpha: Scalar, nvars: int) -> SymPoly:
    """C_κ^(α) = c_factor·P_κ^(α) in N variables; zero when κ has more than N parts.

    The C-normalization makes Σ_{|κ|=k} C_κ = p_1^k for every α.
    """
    if kappa.length > nvars:
        return SymPoly.zero(nvars)
    return jack_poly(kappa, alpha, nvars).scale(c_factor(kappa, alpha))


def jack_C_eval(kappa: Partition, alpha: Scalar, x: Sequence[complex]) -> complex | float:
    """C_κ^(α) at one numeric point; C_() = 1 whatever N is."""
    nvars = len(x)
    if kappa == EMPTY:
        return 1.0
    if kappa.length > nvars:
        return 0.0
    return eval_poly(jack_C_poly(kappa, alpha, nvars), x)


def jack_C_batch(kappa: Partition, alpha: Scalar, xs: np.ndarray) -> np.ndarray:
    """C_κ^(α) at each row of a (..., N) array of spectra."""
    xs = np.asarray(xs)
    if kappa.length > xs.shape[-1]:
        return np.zeros(xs.shape[:-1])
    return eval_batch(jack_C_poly(kappa, alpha, xs.shape[-1]), xs)


def jack_C_exact(kappa: Partition, alpha: Scalar, x: Sequence[Scalar]) -> Fraction:
    """C_κ^(α) at a rational point, as an exact Fraction."""
    if kappa.length > len(x):
        return Fraction(0)
    return eval_exact(jack_C_poly(kappa, alpha, len(x)), x)


def principal(kappa: Partition, alpha: Scalar, nvars: int) -> Fraction:
    """P_κ^(α)((1)^N) = α^{|κ|}[N/α]_κ/h_κ."""
    alpha = jack_param(alpha)
    return alpha ** kappa.weight * gen_pochhammer(Fraction(nvars) / alpha, kappa, alpha) / hook_lower(kappa, alpha)


def principal_C(kappa: Partition, alpha: Scalar, nvars: int) -> Fraction:
    """C_κ^(α)((1)^N)."""
    return c_factor(kappa, alpha) * principal(kappa, alpha, nvars)


def spectrum(matrix: np.ndarray) -> np.ndarray:
    """Eigenvalues of a square matrix (complex in general)."""
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise SymPolyError(f"expected a square matrix, got shape {m.shape}")
    return np.linalg.eigvals(m)


def real_if_close(value: complex, tol: float = 1e-10) -> complex | float:
    """Drop an imaginary part that is rounding noise relative to the real part."""
    value = complex(value)
    if abs(value.imag) <= tol * max(1.0, abs(value.real)):
        return value.real
    return value


def matrix_C(kappa: Partition, alpha: Scalar, matrix: np.ndarray) -> complex | float:
    """C_κ^(α) of the eigenvalues of a square matrix."""
    eigs = spectrum(matrix)
    if kappa.length > eigs.shape[0]:
        raise SymPolyError(f"matrix dimension {eigs.shape[0]} below length of {kappa}")
    return real_if_close(jack_C_eval(kappa, alpha, eigs))


def coefficient_of_p1_power(kappa: Partition, alpha: Scalar) -> Fraction:
    """Coefficient of p_1^{|κ|} in the power-sum expansion of P_κ, read off m_{1^n}."""
    n = kappa.weight
    if n == 0:
        return Fraction(1)
    ones = Partition((1,) * n)
    return jack_poly(kappa, alpha, n).coefficient(ones) / math.factorial(n)


def dual_cauchy_sides(x: Sequence[Scalar], y: Sequence[Scalar], alpha: Scalar) -> tuple[Fraction, Fraction]:
    """Both sides of Π_{k,l}(1 + x_k y_l) = Σ_κ P_κ^(α)(x) P_κ'^(1/α)(y) at exact points."""
    alpha = jack_param(alpha)
    xs, ys = [exact(v) for v in x], [exact(v) for v in y]
    lhs = Fraction(1)
    for a in xs:
        for b in ys:
            lhs *= 1 + a * b
    rhs = Fraction(0)
    for weight in range(len(xs) * len(ys) + 1):
        for kappa in partitions_of(weight, len(xs), len(ys)):
            left = eval_exact(jack_poly(kappa, alpha, len(xs)), xs) if kappa.weight else Fraction(1)
            kc = conjugate(kappa)
            right = eval_exact(jack_poly(kc, 1 / alpha, len(ys)), ys) if kc.weight else Fraction(1)
            rhs += left * right
    return lhs, rhs
