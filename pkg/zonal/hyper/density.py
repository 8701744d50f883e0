"""Eigenvalue density of complex Ginibre matrices with a rank-one variance deformation.

For Σ = diag(σ, (1)^N) the duality formula turns e^{-|z|²}⟨|det(z - X)|²⟩/(πN!)
into incomplete gamma functions:

    ρ(z) = (σ/π) Q(N+1, |z|²) + ((1-σ)|z|²/(πN)) Q(N, |z|²)

with Q the regularized upper incomplete gamma function. At σ = 1 this is the
(N+1)-dimensional Ginibre density.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erf, gammaincc

from ..errors import HyperError


@dataclass(frozen=True)
class DensityPoint:
    z: complex
    value: float

    def __post_init__(self):
        if self.value < 0:
            raise HyperError(f"negative density {self.value} at z={self.z}")


def _check(n: int, sigma: float) -> None:
    if n < 1:
        raise HyperError(f"N must be positive, got {n}")
    if sigma <= 0:
        raise HyperError(f"sigma must be positive, got {sigma}")


def rank1_values(r2: np.ndarray, n: int, sigma: float) -> np.ndarray:
    """Vectorized density at |z|² = r2."""
    _check(n, sigma)
    r2 = np.asarray(r2, dtype=float)
    return (sigma / math.pi) * gammaincc(n + 1, r2) + ((1 - sigma) * r2 / (math.pi * n)) * gammaincc(n, r2)


def density_rank1(z: complex, n: int, sigma: float) -> DensityPoint:
    return DensityPoint(z=complex(z), value=float(rank1_values(abs(z) ** 2, n, sigma)))


def density_bulk(z: complex, n: int, sigma: float) -> DensityPoint:
    """Large-N form σ/π + (1-σ)|z|²/(πN) inside the disk."""
    _check(n, sigma)
    x = abs(z) ** 2
    return DensityPoint(z=complex(z), value=max(sigma / math.pi + (1 - sigma) * x / (math.pi * n), 0.0))


def density_edge(r_offset: float) -> float:
    """Edge profile (1 + erf(√2 r))/(2π) at |z| = √N - r."""
    return (1 + erf(math.sqrt(2) * r_offset)) / (2 * math.pi)


def truncated_exponential(z: complex, n: int) -> float:
    """(1/π) e^{-|z|²} Σ_{k≤N} |z|^{2k}/k!."""
    x = abs(z) ** 2
    term, total = 1.0, 1.0
    for k in range(1, n + 1):
        term *= x / k
        total += term
    return math.exp(-x) * total / math.pi


def rank1_total_mass(n: int, sigma: float) -> float:
    """∫ρ over the plane, (N+1)(1+σ)/2; equal to N+1 only at σ = 1."""
    _check(n, sigma)
    return (n + 1) * (1 + sigma) / 2
