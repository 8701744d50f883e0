"""Batched samplers for Ginibre, Haar and Wishart matrices.

Conventions: real entries have variance 1 (weight e^{-x²/2}); complex entries
have E|x|² = 1 (weight e^{-|x|²}); quaternion entries z + w j have
E|z|² = E|w|² = 1. Every sampler draws a batch of ``size`` matrices from one
generator so a block of samples is one vectorized call.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..algebra.partitions import Scalar, exact
from ..errors import EnsembleError
from .quaternion import from_blocks, symplectic_unit
from .sigma import FIELDS, field_root

logger = logging.getLogger(__name__)

GROUPS = ("O", "U", "Sp")


@dataclass(frozen=True)
class EnsembleSpec:
    field: str
    n: int
    sigma: np.ndarray | None = None
    seed: int = 0

    def __post_init__(self):
        if self.field not in FIELDS:
            raise EnsembleError(f"unknown field {self.field!r}")
        if self.n < 1:
            raise EnsembleError(f"dimension must be positive, got {self.n}")

    @property
    def dim(self) -> int:
        """Size of the complex matrices actually sampled."""
        return 2 * self.n if self.field == "quaternion" else self.n


def _complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def gaussian(field: str, rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    """Unit-variance Gaussian blocks of shape (..., rows, cols); quaternion doubles both."""
    if field == "real":
        return rng.standard_normal(shape)
    if field == "complex":
        return _complex_normal(rng, shape)
    if field == "quaternion":
        return from_blocks(_complex_normal(rng, shape), _complex_normal(rng, shape))
    raise EnsembleError(f"unknown field {field!r}")


def sample_ginibre(spec: EnsembleSpec, rng: np.random.Generator, size: int = 1) -> np.ndarray:
    """Batch X = Σ^{1/2}G of shape (size, dim, dim)."""
    g = gaussian(spec.field, rng, (size, spec.n, spec.n))
    root = field_root(spec.field, spec.sigma, spec.n)
    return g if root is None else root @ g


def _fix_phases(q: np.ndarray, r: np.ndarray) -> np.ndarray:
    d = np.diagonal(r, axis1=-2, axis2=-1)
    phase = np.where(np.abs(d) > 0, d / np.abs(d), 1.0)
    return q * phase[..., None, :]


def _symplectic_gram_schmidt(g: np.ndarray) -> np.ndarray:
    """Orthonormalize even columns; each odd column is the partner -J·conj(even)."""
    size, dim, _ = g.shape
    j = symplectic_unit(dim // 2)
    q = np.zeros_like(g)
    for col in range(0, dim, 2):
        v = g[:, :, col].copy()
        for _ in range(2):
            if col:
                basis = q[:, :, :col]
                coeffs = np.einsum("bij,bi->bj", np.conj(basis), v)
                v = v - np.einsum("bij,bj->bi", basis, coeffs)
        v = v / np.linalg.norm(v, axis=1, keepdims=True)
        q[:, :, col] = v
        q[:, :, col + 1] = -np.einsum("ij,bj->bi", j, np.conj(v))
    return q


def sample_haar(group: str, n: int, rng: np.random.Generator, size: int = 1) -> np.ndarray:
    """Haar-distributed O(N), U(N) or Sp(2N) (embedded 2N×2N) matrices."""
    if group == "O":
        q, r = np.linalg.qr(rng.standard_normal((size, n, n)))
        return _fix_phases(q, r)
    if group == "U":
        q, r = np.linalg.qr(_complex_normal(rng, (size, n, n)))
        return _fix_phases(q, r)
    if group == "Sp":
        return _symplectic_gram_schmidt(gaussian("quaternion", rng, (size, n, n)))
    raise EnsembleError(f"unknown group {group!r}; expected one of {GROUPS}")


def sample_wishart(field: str, rows: int, cols: int, rng: np.random.Generator, size: int = 1) -> np.ndarray:
    """W = GG† for a rows×cols Gaussian block (quaternion sizes count quaternions)."""
    g = gaussian(field, rng, (size, rows, cols))
    return g @ np.conj(np.swapaxes(g, -1, -2))


def wishart_columns(alpha_case: Scalar, n: int, a: Scalar) -> int:
    """Number of Gaussian columns M realizing the Laguerre weight λ^a e^{-λ}."""
    alpha, a = exact(alpha_case), exact(a)
    if alpha == 1:
        m = n + a
    elif alpha == 2:
        m = 2 * a + n + 1
    elif alpha == Fraction(1, 2):
        m = (a + 1) / 2 + n - 1
    else:
        raise EnsembleError(f"no matrix model for alpha={alpha}")
    if m.denominator != 1 or m < n:
        raise EnsembleError(f"no matrix model for a={a} at alpha={alpha}, N={n}")
    return int(m)


def laguerre_spectrum(alpha_case: Scalar, n: int, a: Scalar, rng: np.random.Generator, size: int = 1) -> np.ndarray:
    """(size, N) eigenvalues with joint density ∝ Π λ^a e^{-λ} |Δ|^{2/α}."""
    alpha = exact(alpha_case)
    m = wishart_columns(alpha, n, a)
    if alpha == 2:
        w = sample_wishart("real", n, m, rng, size)
        return np.linalg.eigvalsh(w) / 2
    if alpha == 1:
        return np.linalg.eigvalsh(sample_wishart("complex", n, m, rng, size))
    w = sample_wishart("quaternion", n, m, rng, size)
    return np.linalg.eigvalsh(w)[..., 0::2]
