"""Quaternion matrices in their self-dual 2N×2N complex embedding.

The quaternion q = z + w j is the block [[z, w], [-w̄, z̄]]; a matrix M is
self-dual when J·conj(M)·J⁻¹ = M with J the block-diagonal symplectic unit.
"""

from __future__ import annotations

import numpy as np

from ..errors import EnsembleError

SELF_DUAL_TOL = 1e-10


def symplectic_unit(n: int) -> np.ndarray:
    return np.kron(np.eye(n), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def from_blocks(z: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Assemble (..., N, N) complex parts into (..., 2N, 2N) embedded matrices."""
    z, w = np.asarray(z, dtype=complex), np.asarray(w, dtype=complex)
    *batch, n, _ = z.shape
    m = np.empty((*batch, 2 * n, 2 * n), dtype=complex)
    m[..., 0::2, 0::2] = z
    m[..., 0::2, 1::2] = w
    m[..., 1::2, 0::2] = -np.conj(w)
    m[..., 1::2, 1::2] = np.conj(z)
    return m


def self_dual_error(m: np.ndarray) -> float:
    m = np.asarray(m)
    if m.shape[-1] % 2 or m.shape[-1] != m.shape[-2]:
        return float("inf")
    j = symplectic_unit(m.shape[-1] // 2)
    return float(np.max(np.abs(j @ np.conj(m) @ j.T - m)))


def check_self_dual(m: np.ndarray) -> None:
    err = self_dual_error(m)
    if err > SELF_DUAL_TOL * max(1.0, float(np.max(np.abs(m)))):
        raise EnsembleError(f"matrix is not self-dual (error {err:.2e})")


def embed_quaternion(sigma: np.ndarray) -> np.ndarray:
    """Lift an N×N complex matrix to 2N×2N, each entry c becoming diag(c, c̄)."""
    sigma = np.asarray(sigma, dtype=complex)
    return from_blocks(sigma, np.zeros_like(sigma))


def qtrace(m: np.ndarray) -> complex:
    check_self_dual(m)
    return np.trace(m) / 2


def qdet_charpoly(m: np.ndarray, x: float) -> float:
    """det(I_2N - xM), real for self-dual M and real x."""
    check_self_dual(m)
    if np.iscomplexobj(x) and np.imag(x) != 0:
        raise EnsembleError("quaternion characteristic polynomial needs real x")
    d = np.linalg.det(np.eye(m.shape[0]) - float(np.real(x)) * m)
    if abs(d.imag) > SELF_DUAL_TOL * max(1.0, abs(d)):
        raise EnsembleError(f"non-real quaternion determinant (imag {d.imag:.2e})")
    return float(d.real)


def quaternion_spectrum(m: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """One eigenvalue from each conjugate pair of a self-dual matrix (N values)."""
    m = np.asarray(m)
    n = m.shape[0] // 2
    if np.allclose(m, np.conj(m.T), atol=tol):
        return np.linalg.eigvalsh(m)[0::2]
    eigs = np.linalg.eigvals(m)
    upper = eigs[eigs.imag > tol * max(1.0, float(np.max(np.abs(eigs))))]
    real = np.sort(eigs[np.abs(eigs.imag) <= tol * max(1.0, float(np.max(np.abs(eigs))))].real)
    picked = np.concatenate([upper, real[0::2]])
    if picked.shape[0] != n:
        raise EnsembleError(f"eigenvalues do not pair up: got {picked.shape[0]} of {n}")
    return picked
