"""Variance matrices: loading, positivity checks and square roots."""

from __future__ import annotations

import json
import logging
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from ..errors import ConfigError, EnsembleError
from ..verify.schemas import ComplexEntry, SigmaFile
from .quaternion import check_self_dual, embed_quaternion

logger = logging.getLogger(__name__)

FIELDS = ("real", "complex", "quaternion")


def load_sigma(source: str, n: int | None = None) -> np.ndarray:
    """Read Σ from a JSON file, or build I_n for the literal ``identity``."""
    if source == "identity":
        if n is None:
            raise ConfigError("--sigma identity needs a dimension")
        return np.eye(n)
    path = Path(source)
    if not path.exists():
        raise ConfigError(f"sigma file not found: {source}")
    try:
        parsed = SigmaFile.model_validate(json.loads(path.read_text()))
    except (json.JSONDecodeError, ValidationError) as e:
        raise ConfigError(f"bad sigma file {source}: {e}") from e
    if n is not None and parsed.n != n:
        raise ConfigError(f"sigma file is {parsed.n}x{parsed.n}, expected {n}x{n}")
    rows = [[complex(v.re, v.im) if isinstance(v, ComplexEntry) else v for v in row] for row in parsed.data]
    sigma = np.array(rows)
    if np.iscomplexobj(sigma) and not np.any(sigma.imag):
        sigma = sigma.real
    logger.debug(f"Loaded {parsed.n}x{parsed.n} sigma from {source}")
    return sigma


def check_positive_definite(sigma: np.ndarray) -> np.ndarray:
    sigma = np.asarray(sigma)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise EnsembleError(f"sigma must be square, got shape {sigma.shape}")
    if not np.allclose(sigma, np.conj(sigma.T), atol=1e-12):
        raise EnsembleError("sigma is not symmetric/Hermitian")
    lowest = np.linalg.eigvalsh(sigma).min()
    if lowest <= 0:
        raise EnsembleError(f"sigma is not positive definite (min eigenvalue {lowest:.3e})")
    return sigma


def sqrt_psd(sigma: np.ndarray) -> np.ndarray:
    """Σ^{1/2} by Hermitian eigendecomposition."""
    sigma = check_positive_definite(sigma)
    vals, vecs = np.linalg.eigh(sigma)
    root = (vecs * np.sqrt(vals)) @ np.conj(vecs.T)
    return root.real if not np.iscomplexobj(sigma) else root


def field_root(field: str, sigma: np.ndarray | None, n: int) -> np.ndarray | None:
    """Left factor S with X = S·G for the given field; None for Σ = I."""
    if field not in FIELDS:
        raise EnsembleError(f"unknown field {field!r}")
    if sigma is None:
        return None
    sigma = np.asarray(sigma)
    if field == "quaternion":
        if sigma.shape == (n, n):
            sigma = embed_quaternion(sigma)
        if sigma.shape != (2 * n, 2 * n):
            raise EnsembleError(f"quaternion sigma must be {n}x{n} or {2 * n}x{2 * n}")
        check_self_dual(sigma)
        return sqrt_psd(sigma)
    if sigma.shape != (n, n):
        raise EnsembleError(f"sigma must be {n}x{n}, got {sigma.shape}")
    if field == "real" and np.iscomplexobj(sigma):
        raise EnsembleError("real ensemble needs a real sigma")
    return sqrt_psd(sigma)
