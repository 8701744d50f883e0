"""Symmetric polynomials in N variables, stored sparsely in the monomial basis.

A ``SymPoly`` maps partitions to exact coefficients: ``{κ: c}`` stands for
Σ c·m_κ(x_1, ..., x_N). Products of monomial symmetric functions are
expanded exactly by enumerating one orbit and rescaling by orbit sizes.
"""

from __future__ import annotations

import logging
import math
import threading
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from ..errors import SymPolyError
from .partitions import (
    EMPTY,
    Partition,
    Scalar,
    exact,
    hook,
    partitions_of,
    scalar_to_str,
)

logger = logging.getLogger(__name__)

# below this relative eigenvalue gap the bialternant is treated as 0/0
BIALTERNANT_GAP = 1e-8
EXPANSION_MAX_NVARS = 8


@dataclass(frozen=True)
class SymPoly:
    nvars: int
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.nvars < 1:
            raise SymPolyError(f"nvars must be positive, got {self.nvars}")
        clean = {}
        for kappa, c in self.coeffs.items():
            c = exact(c)
            if c != 0 and kappa.length <= self.nvars:
                clean[kappa] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, nvars: int) -> "SymPoly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "SymPoly":
        return cls(nvars, {EMPTY: Fraction(1)})

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, kappa: Partition) -> Fraction:
        return self.coeffs.get(kappa, Fraction(0))

    def support(self) -> list[Partition]:
        return sorted(self.coeffs, reverse=True)

    def _check(self, other: "SymPoly") -> None:
        if self.nvars != other.nvars:
            raise SymPolyError(f"mismatched nvars: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out = dict(self.coeffs)
        for kappa, c in other.coeffs.items():
            out[kappa] = out.get(kappa, Fraction(0)) + c
        return SymPoly(self.nvars, out)

    def __neg__(self) -> "SymPoly":
        return self.scale(-1)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def scale(self, factor: Scalar) -> "SymPoly":
        factor = exact(factor)
        return SymPoly(self.nvars, {k: c * factor for k, c in self.coeffs.items()})

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out: dict[Partition, Fraction] = {}
        for kappa, a in self.coeffs.items():
            for mu, b in other.coeffs.items():
                for nu, count in mono_product(kappa, mu, self.nvars).items():
                    out[nu] = out.get(nu, Fraction(0)) + a * b * count
        return SymPoly(self.nvars, out)

    def __pow__(self, k: int) -> "SymPoly":
        result = SymPoly.one(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"partition": kappa.to_json(), "coeff": scalar_to_str(self.coeffs[kappa])}
                for kappa in self.support()
            ],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "SymPoly":
        return cls(
            int(payload["nvars"]),
            {Partition(tuple(t["partition"])): Fraction(t["coeff"]) for t in payload["terms"]},
        )


def mono(kappa: Partition, nvars: int) -> SymPoly:
    """m_κ in N variables (zero when κ has more than N parts)."""
    return SymPoly(nvars, {kappa: Fraction(1)})


@lru_cache(maxsize=None)
def orbit(kappa: Partition, nvars: int) -> tuple[tuple[int, ...], ...]:
    """Distinct exponent vectors of the monomials making up m_κ."""
    return tuple(tuple(v) for v in multiset_permutations(list(kappa.padded(nvars))))


def orbit_size(kappa: Partition, nvars: int) -> int:
    counts = Counter(kappa.padded(nvars))
    size = math.factorial(nvars)
    for c in counts.values():
        size //= math.factorial(c)
    return size


@lru_cache(maxsize=None)
def mono_product(kappa: Partition, mu: Partition, nvars: int) -> dict[Partition, int]:
    """Structure constants of m_κ·m_μ in N variables."""
    if kappa.length > nvars or mu.length > nvars:
        return {}
    base = kappa.padded(nvars)
    hits: Counter = Counter()
    for b in orbit(mu, nvars):
        nu = Partition(tuple(sorted((x + y for x, y in zip(base, b)), reverse=True)))
        hits[nu] += 1
    size_kappa = orbit_size(kappa, nvars)
    return {nu: count * size_kappa // orbit_size(nu, nvars) for nu, count in hits.items()}


@lru_cache(maxsize=None)
def _orbit_array(kappa: Partition, nvars: int) -> np.ndarray:
    return np.array(orbit(kappa, nvars), dtype=int).reshape(-1, nvars)


def _as_spectrum(x: Sequence[complex], nvars: int) -> np.ndarray:
    arr = np.asarray(x)
    if arr.ndim != 1 or arr.shape[0] != nvars:
        raise SymPolyError(f"length mismatch: expected {nvars} values, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise SymPolyError("spectrum entries must be finite")
    return arr


def mono_eval(kappa: Partition, x: np.ndarray) -> complex:
    exps = _orbit_array(kappa, x.shape[0])
    return np.prod(x[None, :] ** exps, axis=1).sum()


def eval_poly(p: SymPoly, x: Sequence[complex]) -> complex | float:
    """Numeric value of p at the spectrum x."""
    arr = _as_spectrum(x, p.nvars)
    total = 0
    for kappa, c in p.coeffs.items():
        total += float(c) * mono_eval(kappa, arr)
    return total


def eval_batch(p: SymPoly, xs: np.ndarray) -> np.ndarray:
    """Values of p at each row of a (..., N) array of spectra."""
    xs = np.asarray(xs)
    if xs.shape[-1] != p.nvars:
        raise SymPolyError(f"length mismatch: expected {p.nvars} values, got {xs.shape[-1]}")
    total = np.zeros(xs.shape[:-1], dtype=np.result_type(xs, float))
    for kappa, c in p.coeffs.items():
        exps = _orbit_array(kappa, p.nvars)
        total = total + float(c) * np.prod(xs[..., None, :] ** exps, axis=-1).sum(axis=-1)
    return total


def eval_exact(p: SymPoly, x: Sequence[Scalar]) -> Fraction:
    """Exact value of p at a rational point."""
    if len(x) != p.nvars:
        raise SymPolyError(f"length mismatch: expected {p.nvars} values, got {len(x)}")
    xs = [exact(v) for v in x]
    total = Fraction(0)
    for kappa, c in p.coeffs.items():
        term = Fraction(0)
        for exps in orbit(kappa, p.nvars):
            m = Fraction(1)
            for v, e in zip(xs, exps):
                if e:
                    m *= v ** e
            term += m
        total += c * term
    return total


def power_sum(k: int, nvars: int) -> SymPoly:
    return mono(Partition((k,)), nvars)


def elementary(k: int, nvars: int) -> SymPoly:
    return mono(Partition((1,) * k), nvars)


def hook_expansion(k: int) -> list[tuple[Partition, int]]:
    """p_k = Σ_l (-1)^l s_(k-l,1^l)."""
    if k < 1:
        raise SymPolyError(f"power sum index must be positive, got {k}")
    return [(hook(k, l), (-1) ** l) for l in range(k)]


def _horizontal_strips(lam: tuple[int, ...], size: int):
    """Partitions ρ ⊆ λ with λ/ρ a horizontal strip of the given size."""
    n = len(lam)

    def rec(i: int, remaining: int, acc: list[int]):
        if i == n:
            if remaining == 0:
                yield tuple(p for p in acc if p > 0)
            return
        low = lam[i + 1] if i + 1 < n else 0
        for rho_i in range(lam[i], low - 1, -1):
            taken = lam[i] - rho_i
            if taken > remaining:
                break
            acc.append(rho_i)
            yield from rec(i + 1, remaining - taken, acc)
            acc.pop()

    yield from rec(0, size, [])


@lru_cache(maxsize=None)
def kostka(shape: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of the given shape and content."""
    if not content:
        return 1 if shape.weight == 0 else 0
    if sum(content) != shape.weight:
        return 0
    last, rest = content[-1], content[:-1]
    return sum(kostka(Partition(rho), rest) for rho in _horizontal_strips(shape.parts, last))


_schur_lock = threading.Lock()
_schur_table: dict[tuple[Partition, int], SymPoly] = {}


def schur_poly(mu: Partition, nvars: int) -> SymPoly:
    """Monomial expansion of s_μ in N variables via Kostka numbers."""
    key = (mu, nvars)
    cached = _schur_table.get(key)
    if cached is not None:
        return cached
    coeffs = {}
    if mu.length <= nvars:
        for nu in partitions_of(mu.weight, nvars):
            k = kostka(mu, nu.parts)
            if k:
                coeffs[nu] = Fraction(k)
    poly = SymPoly(nvars, coeffs)
    with _schur_lock:
        _schur_table[key] = poly
    return poly


def _well_separated(x: np.ndarray) -> bool:
    scale = np.max(np.abs(x))
    if scale == 0:
        return False
    gaps = np.abs(x[:, None] - x[None, :])[np.triu_indices(x.shape[0], 1)]
    return gaps.size == 0 or gaps.min() >= BIALTERNANT_GAP * scale


def schur_eval(mu: Partition, x: Sequence[complex]) -> complex | float:
    """s_μ(x) by the bialternant, or by exact expansion when eigenvalues nearly coincide."""
    arr = np.asarray(x)
    n = arr.shape[0]
    if mu.length > n:
        return 0.0
    if _well_separated(arr):
        exps = np.array(mu.padded(n)) + np.arange(n - 1, -1, -1)
        numerator = np.linalg.det(arr[:, None] ** exps[None, :])
        denominator = np.linalg.det(arr[:, None] ** np.arange(n - 1, -1, -1)[None, :])
        return numerator / denominator
    if n > EXPANSION_MAX_NVARS:
        raise SymPolyError("ill-conditioned bialternant")
    logger.debug(f"degenerate spectrum for s_{mu}; using monomial expansion")
    return eval_poly(schur_poly(mu, n), arr)


def power_sum_eval(k: int, x: Sequence[complex]) -> complex | float:
    return np.sum(np.asarray(x) ** k)
