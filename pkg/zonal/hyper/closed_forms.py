"""Closed-form Ginibre, Haar, Wishart and Laguerre averages in terms of zonal polynomials.

Field ↔ Jack parameter: real ↔ 2, complex ↔ 1, quaternion ↔ 1/2. Quaternion
matrices are passed in their 2N×2N self-dual embedding (lift an N×N matrix
explicitly with ``as_quaternion(m, embedded=False)``) and zonal polynomials
are evaluated on the N quaternion eigenvalues. With unit-variance quaternion
entries the printed factor 2^{-|κ|} cancels against the doubled argument, so
quaternion averages read [2N]^(1/2)_κ C_κ(AA†)/C_κ((1)^N).
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction

import numpy as np
from scipy.special import multigammaln

from ..algebra.jack import jack_C_eval, principal_C
from ..algebra.partitions import (
    EMPTY,
    Partition,
    Scalar,
    box,
    complement,
    double,
    exact,
    gen_pochhammer,
    halve,
    hook,
    hook_upper,
    jack_param,
    partitions_in_box,
    rising,
    square,
    unsquare,
)
from ..ensembles.quaternion import check_self_dual, embed_quaternion, quaternion_spectrum
from ..ensembles.sigma import check_positive_definite
from ..errors import EnsembleError, HyperError
from .quadrature import MAX_DIMENSION, duality_integral
from .series import hyp

logger = logging.getLogger(__name__)

FIELD_ALPHA = {"real": Fraction(2), "complex": Fraction(1), "quaternion": Fraction(1, 2)}
GROUP_FIELD = {"O": "real", "U": "complex", "Sp": "quaternion"}


def field_alpha(field: str) -> Fraction:
    """Jack parameter of a field: real 2, complex 1, quaternion 1/2."""
    try:
        return FIELD_ALPHA[field]
    except KeyError:
        raise EnsembleError(f"unknown field {field!r}") from None


def as_quaternion(m: np.ndarray, embedded: bool = True) -> np.ndarray:
    """2N×2N self-dual form of a quaternion matrix.

    Quaternion arguments of every closed form in this module are taken in the
    embedded 2N×2N form, which is checked here. With ``embedded=False`` the
    input is an N×N complex matrix and each entry c is lifted to diag(c, c̄),
    so ``as_quaternion(np.eye(2), embedded=False)`` describes N = 2.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise HyperError(f"dimension mismatch: expected a square matrix, got {m.shape}")
    if not embedded:
        return embed_quaternion(m)
    if m.shape[0] % 2:
        raise EnsembleError(f"embedded quaternion matrix must be 2N×2N, got {m.shape}")
    check_self_dual(m)
    return m


def field_spectrum(field: str, m: np.ndarray) -> np.ndarray:
    """Eigenvalues fed to C_κ: all N of them, or one per pair for quaternion matrices."""
    if field == "quaternion":
        return quaternion_spectrum(as_quaternion(m))
    return np.linalg.eigvals(np.asarray(m))


def gram(field: str, a: np.ndarray) -> np.ndarray:
    """AA^T or AA†, in embedded form for quaternion A."""
    a = as_quaternion(a) if field == "quaternion" else np.asarray(a)
    return a @ np.conj(a.T)


def field_dim(field: str, a: np.ndarray) -> int:
    """Matrix size N; quaternion matrices count quaternions, so 2N×2N gives N."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise HyperError(f"dimension mismatch: expected a square matrix, got {a.shape}")
    if field == "quaternion":
        return as_quaternion(a).shape[0] // 2
    return a.shape[0]


def normalized_C(kappa: Partition, alpha: Fraction, x: np.ndarray) -> float:
    """C_κ(x)/C_κ((1)^N), real part."""
    if kappa == EMPTY:
        return 1.0
    value = jack_C_eval(kappa, alpha, x) / float(principal_C(kappa, alpha, len(x)))
    return float(np.real(value))


def _selected(field: str, mu: Partition) -> Partition | None:
    if field == "real":
        return halve(mu)
    if field == "quaternion":
        return unsquare(mu)
    return mu


def schur_prefactor(field: str, kappa: Partition, n: int) -> Fraction:
    """⟨C_κ(XX†)⟩/C_κ((1)^N) for the unit-variance Ginibre ensemble of the field."""
    if field == "real":
        return 2 ** kappa.weight * gen_pochhammer(Fraction(n, 2), kappa, 2)
    if field == "complex":
        return gen_pochhammer(n, kappa, 1)
    if field == "quaternion":
        return gen_pochhammer(2 * n, kappa, Fraction(1, 2))
    raise EnsembleError(f"unknown field {field!r}")


def schur_average_closed(field: str, mu: Partition, a: np.ndarray, kappa: Partition | None = None) -> float:
    """⟨s_μ(AX)⟩ (real, quaternion) or ⟨s_μ(AX)s_κ(X†A†)⟩ (complex) over unit Ginibre X.

    Only μ = 2κ (real) and μ = κ² (quaternion) survive; the complex average
    vanishes unless μ = κ. The result is the field prefactor times
    C_κ(AA†)/C_κ((1)^N). Quaternion A is taken in its 2N×2N self-dual form.
    """
    n = field_dim(field, a)
    if field == "complex":
        if kappa is None:
            raise HyperError("complex Schur averages need the partner partition kappa")
        if mu != kappa:
            return 0.0
    selected = _selected(field, mu)
    if selected is None or selected.length > n:
        return 0.0
    alpha = field_alpha(field)
    eigs = field_spectrum(field, gram(field, a))
    return float(schur_prefactor(field, selected, n)) * normalized_C(selected, alpha, eigs)


def schur_average_identity(field: str, mu: Partition, n: int) -> Fraction:
    """Exact ⟨s_μ(X)⟩ (⟨|s_μ(X)|²⟩ for complex) at A = I."""
    selected = _selected(field, mu)
    if selected is None or selected.length > n:
        return Fraction(0)
    return schur_prefactor(field, selected, n)


def sk_product(mu: Partition, n: int) -> Fraction:
    """2^{|μ|/2} Π_n Γ((N-n+μ_n+1)/2)/Γ((N-n+1)/2) for even μ, as an exact rational."""
    if any(p % 2 for p in mu.parts) or mu.length > n:
        return Fraction(0)
    result = Fraction(2) ** (mu.weight // 2)
    for row in range(1, n + 1):
        result *= rising(Fraction(n - row + 1, 2), mu[row] // 2)
    return result


def group_integral_closed(group: str, lam: Partition, a: np.ndarray, kappa: Partition | None = None) -> float:
    """Haar averages ⟨s_λ(AO)⟩, ⟨s_λ(AU)s_κ(U†A†)⟩, ⟨s_λ(AS)⟩ over O(N), U(N), Sp(2N).

    Same selection rules as the Ginibre averages, without the prefactor:
    the value is C_κ(AA†)/C_κ((1)^N) for the surviving κ.
    """
    try:
        field = GROUP_FIELD[group]
    except KeyError:
        raise EnsembleError(f"unknown group {group!r}") from None
    n = field_dim(field, a)
    if field == "complex":
        if kappa is None:
            raise HyperError("unitary averages need the partner partition kappa")
        if lam != kappa:
            return 0.0
    selected = _selected(field, lam)
    if selected is None or selected.length > n:
        return 0.0
    eigs = field_spectrum(field, gram(field, a))
    return normalized_C(selected, field_alpha(field), eigs)


def ginibre_trace_average(field: str, kappa: Partition, n: int) -> Fraction:
    """Exact ⟨C_κ(XX†)⟩ over the unit-variance Ginibre ensemble."""
    alpha = field_alpha(field)
    if kappa.length > n:
        return Fraction(0)
    return schur_prefactor(field, kappa, n) * principal_C(kappa, alpha, n)


def splitting_closed(field: str, kappa: Partition, a: np.ndarray, b: np.ndarray) -> float:
    """C_κ(A)C_κ(B)/C_κ((1)^N)² · ⟨C_κ(XX†)⟩."""
    n = field_dim(field, a)
    if kappa.length > n:
        return 0.0
    alpha = field_alpha(field)
    ca = normalized_C(kappa, alpha, field_spectrum(field, a))
    cb = normalized_C(kappa, alpha, field_spectrum(field, b))
    return ca * cb * float(ginibre_trace_average(field, kappa, n))


def _sigma_spectrum(field: str, sigma: np.ndarray) -> np.ndarray:
    sigma = np.asarray(sigma)
    if field == "quaternion":
        q = as_quaternion(sigma)
        check_positive_definite(q)
        return quaternion_spectrum(q)
    check_positive_definite(sigma)
    return np.linalg.eigvalsh(sigma)


def charpoly_params(field: str, r: int) -> tuple[tuple[Fraction, Fraction], Fraction]:
    """₂F₀ parameters and argument scale (applied to |x|²Σ) of the r-th characteristic moment."""
    if r < 0:
        raise HyperError(f"moment order must be nonnegative, got {r}")
    if field == "real":
        return (Fraction(-r, 2), Fraction(-r + 1, 2)), Fraction(2)
    if field == "complex":
        return (Fraction(-r), Fraction(-r)), Fraction(1)
    if field == "quaternion":
        return (Fraction(-r), Fraction(-r - 1)), Fraction(1)
    raise EnsembleError(f"unknown field {field!r}")


def charpoly_moment(field: str, r: int, x: complex, sigma: np.ndarray) -> float:
    """⟨det(I - xX)^r⟩ (real, quaternion) or ⟨|det(I - xX)|^{2r}⟩ (complex)."""
    if field in ("real", "quaternion") and np.imag(x) != 0:
        raise HyperError(f"{field} characteristic moments need real x")
    params, scale = charpoly_params(field, r)
    y = float(scale) * abs(x) ** 2 * _sigma_spectrum(field, sigma)
    value = hyp(params, (), field_alpha(field), y)
    return float(np.real(value))


def charpoly_duality(field: str, r: int, x: complex, sigma: np.ndarray, order: int | None = None) -> float | None:
    """The same moment as an r-dimensional duality integral (weight t^0 e^{-t}).

    Real moments use s = r/2 integration variables and exist only for even r.
    Returns None when the integral dimension falls outside 1..MAX_DIMENSION.
    """
    _, scale = charpoly_params(field, r)
    dim = r // 2 if field == "real" else r
    if (field == "real" and r % 2) or not 1 <= dim <= MAX_DIMENSION:
        return None
    y = float(scale) * abs(x) ** 2 * _sigma_spectrum(field, sigma)
    value = duality_integral(dim, 1.0, field_alpha(field), y, order)
    return float(np.real(value))


def wishart_det_moment(s: int, x: complex, sigma: np.ndarray, field: str) -> float:
    """|x|^{2Ns}⟨(det W)^s⟩ for the non-central Wishart W = (X - I/x)(X - I/x)†."""
    r = 2 * s if field == "real" else s
    return charpoly_moment(field, r, x, sigma)


def muirhead_form(s: int, x: float, sigma: np.ndarray) -> float:
    """⟨(det W)^s⟩ for real W via (det Σ)^s 2^{Ns} Γ_N(N/2+s)/Γ_N(N/2) ₁F₁^(2)(-s; N/2; -Σ⁻¹/2x²)."""
    if x == 0:
        raise HyperError("muirhead form needs x != 0")
    sigma = check_positive_definite(np.asarray(sigma, dtype=float))
    n = sigma.shape[0]
    y = -np.linalg.eigvalsh(np.linalg.inv(sigma)) / (2 * x * x)
    gamma_ratio = math.exp(multigammaln(n / 2 + s, n) - multigammaln(n / 2, n))
    series = hyp((Fraction(-s),), (Fraction(n, 2),), 2, y)
    return float(np.linalg.det(sigma) ** s * 2 ** (n * s) * gamma_ratio * np.real(series))


def identity_id_coefficients(n: int, s: int) -> dict[Partition, tuple[Fraction, Fraction]]:
    """P^(2)_κ(Y) coefficients of both sides of
    ₂F₀^(2)(-s, -s+1/2; Y) = [N/2]_{s^N} (det Y)^s ₁F₁^(2)(-s; N/2; -Y⁻¹), for κ in the s×N box.
    """
    alpha = Fraction(2)
    half_n = Fraction(n, 2)
    lead = gen_pochhammer(half_n, box(s, n), alpha)
    out = {}
    for kappa in partitions_in_box(n, s):
        left = (
            gen_pochhammer(-s, kappa, alpha)
            * gen_pochhammer(Fraction(-2 * s + 1, 2), kappa, alpha)
            * 2 ** kappa.weight
            / hook_upper(kappa, alpha)
        )
        mu = complement(kappa, s, n)
        right = (
            lead
            * gen_pochhammer(-s, mu, alpha)
            * (-2) ** mu.weight
            / (gen_pochhammer(half_n, mu, alpha) * hook_upper(mu, alpha))
        )
        out[kappa] = (left, right)
    return out


def d_prime_ratio_forms(kappa: Partition, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """The three ratios [·]_κ/C_κ((1)^N), checked against their hook-product forms."""
    k = kappa.weight
    lhs = (
        2 ** k * gen_pochhammer(Fraction(n, 2), kappa, 2) / principal_C(kappa, 2, n),
        gen_pochhammer(n, kappa, 1) / principal_C(kappa, 1, n),
        Fraction(1, 2 ** k) * gen_pochhammer(2 * n, kappa, Fraction(1, 2)) / principal_C(kappa, Fraction(1, 2), n),
    )
    rhs = (
        hook_upper(double(kappa), 1) / (math.factorial(k) * 2 ** k),
        hook_upper(kappa, 1) ** 2 / math.factorial(k),
        hook_upper(square(kappa), 1) / (2 ** k * math.factorial(k)),
    )
    for i, (left, right) in enumerate(zip(lhs, rhs), 1):
        if left != right:
            raise HyperError(f"ratio form {i} mismatch at {kappa}, N={n}: {left} != {right}")
    return lhs


def kaneko_closed(a: Scalar, alpha: Scalar, kappa: Partition, n: int) -> Fraction:
    """C_κ((1)^N)·[a + (N-1)/α + 1]_κ, the Laguerre average of C_κ."""
    alpha, a = jack_param(alpha), exact(a)
    if kappa == EMPTY:
        return Fraction(1)
    return principal_C(kappa, alpha, n) * gen_pochhammer(a + Fraction(n - 1) / alpha + 1, kappa, alpha)


def power_sum_closed(field: str, k: int, sigma: np.ndarray) -> float:
    """⟨p_k(X)⟩ (real, quaternion) or ⟨p_k(X)p_k(X†)⟩ (complex) from the hook expansion."""
    if k < 1:
        raise HyperError(f"power sum index must be positive, got {k}")
    alpha = field_alpha(field)
    spec = _sigma_spectrum(field, sigma)
    n = len(spec)
    if field == "complex":
        return _complex_hook_sum(k, spec)
    if k % 2:
        return 0.0
    if field == "real":
        kappa = Partition((k // 2,))
        return float(schur_prefactor("real", kappa, n)) * normalized_C(kappa, alpha, spec)
    if k // 2 > n:
        return 0.0
    kappa = Partition((1,) * (k // 2))
    sign = (-1) ** (k - 1)
    return sign * float(schur_prefactor("quaternion", kappa, n)) * normalized_C(kappa, alpha, spec)


def _complex_hook_sum(k: int, spec: np.ndarray) -> float:
    n = len(spec)
    total = 0.0
    for l in range(k):
        kappa = hook(k, l)
        if kappa.length > n:
            continue
        total += float(schur_prefactor("complex", kappa, n)) * normalized_C(kappa, 1, spec)
    return total


def power_sum_printed(field: str, k: int, sigma: np.ndarray) -> float:
    """The power-sum averages exactly as tabulated in the source corollary."""
    alpha = field_alpha(field)
    spec = _sigma_spectrum(field, sigma)
    n = len(spec)
    if field == "complex":
        return _complex_hook_sum(k, spec)
    if k % 2:
        return 0.0
    half = k // 2
    if field == "real":
        total = 0.0
        for l in range(half):
            kappa = hook(half, l)
            if kappa.length > n:
                continue
            total += float(2**half * gen_pochhammer(Fraction(n, 2), kappa, 2)) * normalized_C(kappa, alpha, spec)
        return total
    if half > n:
        return 0.0
    kappa = Partition((1,) * half)
    return float(schur_prefactor("quaternion", kappa, n)) * normalized_C(kappa, alpha, spec)
