"""Seeded, block-parallel Monte-Carlo estimators paired with their closed forms.

Each estimator is a module-level sampling function ``f(rng, size, **params)``
returning one value (or one vector) per sample. ``mc_mean`` splits the run
into fixed-size blocks, evaluates every block with its own counter-based
stream and merges block statistics in block order, so a (seed, n) pair gives
the same estimate whatever the number of workers.
"""

from __future__ import annotations

import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Callable

import numpy as np
from tqdm import tqdm

from ..algebra.jack import jack_C_batch
from ..algebra.partitions import EMPTY, Partition, Scalar, exact
from ..algebra.symfunc import eval_batch, schur_poly
from ..config import settings
from ..ensembles.quaternion import quaternion_spectrum
from ..ensembles.rng import block_ranges, block_rng
from ..ensembles.samplers import EnsembleSpec, laguerre_spectrum, sample_ginibre, sample_haar
from ..hyper import closed_forms as cf
from ..hyper.density import rank1_values
from .schemas import ComparisonReport, MCEstimate

logger = logging.getLogger(__name__)

Sampler = Callable[[np.random.Generator, int], np.ndarray]


@dataclass
class BlockStats:
    count: int
    mean: np.ndarray
    m2: np.ndarray

    @classmethod
    def of(cls, values: np.ndarray) -> "BlockStats":
        mean = values.mean(axis=0)
        return cls(values.shape[0], mean, (np.abs(values - mean) ** 2).sum(axis=0))

    def merge(self, other: "BlockStats") -> "BlockStats":
        total = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * (other.count / total)
        m2 = self.m2 + other.m2 + np.abs(delta) ** 2 * (self.count * other.count / total)
        return BlockStats(total, mean, m2)


def _run_block(sampler: Sampler, seed: int, block: int, size: int) -> BlockStats:
    values = np.asarray(sampler(block_rng(seed, block), size))
    return BlockStats.of(values)


def mc_moments(
    sampler: Sampler,
    n_samples: int,
    seed: int,
    jobs: int | None = None,
    block_size: int | None = None,
    label: str = "",
) -> BlockStats:
    """Merged mean/M2 over all blocks (vector-valued samplers give vector stats)."""
    if n_samples < 2:
        raise ValueError(f"need at least 2 samples, got {n_samples}")
    jobs = jobs or settings.JOBS
    ranges = block_ranges(n_samples, block_size)
    show = sys.stderr.isatty() and len(ranges) > 1
    if jobs > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = pool.map(_run_block, *zip(*[(sampler, seed, b, s) for b, s in ranges]))
            parts = list(tqdm(futures, total=len(ranges), desc=label, leave=False, disable=not show))
    else:
        parts = [_run_block(sampler, seed, b, s) for b, s in tqdm(ranges, desc=label, leave=False, disable=not show)]
    stats = parts[0]
    for part in parts[1:]:
        stats = stats.merge(part)
    logger.debug(f"    {label}: {len(ranges)} blocks, {stats.count} samples")
    return stats


def mc_mean(sampler: Sampler, n_samples: int, seed: int, jobs: int | None = None, label: str = "") -> MCEstimate:
    stats = mc_moments(sampler, n_samples, seed, jobs, label=label)
    mean = complex(stats.mean)
    var = float(stats.m2) / (stats.count - 1)
    return MCEstimate(
        mean=mean.real,
        mean_imag=mean.imag,
        stderr=math.sqrt(max(var, 0.0) / stats.count),
        n_samples=stats.count,
        seed=seed,
    )


def z_score(estimate: MCEstimate, closed: float) -> float:
    gap = abs(estimate.value - closed)
    if estimate.stderr == 0:
        return 0.0 if gap <= 1e-12 * max(1.0, abs(closed)) else math.inf
    return gap / estimate.stderr


def verdict_for(z: float) -> str:
    if z > settings.Z_FAIL:
        return "fail"
    if z > settings.Z_WARN:
        return "warn"
    return "pass"


def compare(quantity: str, closed: float, estimate: MCEstimate, note: str = "") -> ComparisonReport:
    z = z_score(estimate, closed)
    return ComparisonReport(id=quantity, closed=closed, estimate=estimate, z=z, verdict=verdict_for(z), note=note)


def _field_matrix(field: str, a: np.ndarray | None, n: int) -> np.ndarray:
    if a is None:
        return np.eye(2 * n if field == "quaternion" else n)
    return cf.as_quaternion(a) if field == "quaternion" else np.asarray(a)


def _field_sigma(field: str, sigma: np.ndarray) -> np.ndarray:
    """Σ as sampled: quaternion Σ always in its 2N×2N self-dual form."""
    sigma = np.asarray(sigma)
    if field == "quaternion":
        return cf.as_quaternion(sigma)
    return sigma


def _part(p: Partition | None) -> str:
    return str(p) if p is not None else ""


# --- samplers -------------------------------------------------------------


def schur_samples(rng, size, *, field, n, a, mu, kappa=None):
    x = sample_ginibre(EnsembleSpec(field, n), rng, size)
    eigs = np.linalg.eigvals(a @ x)
    dim = eigs.shape[-1]
    values = eval_batch(schur_poly(mu, dim), eigs)
    if kappa is not None:
        values = values * np.conj(eval_batch(schur_poly(kappa, dim), eigs))
    return values


def haar_samples(rng, size, *, group, n, a, lam, kappa=None):
    u = sample_haar(group, n, rng, size)
    eigs = np.linalg.eigvals(a @ u)
    dim = eigs.shape[-1]
    values = eval_batch(schur_poly(lam, dim), eigs)
    if kappa is not None:
        values = values * np.conj(eval_batch(schur_poly(kappa, dim), eigs))
    return values


def _psd_root(m: np.ndarray) -> np.ndarray | None:
    """Hermitian square root when m is Hermitian positive semidefinite, else None."""
    if not np.allclose(m, np.conj(m.T), atol=1e-12):
        return None
    vals, vecs = np.linalg.eigh(m)
    if vals.min() < -1e-12:
        return None
    return (vecs * np.sqrt(np.clip(vals, 0, None))) @ np.conj(vecs.T)


def splitting_samples(rng, size, *, field, n, a, b, kappa):
    x = sample_ginibre(EnsembleSpec(field, n), rng, size)
    xh = np.conj(np.swapaxes(x, -1, -2))
    root_a, root_b = _psd_root(a), _psd_root(b)
    alpha = cf.field_alpha(field)
    if root_a is not None and root_b is not None:
        # A X B X† is similar to the Hermitian (√A X √B)(√A X √B)†
        y = root_a @ x @ root_b
        eigs = np.linalg.eigvalsh(y @ np.conj(np.swapaxes(y, -1, -2)))
        if field == "quaternion":
            eigs = eigs[..., 0::2]
    elif field == "quaternion":
        eigs = np.array([quaternion_spectrum(m) for m in a @ x @ b @ xh])
    else:
        eigs = np.linalg.eigvals(a @ x @ b @ xh)
    return jack_C_batch(kappa, alpha, eigs)


def charpoly_samples(rng, size, *, field, n, r, x, sigma):
    spec = EnsembleSpec(field, n, sigma)
    m = sample_ginibre(spec, rng, size)
    det = np.linalg.det(np.eye(spec.dim) - x * m)
    if field == "complex":
        return np.abs(det) ** (2 * r)
    return np.real(det) ** r


def power_sum_samples(rng, size, *, field, n, k, sigma):
    m = sample_ginibre(EnsembleSpec(field, n, sigma), rng, size)
    trace = np.trace(np.linalg.matrix_power(m, k), axis1=-2, axis2=-1)
    if field == "complex":
        return np.abs(trace) ** 2
    return np.real(trace)


def kaneko_samples(rng, size, *, alpha, n, a, kappa):
    spectra = laguerre_spectrum(alpha, n, a, rng, size)
    if kappa == EMPTY:
        return np.ones(size)
    return jack_C_batch(kappa, alpha, spectra)


def density_samples(rng, size, *, n, sigma, edges):
    """Per-matrix eigenvalue counts in each annulus of the radial grid."""
    dim = n + 1
    cov = np.ones(dim)
    cov[0] = sigma
    m = sample_ginibre(EnsembleSpec("complex", dim, np.diag(cov)), rng, size)
    radii = np.abs(np.linalg.eigvals(m))
    idx = np.searchsorted(edges, radii, side="right") - 1
    counts = np.zeros((size, len(edges) - 1))
    inside = (idx >= 0) & (idx < len(edges) - 1)
    rows = np.broadcast_to(np.arange(size)[:, None], idx.shape)
    np.add.at(counts, (rows[inside], idx[inside]), 1.0)
    return counts


# --- estimators -----------------------------------------------------------


def mc_schur_average(
    field: str,
    a: np.ndarray | None,
    mu: Partition,
    n: int,
    n_samples: int,
    seed: int,
    kappa: Partition | None = None,
    jobs: int | None = None,
) -> ComparisonReport:
    a = _field_matrix(field, a, n)
    if field == "complex" and kappa is None:
        kappa = mu
    closed = cf.schur_average_closed(field, mu, a, kappa)
    sampler = partial(schur_samples, field=field, n=n, a=a, mu=mu, kappa=kappa if field == "complex" else None)
    quantity = f"schur.{field}.N{n}.mu{mu}{_part(kappa) if field == 'complex' else ''}"
    return compare(quantity, closed, mc_mean(sampler, n_samples, seed, jobs, quantity))


def mc_group_integral(
    group: str,
    a: np.ndarray | None,
    lam: Partition,
    n: int,
    n_samples: int,
    seed: int,
    kappa: Partition | None = None,
    jobs: int | None = None,
) -> ComparisonReport:
    field = cf.GROUP_FIELD[group]
    a = _field_matrix(field, a, n)
    if group == "U" and kappa is None:
        kappa = lam
    closed = cf.group_integral_closed(group, lam, a, kappa)
    sampler = partial(haar_samples, group=group, n=n, a=a, lam=lam, kappa=kappa if group == "U" else None)
    quantity = f"group.{group}.N{n}.lambda{lam}{_part(kappa) if group == 'U' else ''}"
    return compare(quantity, closed, mc_mean(sampler, n_samples, seed, jobs, quantity))


def mc_splitting(
    a: np.ndarray,
    b: np.ndarray,
    kappa: Partition,
    field: str,
    n_samples: int,
    seed: int,
    jobs: int | None = None,
) -> ComparisonReport:
    n = cf.field_dim(field, a)
    a, b = _field_matrix(field, a, n), _field_matrix(field, b, n)
    closed = cf.splitting_closed(field, kappa, a, b)
    sampler = partial(splitting_samples, field=field, n=n, a=a, b=b, kappa=kappa)
    quantity = f"splitting.{field}.N{n}.kappa{kappa}"
    return compare(quantity, closed, mc_mean(sampler, n_samples, seed, jobs, quantity))


def mc_charpoly_moment(
    field: str,
    r: int,
    x: complex,
    sigma: np.ndarray,
    n_samples: int,
    seed: int,
    jobs: int | None = None,
) -> ComparisonReport:
    sigma = _field_sigma(field, sigma)
    n = cf.field_dim(field, sigma)
    closed = cf.charpoly_moment(field, r, x, sigma)
    note = ""
    dual = cf.charpoly_duality(field, r, x, sigma)
    if dual is not None:
        note = f"duality={dual:.12g}"
    sampler = partial(charpoly_samples, field=field, n=n, r=r, x=x, sigma=sigma)
    quantity = f"charpoly.{field}.N{n}.r{r}.x{x}"
    return compare(quantity, closed, mc_mean(sampler, n_samples, seed, jobs, quantity), note)


def mc_power_sum(
    field: str,
    k: int,
    sigma: np.ndarray,
    n_samples: int,
    seed: int,
    jobs: int | None = None,
) -> tuple[ComparisonReport, ComparisonReport]:
    """Estimate once; report against the derived and the printed closed forms."""
    sigma = _field_sigma(field, sigma)
    n = cf.field_dim(field, sigma)
    sampler = partial(power_sum_samples, field=field, n=n, k=k, sigma=sigma)
    quantity = f"powersum.{field}.N{n}.k{k}"
    estimate = mc_mean(sampler, n_samples, seed, jobs, quantity)
    derived = compare(quantity, cf.power_sum_closed(field, k, sigma), estimate)
    printed = compare(quantity + ".printed", cf.power_sum_printed(field, k, sigma), estimate)
    return derived, printed


def mc_kaneko(
    alpha: Scalar,
    a: Scalar,
    kappa: Partition,
    n: int,
    n_samples: int,
    seed: int,
    jobs: int | None = None,
) -> ComparisonReport:
    alpha, a = exact(alpha), exact(a)
    closed = float(cf.kaneko_closed(a, alpha, kappa, n))
    sampler = partial(kaneko_samples, alpha=alpha, n=n, a=a, kappa=kappa)
    quantity = f"kaneko.alpha{alpha}.a{a}.N{n}.kappa{kappa}"
    return compare(quantity, closed, mc_mean(sampler, n_samples, seed, jobs, quantity))


@dataclass
class DensityRow:
    z: complex
    empirical: float
    stderr: float
    closed: float
    expected_count: float
    area: float

    def to_json(self) -> dict:
        return {
            "re": self.z.real,
            "im": self.z.imag,
            "empirical": self.empirical,
            "stderr": self.stderr,
            "density": self.closed,
            "expected_count": self.expected_count,
        }


def radial_edges(n: int, sigma: float, grid: int) -> np.ndarray:
    r_max = math.sqrt((n + 1) * max(sigma, 1.0)) + 3.0
    return np.linspace(0.0, r_max, grid + 1)


def annulus_average(lo: float, hi: float, n: int, sigma: float) -> float:
    """Mean of the rank-one density over an annulus (uniform in |z|²)."""
    nodes, weights = np.polynomial.legendre.leggauss(16)
    x = 0.5 * (hi**2 - lo**2) * nodes + 0.5 * (hi**2 + lo**2)
    return float(np.dot(weights, rank1_values(x, n, sigma)) / 2)


def mc_density(n: int, sigma: float, n_samples: int, seed: int, grid: int, jobs: int | None = None) -> list[DensityRow]:
    edges = radial_edges(n, sigma, grid)
    sampler = partial(density_samples, n=n, sigma=sigma, edges=edges)
    stats = mc_moments(sampler, n_samples, seed, jobs, label=f"density.N{n}.sigma{sigma}")
    var = stats.m2 / (stats.count - 1)
    rows = []
    for i in range(grid):
        lo, hi = edges[i], edges[i + 1]
        area = math.pi * (hi**2 - lo**2)
        closed = annulus_average(lo, hi, n, sigma)
        rows.append(
            DensityRow(
                z=complex(0.5 * (lo + hi), 0.0),
                empirical=float(stats.mean[i]) / area,
                stderr=math.sqrt(float(var[i]) / stats.count) / area,
                closed=closed,
                expected_count=closed * area * stats.count,
                area=area,
            )
        )
    return rows


def density_reports(rows: list[DensityRow], n: int, sigma: float, seed: int, n_samples: int, min_count: float = 100.0) -> list[ComparisonReport]:
    """One report per well-populated bin; rows are informational unless σ = 1."""
    reports = []
    for row in rows:
        if row.expected_count < min_count:
            continue
        est = MCEstimate(mean=row.empirical, stderr=row.stderr, n_samples=n_samples, seed=seed)
        report = compare(f"density.N{n}.sigma{sigma}.r{row.z.real:.4f}", row.closed, est)
        if sigma != 1:
            report = report.model_copy(update={"verdict": "info"})
        reports.append(report)
    return reports
