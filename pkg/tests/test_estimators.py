from functools import partial

import numpy as np
import pytest

from zonal.algebra.partitions import Partition
from zonal.ensembles.rng import block_rng
from zonal.verify import estimators as mc
from zonal.verify.schemas import MCEstimate

N_SAMPLES = 20_000
SEED = 11


def P(*parts):
    return Partition(parts)


def normal_samples(rng, size, *, shift):
    return rng.standard_normal(size) + shift


def test_block_stats_merge_matches_single_pass():
    values = block_rng(1, 0).standard_normal(1000)
    merged = mc.BlockStats.of(values[:300]).merge(mc.BlockStats.of(values[300:]))
    full = mc.BlockStats.of(values)
    assert merged.count == full.count
    assert merged.mean == pytest.approx(full.mean)
    assert merged.m2 == pytest.approx(full.m2)


def test_estimate_is_reproducible():
    sampler = partial(normal_samples, shift=2.0)
    a = mc.mc_mean(sampler, 10_000, SEED, jobs=1)
    b = mc.mc_mean(sampler, 10_000, SEED, jobs=1)
    assert a == b
    assert a.mean == pytest.approx(2.0, abs=5 * a.stderr)
    assert a.stderr == pytest.approx(0.01, rel=0.1)


@pytest.mark.slow
def test_estimate_does_not_depend_on_worker_count():
    sampler = partial(normal_samples, shift=-1.0)
    serial = mc.mc_mean(sampler, 10_000, SEED, jobs=1)
    parallel = mc.mc_mean(sampler, 10_000, SEED, jobs=2)
    assert serial == parallel


def test_too_few_samples():
    with pytest.raises(ValueError):
        mc.mc_moments(partial(normal_samples, shift=0.0), 1, SEED)


def test_verdict_thresholds():
    assert mc.verdict_for(2.0) == "pass"
    assert mc.verdict_for(3.5) == "warn"
    assert mc.verdict_for(4.5) == "fail"


def test_z_score_with_zero_stderr():
    exact = MCEstimate(mean=1.0, stderr=0.0, n_samples=10, seed=0)
    assert mc.z_score(exact, 1.0) == 0.0
    assert mc.z_score(exact, 2.0) == float("inf")
    report = mc.compare("q", 2.0, exact)
    assert report.verdict == "fail" and report.failed


def test_schur_average_real():
    report = mc.mc_schur_average("real", np.diag([1.0, 0.5, 1 / 3]), P(2), 3, N_SAMPLES, SEED)
    assert report.id == "schur.real.N3.mu(2)"
    assert report.z <= 4


def test_schur_average_complex_pair():
    report = mc.mc_schur_average("complex", None, P(1), 2, N_SAMPLES, SEED, kappa=P(1))
    assert report.closed == pytest.approx(2.0)
    assert report.z <= 4


def test_schur_average_quaternion():
    report = mc.mc_schur_average("quaternion", None, P(1, 1), 2, N_SAMPLES, SEED)
    assert report.z <= 4


def test_group_integrals():
    zero = mc.mc_group_integral("O", None, P(1), 3, N_SAMPLES, SEED)
    assert zero.closed == 0.0
    assert zero.z <= 4
    unitary = mc.mc_group_integral("U", None, P(1), 2, N_SAMPLES, SEED)
    assert unitary.closed == pytest.approx(1.0)
    assert unitary.z <= 4


def test_splitting():
    a = np.diag([1.0, 0.5])
    b = np.array([[2.0, 0.3], [0.3, 1.0]])
    report = mc.mc_splitting(a, b, P(1), "complex", N_SAMPLES, SEED)
    assert report.z <= 4


def test_quaternion_characteristic_moment_oracle():
    report = mc.mc_charpoly_moment("quaternion", 1, 0.5, np.eye(2), N_SAMPLES, SEED)
    assert report.closed == pytest.approx(1.5)
    assert report.note.startswith("duality=")
    assert report.z <= 4


def test_complex_characteristic_moment():
    report = mc.mc_charpoly_moment("complex", 2, 0.4, np.diag([1.0, 0.5]), N_SAMPLES, SEED)
    assert report.z <= 4


def test_power_sum_reports_both_forms():
    derived, printed = mc.mc_power_sum("real", 4, np.eye(2), N_SAMPLES, SEED)
    assert derived.closed == pytest.approx(8.0)
    assert printed.closed == pytest.approx(10.0)
    assert derived.estimate == printed.estimate
    assert printed.id == derived.id + ".printed"
    assert derived.z <= 4


def test_kaneko():
    report = mc.mc_kaneko(1, 0, P(1), 3, N_SAMPLES, SEED)
    assert report.closed == pytest.approx(9.0)
    assert report.z <= 4


def test_density_rows_count_every_eigenvalue():
    rows = mc.mc_density(3, 1.0, 4000, SEED, grid=8)
    assert len(rows) == 8
    assert sum(row.empirical * row.area for row in rows) == pytest.approx(4.0, abs=0.01)
    assert set(rows[0].to_json()) == {"re", "im", "empirical", "stderr", "density", "expected_count"}


def test_density_reports_are_informational_away_from_sigma_one():
    rows = mc.mc_density(3, 3.0, 4000, SEED, grid=8)
    reports = mc.density_reports(rows, 3, 3.0, SEED, 4000)
    assert reports
    assert {r.verdict for r in reports} == {"info"}
