import json

import numpy as np
import pytest

from zonal.ensembles.quaternion import (
    check_self_dual,
    embed_quaternion,
    from_blocks,
    qdet_charpoly,
    qtrace,
    quaternion_spectrum,
)
from zonal.ensembles.rng import block_ranges, block_rng
from zonal.ensembles.samplers import (
    EnsembleSpec,
    laguerre_spectrum,
    sample_ginibre,
    sample_haar,
    sample_wishart,
    wishart_columns,
)
from zonal.ensembles.sigma import check_positive_definite, field_root, load_sigma, sqrt_psd
from zonal.errors import ConfigError, EnsembleError


def test_block_streams_are_reproducible_and_distinct():
    a = block_rng(42, 3).standard_normal(5)
    b = block_rng(42, 3).standard_normal(5)
    c = block_rng(42, 4).standard_normal(5)
    np.testing.assert_array_equal(a, b)
    assert not np.allclose(a, c)


def test_block_ranges():
    assert block_ranges(10_000, 4096) == [(0, 4096), (1, 4096), (2, 1808)]
    assert block_ranges(4096, 4096) == [(0, 4096)]


def test_spec_validation():
    assert EnsembleSpec("quaternion", 3).dim == 6
    with pytest.raises(EnsembleError):
        EnsembleSpec("octonion", 2)
    with pytest.raises(EnsembleError):
        EnsembleSpec("real", 0)


def test_ginibre_shapes_and_variance():
    rng = np.random.default_rng(0)
    x = sample_ginibre(EnsembleSpec("complex", 3), rng, 4000)
    assert x.shape == (4000, 3, 3)
    assert np.mean(np.abs(x) ** 2) == pytest.approx(1.0, abs=0.03)
    q = sample_ginibre(EnsembleSpec("quaternion", 2), rng, 5)
    assert q.shape == (5, 4, 4)
    for m in q:
        check_self_dual(m)


def test_ginibre_with_sigma():
    rng = np.random.default_rng(1)
    sigma = np.diag([4.0, 1.0])
    x = sample_ginibre(EnsembleSpec("real", 2, sigma), rng, 20_000)
    # rows scale with the square root of sigma
    assert np.mean(x[:, 0, :] ** 2) == pytest.approx(4.0, rel=0.05)
    assert np.mean(x[:, 1, :] ** 2) == pytest.approx(1.0, rel=0.05)


@pytest.mark.parametrize("group,n", [("O", 3), ("U", 2), ("Sp", 2)])
def test_haar_samples_are_unitary(group, n):
    u = sample_haar(group, n, np.random.default_rng(2), 10)
    dim = 2 * n if group == "Sp" else n
    eye = np.broadcast_to(np.eye(dim), (10, dim, dim))
    np.testing.assert_allclose(np.conj(np.swapaxes(u, -1, -2)) @ u, eye, atol=1e-10)
    if group == "Sp":
        for m in u:
            check_self_dual(m)


def test_unknown_group():
    with pytest.raises(EnsembleError):
        sample_haar("SO", 2, np.random.default_rng(0))


def test_wishart_columns():
    assert wishart_columns(1, 3, 2) == 5
    assert wishart_columns(2, 2, "-1/2") == 2
    assert wishart_columns("1/2", 2, 1) == 2
    with pytest.raises(EnsembleError, match="no matrix model"):
        wishart_columns(3, 2, 0)
    with pytest.raises(EnsembleError, match="no matrix model"):
        wishart_columns(1, 3, "1/2")


def test_wishart_and_laguerre_spectra():
    rng = np.random.default_rng(3)
    w = sample_wishart("complex", 2, 4, rng, 6)
    assert w.shape == (6, 2, 2)
    np.testing.assert_allclose(w, np.conj(np.swapaxes(w, -1, -2)))
    for alpha in (1, 2, "1/2"):
        spectra = laguerre_spectrum(alpha, 2, 1, rng, 50)
        assert spectra.shape == (50, 2)
        assert np.all(spectra > 0)


def test_quaternion_helpers():
    z = np.array([[1.0, 2.0], [0.5, -1.0]])
    w = np.array([[0.0, 1.0j], [2.0, 0.0]])
    m = from_blocks(z, w)
    check_self_dual(m)
    assert qtrace(m) == pytest.approx(np.trace(z).real)
    assert isinstance(qdet_charpoly(m, 0.3), float)
    np.testing.assert_allclose(np.sort(quaternion_spectrum(embed_quaternion(np.diag([2.0, 1.0])))), [1.0, 2.0])
    with pytest.raises(EnsembleError):
        check_self_dual(np.arange(16.0).reshape(4, 4))


def test_sigma_loading(tmp_path):
    np.testing.assert_array_equal(load_sigma("identity", 3), np.eye(3))
    path = tmp_path / "sigma.json"
    path.write_text(json.dumps({"n": 2, "data": [[2.0, {"re": 0.0, "im": 0.5}], [{"re": 0.0, "im": -0.5}, 1.0]]}))
    sigma = load_sigma(str(path), 2)
    assert sigma[0, 1] == 0.5j
    check_positive_definite(sigma)
    root = sqrt_psd(sigma)
    np.testing.assert_allclose(root @ root, sigma, atol=1e-12)


def test_sigma_errors(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        load_sigma(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "data": [[1.0]]}))
    with pytest.raises(ConfigError):
        load_sigma(str(bad))
    with pytest.raises(ConfigError):
        load_sigma("identity")
    with pytest.raises(EnsembleError, match="not positive definite"):
        check_positive_definite(np.diag([1.0, -1.0]))
    with pytest.raises(EnsembleError):
        field_root("real", np.eye(2) * 1j, 2)


def test_quaternion_root_accepts_either_form():
    a = field_root("quaternion", np.diag([4.0, 1.0]), 2)
    b = field_root("quaternion", embed_quaternion(np.diag([4.0, 1.0])), 2)
    np.testing.assert_allclose(a, b)
    assert field_root("complex", None, 2) is None
