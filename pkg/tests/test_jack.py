from fractions import Fraction

import numpy as np
import pytest

from zonal.algebra.cache import JackCache, jack_cache
from zonal.algebra.jack import (
    coefficient_of_p1_power,
    dual_cauchy_sides,
    eigenvalue,
    jack_C_batch,
    jack_C_eval,
    jack_C_exact,
    jack_C_poly,
    jack_poly,
    matrix_C,
    operator_matrix,
    principal,
    principal_C,
)
from zonal.algebra.partitions import EMPTY, Partition, hook_lower, partitions_of
from zonal.algebra.symfunc import SymPoly, eval_exact, power_sum, schur_poly
from zonal.errors import SymPolyError

ALPHAS = [Fraction(1, 2), Fraction(1), Fraction(2)]


def P(*parts):
    return Partition(parts)


def test_two_box_jack_polynomial():
    poly = jack_poly(P(2), 2, 2)
    assert poly.coefficient(P(2)) == 1
    assert poly.coefficient(P(1, 1)) == Fraction(2, 3)
    # general alpha: m_2 + 2/(1+alpha) m_11
    assert jack_poly(P(2), Fraction(1, 2), 2).coefficient(P(1, 1)) == Fraction(4, 3)


def test_alpha_one_gives_schur_polynomials():
    for n in range(1, 4):
        for weight in range(1, 5):
            for kappa in partitions_of(weight, n):
                assert jack_poly(kappa, 1, n) == schur_poly(kappa, n)


def test_too_many_parts_rejected():
    with pytest.raises(SymPolyError):
        jack_poly(P(1, 1, 1), 1, 2)
    assert jack_C_poly(P(1, 1, 1), 1, 2).is_zero()


@pytest.mark.parametrize("alpha", ALPHAS)
def test_C_normalization_sums_to_p1_power(alpha):
    for n in (2, 3):
        for k in range(1, 5):
            total = SymPoly.zero(n)
            for kappa in partitions_of(k, n):
                total = total + jack_C_poly(kappa, alpha, n)
            assert total == power_sum(1, n) ** k


@pytest.mark.parametrize("alpha", ALPHAS)
def test_diagonal_matches_closed_eigenvalue(alpha):
    for n in (2, 3):
        matrix = operator_matrix(4, alpha, n)
        for kappa in partitions_of(4, n):
            assert matrix[kappa][kappa] == eigenvalue(kappa, alpha, n)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_principal_specialization(alpha):
    for kappa in partitions_of(3, 3):
        assert eval_exact(jack_poly(kappa, alpha, 3), [1, 1, 1]) == principal(kappa, alpha, 3)
        assert jack_C_exact(kappa, alpha, [1, 1, 1]) == principal_C(kappa, alpha, 3)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_p1_coefficient_is_inverse_hook(alpha):
    for kappa in partitions_of(4):
        assert coefficient_of_p1_power(kappa, alpha) == 1 / hook_lower(kappa, alpha)


@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(2)])
def test_dual_cauchy(alpha):
    lhs, rhs = dual_cauchy_sides([Fraction(1, 3), 2], [Fraction(-1, 2), 3, 1], alpha)
    assert lhs == rhs


def test_numeric_evaluation_paths_agree():
    kappa, alpha = P(2, 1), Fraction(1, 2)
    x = np.array([0.3, -1.2, 2.0])
    value = jack_C_eval(kappa, alpha, x)
    batch = jack_C_batch(kappa, alpha, np.stack([x, 2 * x]))
    assert batch[0] == pytest.approx(value)
    # homogeneous of degree |kappa|
    assert batch[1] == pytest.approx(8 * value)
    assert jack_C_eval(EMPTY, alpha, x) == 1.0
    assert matrix_C(P(1), 2, np.diag(x)) == pytest.approx(x.sum())


def test_cache_files_round_trip(cache_dir):
    poly = jack_poly(P(2, 1), Fraction(2), 3)
    files = list(cache_dir.glob("*.json"))
    assert [f.name for f in files] == ["P_2-1_a2-1_n3.json"]
    fresh = JackCache(cache_dir)
    assert fresh.get((P(2, 1), Fraction(2), 3)) == poly
    assert len(jack_cache) >= 1


def test_cache_ignores_stale_versions(cache_dir):
    jack_poly(P(2), Fraction(1, 2), 2)
    path = next(cache_dir.glob("*.json"))
    path.write_text('{"version": 0, "nvars": 2, "terms": []}')
    assert JackCache(cache_dir).get((P(2), Fraction(1, 2), 2)) is None


def test_cache_ignores_malformed_entries(cache_dir):
    jack_poly(P(1, 1), Fraction(2), 2)
    path = next(cache_dir.glob("*.json"))
    path.write_text('{"version": 1, "nvars": 2, "terms": [{"partition": [0, -1], "coeff": "1"}]}')
    assert JackCache(cache_dir).get((P(1, 1), Fraction(2), 2)) is None
    path.write_text("[1, 2, 3]")
    assert JackCache(cache_dir).get((P(1, 1), Fraction(2), 2)) is None
