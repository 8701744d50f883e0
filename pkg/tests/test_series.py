import math
from fractions import Fraction

import numpy as np
import pytest

from zonal.algebra.partitions import Partition, partitions_of
from zonal.errors import HyperError
from zonal.hyper.series import HyperSpec, hyp, pFq, series_coefficient


def test_termination_order():
    assert HyperSpec((-2, Fraction(1, 2)), (), 1, 2).termination_order() == 2
    assert HyperSpec((Fraction(-1, 2),), (), 1, 2).termination_order() is None
    assert HyperSpec((-3, -1), (), 2, 1).label == "2F0^(2)"


def test_terminating_series_is_exact():
    # 1F0(-2; x) = (1 - x)^2 in one variable
    result = pFq(HyperSpec((-2,), (), 1, 1), [Fraction(1, 3)])
    assert result.terminated
    assert result.value == Fraction(4, 9)
    assert result.tail_estimate == 0.0


@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(1), Fraction(2)])
def test_determinant_product_law(alpha):
    x = np.array([0.2, -0.1])
    value = hyp((Fraction(3, 2),), (), alpha, x, max_weight=30)
    assert value == pytest.approx(float(np.prod((1 - x) ** -1.5)), rel=1e-8)


def test_exponential_in_one_variable():
    assert hyp((), (), 1, [0.5], max_weight=25) == pytest.approx(math.exp(0.5), rel=1e-12)


def test_coefficients_vanish_outside_the_termination_box():
    spec = HyperSpec((-1, Fraction(-3, 2)), (), 2, 2)
    inside = {kappa for _, shell in spec.shells() for kappa in shell}
    for kappa in partitions_of(4, 2):
        if kappa not in inside:
            assert series_coefficient(spec.a_params, spec.b_params, spec.alpha, kappa) == 0


def test_b_parameter_pole():
    with pytest.raises(HyperError, match="b-parameter pole"):
        series_coefficient((Fraction(1),), (Fraction(0),), Fraction(1), Partition((1,)))


def test_bad_arguments():
    with pytest.raises(HyperError, match="length mismatch"):
        pFq(HyperSpec((1,), (), 1, 2), [0.1])
    with pytest.raises(HyperError):
        HyperSpec((), (), 1, 0)
