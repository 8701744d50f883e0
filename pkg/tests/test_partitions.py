from fractions import Fraction

import pytest

from zonal.algebra.partitions import (
    EMPTY,
    Partition,
    arm,
    box,
    complement,
    conjugate,
    dominance_le,
    double,
    gen_pochhammer,
    halve,
    hook,
    hook_lower,
    hook_upper,
    hook_upper_from_fbar,
    is_hook,
    leg,
    partitions_in_box,
    partitions_of,
    rising,
    square,
    unsquare,
)
from zonal.errors import PartitionError

ALPHAS = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3, 7)]


def P(*parts):
    return Partition(parts)


def test_trailing_zeros_are_stripped():
    assert Partition((2, 1, 0, 0)) == P(2, 1)
    assert P(2, 1).length == 2
    assert P(3, 1)[1] == 3 and P(3, 1)[5] == 0


def test_invalid_partitions_raise():
    with pytest.raises(PartitionError):
        P(1, 3)
    with pytest.raises(PartitionError):
        P(2, -1)
    with pytest.raises(PartitionError):
        Partition.parse("3,x")


def test_parse_and_str():
    assert Partition.parse("3,1") == P(3, 1)
    assert Partition.parse("") == EMPTY
    assert str(P(3, 1)) == "(3,1)"


def test_enumeration_counts():
    assert len(partitions_of(4)) == 5
    assert partitions_of(4, 2) == (P(4), P(3, 1), P(2, 2))
    assert partitions_of(5, max_part=2) == (P(2, 2, 1), P(2, 1, 1, 1), P(1, 1, 1, 1, 1))
    assert partitions_of(0) == (EMPTY,)
    # C(4, 2) partitions fit in a 2x2 box
    assert len(list(partitions_in_box(2, 2))) == 6


def test_shapes():
    assert box(3, 2) == P(3, 3)
    assert box(0, 4) == EMPTY
    assert hook(4, 2) == P(2, 1, 1)
    assert is_hook(P(3, 1, 1)) and not is_hook(P(2, 2))


def test_conjugate_and_stretches():
    assert conjugate(P(3, 1)) == P(2, 1, 1)
    for kappa in partitions_of(7):
        assert conjugate(conjugate(kappa)) == kappa
    assert double(P(2, 1)) == P(4, 2)
    assert square(P(2, 1)) == P(2, 2, 1, 1)
    assert halve(P(4, 2)) == P(2, 1)
    assert halve(P(3, 2)) is None
    assert unsquare(P(2, 2, 1, 1)) == P(2, 1)
    assert unsquare(P(2, 1)) is None


def test_dominance():
    assert dominance_le(P(2, 2), P(3, 1))
    assert not dominance_le(P(3, 1), P(2, 2))
    assert dominance_le(P(1, 1, 1, 1), P(4))
    with pytest.raises(PartitionError, match="incomparable weights"):
        dominance_le(P(2), P(2, 1))


def test_arm_and_leg():
    kappa = P(3, 1)
    assert arm(kappa, 1, 1) == 2
    assert leg(kappa, 1, 1) == 1
    assert arm(kappa, 2, 1) == 0
    with pytest.raises(PartitionError):
        arm(kappa, 2, 2)


def test_hook_products_small_cases():
    alpha = Fraction(5, 3)
    assert hook_upper(P(1), alpha) == alpha
    assert hook_lower(P(1), alpha) == 1
    assert hook_upper(P(2), alpha) == 2 * alpha**2
    assert hook_lower(P(2), alpha) == alpha + 1
    # at alpha = 1 both reduce to the classical hook length product
    assert hook_upper(P(3, 1), 1) == hook_lower(P(3, 1), 1) == 8


def test_hook_products_swap_under_conjugation():
    for kappa in partitions_of(5):
        for alpha in ALPHAS:
            assert hook_upper(conjugate(kappa), 1 / alpha) * alpha ** kappa.weight == hook_lower(kappa, alpha)


@pytest.mark.parametrize("alpha", [Fraction(1), Fraction(1, 2), Fraction(1, 3)])
def test_fbar_form_of_hook_upper(alpha):
    for n in range(1, 4):
        for kappa in partitions_of(4, n):
            assert hook_upper_from_fbar(kappa, alpha, n) == hook_upper(kappa, alpha)


def test_fbar_form_needs_integral_inverse():
    with pytest.raises(PartitionError):
        hook_upper_from_fbar(P(1), 2, 2)


def test_pochhammer():
    u, alpha = Fraction(7, 3), Fraction(2)
    assert rising(u, 0) == 1
    assert rising(3, 3) == 60
    assert gen_pochhammer(u, P(2), alpha) == u * (u + 1)
    assert gen_pochhammer(u, P(1, 1), alpha) == u * (u - Fraction(1, 2))
    assert gen_pochhammer(u, EMPTY, alpha) == 1
    # [N]_κ vanishes once κ has more than N parts at alpha = 1
    assert gen_pochhammer(2, P(1, 1, 1), 1) == 0


def test_complement():
    assert complement(P(2, 1), 3, 3) == P(3, 2, 1)
    assert complement(EMPTY, 2, 2) == P(2, 2)
    assert complement(P(2, 2), 2, 2) == EMPTY
    with pytest.raises(PartitionError, match="complement undefined"):
        complement(P(4), 3, 2)
    with pytest.raises(PartitionError):
        complement(P(1, 1, 1), 3, 2)
