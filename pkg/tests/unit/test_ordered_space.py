"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

import random
from fractions import Fraction

import pytest

from vequil.ordered_space import (
    rational,
    vec,
    zero,
    orthant,
    icecream2,
    ConeSpec,
    BoxDomain,
    interval,
    cone_contains,
    cone_interior_contains,
    not_in_neg_interior,
    leq_cone,
    lt_interior,
    cone_validate,
    ensure_valid,
    extreme_rays,
)
from vequil.exceptions import DimensionMismatchError, ConeValidationError, DomainError


def random_vector(rng, dim, bound=4, denominator=3):
    return vec([Fraction(rng.randint(-bound * denominator, bound * denominator), denominator) for _ in range(dim)])


@pytest.mark.parametrize(
    "value, expected",
    [
        pytest.param("-3/2", Fraction(-3, 2), id="negative fraction string"),
        pytest.param(" 4 ", Fraction(4), id="integer string with blanks"),
        pytest.param(7, Fraction(7), id="int"),
        pytest.param(Fraction(2, 4), Fraction(1, 2), id="fraction is normalized"),
    ],
)
def test_rational_conversion(value, expected):
    """
    Test converting values into exact rationals
    """
    assert rational(value) == expected


@pytest.mark.parametrize("value", [0.5, True], ids=["float", "bool"])
def test_rational_rejects_inexact_values(value):
    """
    Test that floats and booleans are not accepted as rationals
    """
    with pytest.raises(TypeError):
        rational(value)


def test_vector_arithmetic():
    """
    Test exact vector arithmetic
    """
    # given
    a = vec("1/2", 1)
    b = vec(-1, "1/3")

    # then
    assert a + b == vec("-1/2", "4/3")
    assert a - b == vec("3/2", "2/3")
    assert 2 * a == vec(1, 2)
    assert -a == vec("-1/2", -1)
    assert a.dot(b) == Fraction(-1, 2) + Fraction(1, 3)
    assert str(a) == "(1/2, 1)"
    assert zero(3).is_zero()


def test_vector_dimension_mismatch():
    """
    Test that vectors of different dimensions cannot be added
    """
    with pytest.raises(DimensionMismatchError):
        vec(1, 2) + vec(1, 2, 3)


@pytest.mark.parametrize(
    "cone, z, contains, interior, not_neg_interior",
    [
        pytest.param(icecream2(), vec("-3/2", "3/2"), True, False, True, id="ice cream boundary point"),
        pytest.param(icecream2(), vec(0, 1), True, True, True, id="ice cream interior point"),
        pytest.param(icecream2(), vec(0, -1), False, False, False, id="ice cream negative interior"),
        pytest.param(orthant(2), vec("-1/3", "-1/3"), False, False, False, id="orthant negative interior"),
        pytest.param(orthant(2), vec(0, "2/3"), True, False, True, id="orthant boundary point"),
        pytest.param(orthant(2), vec(-1, "-1/2"), False, False, False, id="orthant strictly negative"),
        pytest.param(orthant(2), vec(-1, 0), False, False, True, id="orthant not comparable to zero"),
    ],
)
def test_cone_membership(cone, z, contains, interior, not_neg_interior):
    """
    Test the cone membership predicates
    """
    assert cone_contains(cone, z) is contains
    assert cone_interior_contains(cone, z) is interior
    assert not_in_neg_interior(cone, z) is not_neg_interior


def test_cone_order_predicates():
    """
    Test the order relations induced by a cone
    """
    # given
    C = orthant(2)

    # then
    assert leq_cone(C, vec(0, 0), vec(1, 0))
    assert not lt_interior(C, vec(0, 0), vec(1, 0))
    assert lt_interior(C, vec(0, 0), vec(1, 1))
    assert not leq_cone(C, vec(1, 0), vec(0, 1))
    assert not leq_cone(C, vec(0, 1), vec(1, 0))


def test_cone_membership_dimension_mismatch():
    """
    Test that the cone predicates check the dimension
    """
    with pytest.raises(DimensionMismatchError):
        cone_contains(orthant(2), vec(1, 2, 3))


@pytest.mark.parametrize(
    "cone, expected_rays",
    [
        pytest.param(orthant(2), (vec(0, 1), vec(1, 0)), id="orthant"),
        pytest.param(icecream2(), (vec(-1, 1), vec(1, 1)), id="ice cream"),
    ],
)
def test_extreme_rays(cone, expected_rays):
    """
    Test computing the normalized extreme rays of a cone
    """
    assert extreme_rays(cone) == expected_rays


def test_validate_builtin_cones():
    """
    Test that the built-in cones are valid
    """
    # when
    report = cone_validate(icecream2())

    # then
    assert report.valid
    assert report.rank == 2
    assert cone_interior_contains(icecream2(), report.witness)
    assert report.reason is None


def test_validate_cone_with_deficient_rank():
    """
    Test that a cone with a lineality space is rejected
    """
    # given
    C = ConeSpec((vec(1, 0),))

    # when
    report = cone_validate(C)

    # then
    assert not report.valid
    assert report.rank == 1
    assert report.reason == "not pointed under representation contract (rank 1 < 2)"
    with pytest.raises(ConeValidationError):
        ensure_valid(C)


def test_validate_cone_with_empty_interior():
    """
    Test that a cone without interior points is rejected
    """
    # given
    C = ConeSpec((vec(1, 0), vec(-1, 0), vec(0, 1)))

    # when
    report = cone_validate(C)

    # then
    assert not report.valid
    assert report.rank == 2
    assert report.reason == "empty interior"


def test_validate_cone_without_stored_witness():
    """
    Test that the witness is derived from the extreme rays
    """
    # given
    C = ConeSpec((vec(1, 1), vec(-1, 1)))

    # when
    report = cone_validate(C)

    # then
    assert report.valid
    assert report.witness == vec(0, 2)


def test_cone_needs_normals():
    """
    Test that a cone without normals cannot be built
    """
    with pytest.raises(ConeValidationError):
        ConeSpec(())


@pytest.mark.parametrize("cone", [orthant(2), icecream2(), orthant(3)], ids=["orthant 2", "ice cream", "orthant 3"])
def test_not_in_neg_interior_is_stable_under_adding_cone_elements(cone):
    """
    Test z not in -int C and c in C imply z + c not in -int C
    """
    rng = random.Random(1)
    checked = 0
    while checked < 1000:
        z = random_vector(rng, cone.dim)
        c = random_vector(rng, cone.dim)
        if not not_in_neg_interior(cone, z) or not cone_contains(cone, c):
            continue
        assert not_in_neg_interior(cone, z + c), (z, c)
        checked += 1


@pytest.mark.parametrize("cone", [orthant(2), icecream2()], ids=["orthant", "ice cream"])
def test_interior_plus_cone_stays_in_interior(cone):
    """
    Test int C + C is contained in int C
    """
    rng = random.Random(2)
    checked = 0
    while checked < 1000:
        a = random_vector(rng, cone.dim)
        c = random_vector(rng, cone.dim)
        if not cone_interior_contains(cone, a) or not cone_contains(cone, c):
            continue
        assert cone_interior_contains(cone, a + c), (a, c)
        checked += 1


@pytest.mark.parametrize("cone", [orthant(2), icecream2()], ids=["orthant", "ice cream"])
def test_cone_order_is_antisymmetric(cone):
    """
    Test a pointed cone only contains 0 together with its negative
    """
    rng = random.Random(3)
    for _ in range(1000):
        z = random_vector(rng, cone.dim, bound=1, denominator=2)
        if cone_contains(cone, z) and cone_contains(cone, -z):
            assert z.is_zero()


def test_box_grid_points():
    """
    Test the grid of a one dimensional box
    """
    # given
    K = interval(0, 1, 4)

    # then
    assert [p[0] for p in K.grid_points()] == [Fraction(k, 4) for k in range(5)]
    assert K.total_points() == 5
    assert K.describe() == "[0, 1] grid 4"
    assert K.center() == vec("1/2")


def test_two_dimensional_box():
    """
    Test vertices, grid and containment of a two dimensional box
    """
    # given
    K = BoxDomain(vec(-1, 0), vec(1, 2), (2,))

    # then
    assert K.grid_counts == (2, 2)
    assert K.vertices() == [vec(-1, 0), vec(-1, 2), vec(1, 0), vec(1, 2)]
    assert len(K.grid_points()) == 9
    assert K.contains(vec(0, 1))
    assert not K.contains(vec(2, 1))
    assert K.with_grid(1).total_points() == 4
    assert K.describe() == "[-1, 1] x [0, 2] grid 2 2"
    with pytest.raises(DomainError):
        K.ensure_contains(vec(0, 3))


def test_degenerate_box_axis():
    """
    Test that an axis of zero width has a single grid value
    """
    assert interval(1, 1, 4).grid_points() == [vec(1)]


@pytest.mark.parametrize(
    "lower, upper, counts, error",
    [
        pytest.param(vec(1), vec(0), (2,), ValueError, id="lower exceeds upper"),
        pytest.param(vec(0), vec(1), (0,), ValueError, id="empty grid"),
        pytest.param(vec(0, 0), vec(1, 1), (2, 2, 2), DimensionMismatchError, id="too many grid counts"),
    ],
)
def test_invalid_boxes(lower, upper, counts, error):
    """
    Test that malformed boxes are rejected
    """
    with pytest.raises(error):
        BoxDomain(lower, upper, counts)
