"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

from fractions import Fraction

import pytest

from parse_type.cfparse import Parser

import vequil.exceptions as errors
from vequil.conditions import ConditionId
from vequil.customtyperegistry import CustomTypeRegistry, parse_vector, parse_vector_list, parse_box
from vequil.ordered_space import vec


@pytest.mark.parametrize(
    "text, expected",
    [
        pytest.param("(1/2, -1)", vec("1/2", -1), id="tuple"),
        pytest.param(" -3/4 ", vec("-3/4"), id="bare rational"),
        pytest.param("(0)", vec(0), id="one dimensional tuple"),
    ],
)
def test_parse_vector(text, expected):
    assert parse_vector(text) == expected


@pytest.mark.parametrize("text", ["(1, )", "(1/0)", "(a, b)"], ids=["empty coordinate", "zero denominator", "names"])
def test_parse_malformed_vector(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_vector(text)


@pytest.mark.parametrize(
    "text, expected",
    [
        pytest.param("(0, 1) (1/2, 1)", [vec(0, 1), vec("1/2", 1)], id="blank separated"),
        pytest.param("0, 1/2, 1", [vec(0), vec("1/2"), vec(1)], id="comma separated"),
    ],
)
def test_parse_vector_list(text, expected):
    """
    Test parsing the vector lists of the anchor and contains keys
    """
    assert parse_vector_list(text) == expected


def test_parse_empty_vector_list():
    with pytest.raises(ValueError):
        parse_vector_list("  ")


@pytest.mark.parametrize(
    "text, lower, upper, grid",
    [
        pytest.param("[0, 1] x [-1, 1] grid 4 2", vec(0, -1), vec(1, 1), (4, 2), id="box with grid"),
        pytest.param("[-1/2, 1/2]", vec("-1/2"), vec("1/2"), None, id="interval without grid"),
    ],
)
def test_parse_box(text, lower, upper, grid):
    """
    Test parsing box literals
    """
    # when
    box = parse_box(text)

    # then
    assert box.lower == lower
    assert box.upper == upper
    assert box.grid == grid


@pytest.mark.parametrize("text", ["[0] x [0, 1]", "0, 1", "[0, 1] grid"], ids=["one bound", "no brackets", "no count"])
def test_parse_malformed_box(text):
    with pytest.raises(ValueError):
        parse_box(text)


def test_custom_types_in_patterns():
    """
    Test that the registered types convert the arguments of a task sentence
    """
    # given
    parser = Parser("check {:Condition} on {:Box} with {:Rational}", CustomTypeRegistry().custom_types)

    # when
    result = parser.parse("check b1 on [0, 1] grid 2 with -3/2")

    # then
    condition, box, number = result.fixed
    assert condition is ConditionId.B1
    assert box.grid == (2,)
    assert number == Fraction(-3, 2)


def test_register_custom_type_twice():
    """
    Test that a custom type name can only be registered once
    """
    with pytest.raises(errors.VequilError) as exc:
        CustomTypeRegistry().register("Vector", lambda text: text)

    assert str(exc.value) == "Cannot register custom type with name Vector because it already exists"
