"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

from fractions import Fraction

import pytest

from vequil.catalog import CatalogId, build
from vequil.exceptions import SequenceError, DomainError
from vequil.ordered_space import vec, interval, BoxDomain
from vequil.sequences import (
    Moebius,
    SequenceSpec,
    ImageNet,
    SumNet,
    WitnessSpec,
    parse_net,
    net_from_json,
    map_limit_along,
    generate_sequences,
)
from vequil.verdict import SamplingBudget


def test_moebius_formula():
    """
    Test the terms and the limit of a coordinate formula
    """
    # given
    formula = Moebius(-1, 0, 2, 1)

    # then
    assert formula.term(1) == Fraction(-1, 3)
    assert formula.term(2) == Fraction(-2, 5)
    assert formula.limit() == Fraction(-1, 2)
    assert not formula.is_constant()
    assert Moebius.constant("3/4").is_constant()


@pytest.mark.parametrize(
    "coefficients",
    [
        pytest.param((1, 0, 1, -1), id="pole at n = 1"),
        pytest.param((1, 0, 1, -3), id="pole after n = 1"),
        pytest.param((0, 1, 0, 0), id="zero denominator"),
        pytest.param((1, 0, 0, 1), id="diverging formula"),
    ],
)
def test_invalid_moebius_formulas(coefficients):
    """
    Test that formulas with a pole in the index range or without a finite limit are rejected
    """
    with pytest.raises(SequenceError):
        Moebius(*coefficients)


def test_sequence_toward_point():
    """
    Test x_n = x0 + d / (n + 1)
    """
    # when
    seq = SequenceSpec.toward(vec("1/2"), vec("1/2"))

    # then
    assert seq.term(1) == vec("3/4")
    assert seq.term(3) == vec("5/8")
    assert seq.limit() == (Fraction(1, 2),)
    assert seq.finite_limit() == vec("1/2")
    with pytest.raises(SequenceError):
        seq.term(0)


def test_sequence_prefix_replaces_first_terms():
    """
    Test that explicit prefix terms come before the formula tail
    """
    # given
    coords = (Moebius(0, 1, 1, 1),)

    # when
    seq = SequenceSpec(coords, vec(0), prefix=(vec("1/2"), vec("1/4")))

    # then
    assert seq.terms(3) == [vec("1/2"), vec("1/4"), vec("1/4")]
    assert not seq.is_constant()


@pytest.mark.parametrize(
    "coords, limit, prefix",
    [
        pytest.param((Moebius(0, 1, 1, 1),), vec(1), (), id="declared limit differs"),
        pytest.param((Moebius.constant(0),), vec(0), (), id="tail equals limit"),
        pytest.param((Moebius(0, 1, 1, 1),), vec(0), (vec(0),), id="prefix term equals limit"),
    ],
)
def test_invalid_sequences(coords, limit, prefix):
    """
    Test that sequences violating their contract are rejected
    """
    with pytest.raises(SequenceError):
        SequenceSpec(coords, limit, prefix)


def test_constant_net_may_equal_its_limit():
    """
    Test that constant nets are allowed to hit their limit
    """
    # when
    net = SequenceSpec.constant(vec(1, 2))

    # then
    assert net.is_constant()
    assert net.term(5) == vec(1, 2)
    assert net.to_text() == "const(1, 2)"


@pytest.mark.parametrize(
    "text, names, expected_first, expected_limit",
    [
        pytest.param("seq[-1,0,2,1]", None, vec("-1/3"), vec("-1/2"), id="single coordinate"),
        pytest.param("seq[1,3,2,2; 1,3,2,2]", None, vec(1, 1), vec("1/2", "1/2"), id="two coordinates"),
        pytest.param("const(1/2, -1)", None, vec("1/2", -1), vec("1/2", -1), id="constant literal"),
        pytest.param("const(y)", {"y": vec("3/4")}, vec("3/4"), vec("3/4"), id="constant by name"),
    ],
)
def test_parse_net(text, names, expected_first, expected_limit):
    """
    Test parsing net literals
    """
    # when
    net = parse_net(text, names)

    # then
    assert net.term(1) == expected_first
    assert net.limit_point == expected_limit


@pytest.mark.parametrize(
    "text",
    [
        pytest.param("seq[1,2,3]", id="three numbers"),
        pytest.param("seq[0,1,0,1]", id="constant sequence"),
        pytest.param("seq[1,0,1,-2]", id="pole in index range"),
        pytest.param("const(x0)", id="unknown name"),
        pytest.param("lin[1,2]", id="unknown literal"),
    ],
)
def test_parse_invalid_nets(text):
    """
    Test that malformed net literals are rejected
    """
    with pytest.raises(SequenceError):
        parse_net(text)


def test_sequence_json_representation():
    """
    Test that a sequence with prefix is rebuilt from its JSON representation
    """
    # given
    seq = SequenceSpec((Moebius(0, 1, 1, 1),), vec(0), prefix=(vec("1/2"),))

    # when
    rebuilt = net_from_json(seq.to_json())

    # then
    assert rebuilt == seq


def test_validate_sequence_in_domain():
    """
    Test that the first tail term and the limit bound the whole sequence
    """
    # given
    K = interval(-1, 1, 4)

    # then
    SequenceSpec.toward(vec(0), vec(2)).validate_in(K)
    with pytest.raises(DomainError):
        SequenceSpec.toward(vec(0), vec(4)).validate_in(K)
    with pytest.raises(DomainError):
        SequenceSpec((Moebius(0, 1, 1, 1),), vec(0), prefix=(vec(3),)).validate_in(K)


def test_generate_sequences_from_both_sides():
    """
    Test the deterministic sequence family around an interior point
    """
    # when
    sequences = generate_sequences(vec(0), interval(-1, 1, 4), SamplingBudget())

    # then
    firsts = [seq.term(1) for seq in sequences]
    assert firsts == [vec("1/2"), vec("-1/2"), vec("1/4"), vec("-1/4")]
    assert all(seq.limit_point == vec(0) for seq in sequences)


def test_generate_sequences_at_boundary_point():
    """
    Test that only sequences inside the domain are generated at a boundary point
    """
    # given
    K = interval(0, 1, 4)

    # when
    sequences = generate_sequences(vec(0), K, SamplingBudget(directions=2))

    # then
    assert sequences
    for seq in sequences:
        seq.validate_in(K)
        assert seq.term(1)[0] > 0


def test_generate_sequences_in_two_dimensions():
    """
    Test that diagonal directions and box vertices are used in two dimensions
    """
    # given
    K = BoxDomain(vec(0, 0), vec(1, 1), (2,))

    # when
    sequences = generate_sequences(vec("1/2", "1/2"), K, SamplingBudget(directions=6))

    # then
    labels = [seq.label for seq in sequences]
    assert len(sequences) == 8
    assert "segment to (0, 0)" in labels
    assert "segment to (0, 1)" in labels
    for seq in sequences:
        seq.validate_in(K)


def test_generate_sequences_with_seed():
    """
    Test that a seed adds reproducible random directions
    """
    # given
    K = interval(-1, 1, 4)
    plain = generate_sequences(vec(0), K, SamplingBudget())

    # when
    seeded = generate_sequences(vec(0), K, SamplingBudget(seed=7))
    again = generate_sequences(vec(0), K, SamplingBudget(seed=7))

    # then
    assert len(seeded) >= len(plain)
    assert [s.coords for s in seeded] == [s.coords for s in again]
    for seq in seeded:
        seq.validate_in(K)


def test_no_sequences_without_directions():
    assert generate_sequences(vec(0), interval(-1, 1, 4), SamplingBudget(directions=0)) == []


@pytest.mark.parametrize(
    "direction, expected",
    [
        pytest.param(vec(1), (Fraction(1),), id="from the right"),
        pytest.param(vec(-1), (Fraction(0),), id="from the left"),
    ],
)
def test_map_limit_along_sequence(direction, expected):
    """
    Test the exact one sided limits of a jump
    """
    # given
    h = build(CatalogId.EX_REAL_WUSC)

    # when
    limit = map_limit_along(h, SequenceSpec.toward(vec(0), direction))

    # then
    assert limit == expected


def test_infinite_limit_along_sequence():
    """
    Test that a diverging coordinate is reported as -oo
    """
    # given
    h = build(CatalogId.EX_QUSC_NOT_AUSC)
    image = ImageNet(h, (SequenceSpec.toward(vec(0), vec(1)),))

    # then
    assert image.limit() == (Fraction(1), "-oo")
    assert image.finite_limit() is None
    assert image.term(1) == vec(1, -2)


def test_sum_net():
    """
    Test the termwise sum of two nets
    """
    # given
    a = SequenceSpec.toward(vec(0), vec(1))
    b = SequenceSpec.constant(vec(2))

    # when
    net = SumNet(a, b)

    # then
    assert net.term(1) == vec("5/2")
    assert net.limit() == (Fraction(2),)


def test_witness_declared_limit_is_checked():
    """
    Test that a witness net has to tend to its declared limit
    """
    # given
    witness = WitnessSpec(SequenceSpec.toward(vec(0), vec(1)), vec(1))

    # then
    with pytest.raises(SequenceError):
        witness.validate()
    WitnessSpec(SequenceSpec.toward(vec(0), vec(1)), vec(0)).validate()
