"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

import random
from fractions import Fraction

import pytest

from vequil.catalog import CatalogId, GROUND_TRUTH, build, ground_truth_map
from vequil.exceptions import SequenceError
from vequil.mapparser import parse_map
from vequil.maps import UNARY, fix_second
from vequil.ordered_space import vec, orthant, icecream2, format_rational, interval
from vequil.semicontinuity import (
    NOTIONS,
    ausc_along,
    ausc_check,
    ausc_sum_along,
    cusc_check,
    qusc_check,
    wusc_check,
    k_grid,
    is_continuous_at,
    verify_ausc_witness,
    ousc_verify_certificate,
    validate_reduction,
)
from vequil.sequences import SequenceSpec, WitnessSpec, parse_net
from vequil.verdict import Status, SamplingBudget, DEFAULT_BUDGET


@pytest.fixture()
def icecream_at_half():
    """
    Fixture for x -> g(x, 0) of the ice cream example together with the point 1/2
    """
    return fix_second(build(CatalogId.EX_ICECREAM_G), vec(0)), vec("1/2"), icecream2()


def test_reduction_agrees_with_witness_oracle():
    """
    Test that the limit reduction agrees with the brute-force oracle on the catalog
    """
    assert validate_reduction(DEFAULT_BUDGET)


def test_ausc_along_with_explicit_witness(icecream_at_half):
    """
    Test that a supplied witness is verified and reported
    """
    # given
    h, x0, C = icecream_at_half
    seq = parse_net("seq[1,3,2,2]")
    witness = WitnessSpec(parse_net("seq[1,3,2,2; 1,3,2,2]"), vec("1/2", "1/2"))

    # when
    verdict = ausc_along(h, x0, seq, C, witness=witness)

    # then
    assert verdict.status is Status.HOLDS
    assert verdict.kind == "ausc-witness"
    assert verdict.certificate["witness"] == witness.to_json()


def test_verify_tampered_witness(icecream_at_half):
    """
    Test that a witness with a wrong first term is rejected at index 1
    """
    # given
    h, x0, C = icecream_at_half
    seq = parse_net("seq[1,3,2,2]")
    net = parse_net("seq[1,3,2,2; 1,3,2,2]")
    tampered = WitnessSpec(SequenceSpec(net.coords, net.limit_point, prefix=(vec(0, 0),)), vec("1/2", "1/2"))

    # when
    rejected = verify_ausc_witness(h, x0, seq, tampered, C, 8)

    # then
    assert rejected is not None
    assert rejected[0] == 1


def test_verify_witness_with_wrong_limit(icecream_at_half):
    """
    Test that the limit clause of a witness is checked first
    """
    # given
    h, x0, C = icecream_at_half
    seq = parse_net("seq[1,3,2,2]")
    witness = WitnessSpec(parse_net("seq[1,3,2,2; 1,3,2,2]"), vec(1, 1))

    # when
    rejected = verify_ausc_witness(h, x0, seq, witness, C, 8)

    # then
    assert rejected[0] == 0


def test_ausc_along_infeasible():
    """
    Test that a diverging bound on a cone normal rules out every witness
    """
    # given
    h = build(CatalogId.EX_QUSC_NOT_AUSC)
    seq = parse_net("seq[0,1,1,1]")

    # when
    verdict = ausc_along(h, vec(0), seq, orthant(2))

    # then
    assert verdict.status is Status.FAILS
    assert verdict.kind == "ausc-infeasible"
    assert verdict.certificate["normal"] == ["1", "0"]
    assert verdict.certificate["limsup"] == "1"
    assert verdict.certificate["bound"] == "0"


def test_ausc_along_needs_sequence_tending_to_point(icecream_at_half):
    h, _, C = icecream_at_half
    with pytest.raises(SequenceError):
        ausc_along(h, vec("1/4"), parse_net("seq[1,3,2,2]"), C)


def test_ausc_along_needs_unary_map():
    with pytest.raises(ValueError):
        ausc_along(build(CatalogId.EX_ICECREAM_G), vec(0), parse_net("seq[0,1,1,1]"), icecream2())


def test_ausc_at_jump_is_consistent(icecream_at_half):
    """
    Test that witnesses along every sequence do not prove a-usc at a discontinuity
    """
    # given
    h, x0, C = icecream_at_half

    # when
    verdict = ausc_check(h, x0, C)

    # then
    assert verdict.status is Status.CONSISTENT
    assert verdict.kind == "ausc"


def test_ausc_of_continuous_map_holds():
    """
    Test that a-usc is proven where the map is continuous
    """
    # given
    h = fix_second(build(CatalogId.EX_LEVELSET_QUSC), vec(0))

    # when
    verdict = ausc_check(h, vec("1/2"), orthant(2))

    # then
    assert is_continuous_at(h, vec("1/2"))
    assert verdict.status is Status.HOLDS
    assert verdict.kind == "ausc-continuous"


def test_ausc_fails_on_upward_jump():
    """
    Test that a-usc fails if one side jumps above the value at the point
    """
    # when
    verdict = ausc_check(build(CatalogId.EX_REAL_WUSC), vec(0), orthant(1))

    # then
    assert verdict.status is Status.FAILS
    assert verdict.kind == "ausc-infeasible"


def test_cusc_refutation(icecream_at_half):
    """
    Test the refutation of C-usc of the ice cream example at 1/2
    """
    # given
    h, x0, C = icecream_at_half

    # when
    verdict = cusc_check(h, x0, C)

    # then
    assert verdict.status is Status.FAILS
    assert verdict.kind == "cusc-refutation"
    entries = verdict.certificate["entries"]
    assert len(entries) == DEFAULT_BUDGET.depth + 1
    assert all(entry["residual"] == ["-3/2", "3/2"] for entry in entries)


def test_cusc_of_continuous_map_is_consistent(icecream_at_half):
    """
    Test that a map continuous at the point is not refuted
    """
    # given
    h, _, C = icecream_at_half

    # when
    verdict = cusc_check(h, vec("1/4"), C)

    # then
    assert verdict.status is Status.CONSISTENT
    assert verdict.kind == "cusc"


def test_qusc_refutation():
    """
    Test the refutation of q-usc of the w-usc example at 1/2
    """
    # given
    h = build(CatalogId.EX_WUSC_NOT_QUSC)

    # when
    verdict = qusc_check(h, vec("1/2"), icecream2())

    # then
    assert verdict.status is Status.FAILS
    assert verdict.kind == "qusc-refutation"
    assert verdict.certificate["k"] == ["-1", "-1"]


def test_k_grid_order():
    """
    Test the k-grid is ordered by distance to the anchor
    """
    # when
    grid = k_grid(vec(0), SamplingBudget(kgrid=2, kradius=1))

    # then
    assert grid == [vec(0), vec("-1/2"), vec("1/2"), vec(-1), vec(1)]


def test_wusc_holds_from_one_side():
    """
    Test that w-usc only needs a witness along one sequence
    """
    # when
    verdict = wusc_check(build(CatalogId.EX_REAL_WUSC), vec(0), orthant(1))

    # then
    assert verdict.status is Status.HOLDS
    assert verdict.kind == "ausc-witness"


def test_wusc_obstruction():
    """
    Test that a normal bound exceeded on every approaching piece refutes w-usc
    """
    # when
    verdict = wusc_check(build(CatalogId.EX_QUSC_NOT_AUSC), vec(0), orthant(2))

    # then
    assert verdict.status is Status.FAILS
    assert verdict.kind == "wusc-obstruction"
    assert verdict.certificate["normal"] == ["1", "0"]
    assert verdict.certificate["pieces"] == [{"piece": 0, "value": "1"}]


def test_wusc_seed_must_avoid_the_point():
    """
    Test that a seed sequence whose terms equal the point is rejected
    """
    with pytest.raises(SequenceError):
        wusc_check(build(CatalogId.EX_REAL_WUSC), vec(0), orthant(1), seeds=[(SequenceSpec.constant(vec(0)), None)])


@pytest.mark.parametrize(
    "xnet, expected",
    [
        pytest.param("seq[0,-1,1,1]", True, id="increasing from the left"),
        pytest.param("seq[0,1,1,1]", False, id="decreasing from the right"),
    ],
)
def test_ousc_certificate(xnet, expected):
    """
    Test verifying an o-usc certificate with vanishing z- and w-nets
    """
    # given
    h = build(CatalogId.EX_REAL_WUSC)
    zero_net = SequenceSpec.constant(vec(0))

    # when
    verified = ousc_verify_certificate(h, vec(0), orthant(1), parse_net(xnet), zero_net, zero_net, depth=16)

    # then
    assert verified is expected


def test_ousc_certificate_needs_vanishing_nets():
    h = build(CatalogId.EX_REAL_WUSC)
    with pytest.raises(SequenceError):
        ousc_verify_certificate(
            h, vec(0), orthant(1), parse_net("seq[0,-1,1,1]"), SequenceSpec.constant(vec(1)), parse_net("seq[0,1,1,1]")
        )


def test_ausc_of_sum_along_sequence(icecream_at_half):
    """
    Test that the summed witnesses of f and g are a witness of f + g
    """
    # given
    h, x0, C = icecream_at_half
    seq = parse_net("seq[1,3,2,2]")

    # when
    verdict = ausc_sum_along(h, h, x0, seq, C)

    # then
    assert verdict.status is Status.HOLDS
    assert verdict.kind == "ausc-witness"
    assert "summed witness" in verdict.notes


@pytest.mark.parametrize(
    "truth",
    GROUND_TRUTH,
    ids=["{0} at {1}".format(t.catalog_id.value, t.x0) for t in GROUND_TRUTH],
)
def test_checks_never_refute_true_notions(truth):
    """
    Test that no check refutes a notion which holds analytically
    and no check proves a notion which fails analytically
    """
    # given
    h, x0, C = ground_truth_map(truth)
    expected = {"c-usc": truth.cusc, "a-usc": truth.ausc, "q-usc": truth.qusc, "w-usc": truth.wusc}

    for notion, check in NOTIONS.items():
        # when
        verdict = check(h, x0, C)

        # then
        if expected[notion]:
            assert verdict.status is not Status.FAILS, notion
        else:
            assert verdict.status is not Status.HOLDS, notion


def _random_affine(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 3))


@pytest.mark.parametrize("seed", range(20))
def test_real_valued_ausc_agrees_with_limsup(seed):
    """
    Test that for real valued maps a-usc along a sequence is limsup h(x_n) <= h(x0)
    """
    # given
    rng = random.Random(seed)
    a1, b1, c, a2, b2 = (_random_affine(rng) for _ in range(5))
    h = parse_map(
        [
            "x < 0 -> (add (mul {0} x) {1})".format(format_rational(a1), format_rational(b1)),
            "x = 0 -> {0}".format(format_rational(c)),
            "x > 0 -> (add (mul {0} x) {1})".format(format_rational(a2), format_rational(b2)),
        ],
        UNARY,
        interval(-1, 1, 4),
    )

    for direction, limsup in ((vec(1), b2), (vec(-1), b1)):
        # when
        verdict = ausc_along(h, vec(0), SequenceSpec.toward(vec(0), direction), orthant(1))

        # then
        assert verdict.is_fails is (limsup > c), (direction, a1, b1, c, a2, b2)
        if not verdict.is_fails:
            assert verdict.is_holds
