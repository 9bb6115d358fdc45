"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

import pytest

from vequil.catalog import CatalogId, build
from vequil.levelsets import GridSet, level_set, transition_anchors, eventually_member, closedness_probe
from vequil.maps import fix_second
from vequil.ordered_space import vec, orthant, interval
from vequil.sequences import SequenceSpec
from vequil.verdict import Status


@pytest.mark.parametrize(
    "catalog_id, excluded, contained, size",
    [
        pytest.param(CatalogId.EX_LEVELSET_QUSC, vec(0), vec("1/4"), 4, id="reciprocal blow up"),
        pytest.param(CatalogId.EX_LEVELSET_WUSC, vec(-1), vec("-3/4"), 12, id="step map"),
    ],
)
def test_level_set_at_zero(catalog_id, excluded, contained, size):
    """
    Test computing G(0) on the grid of the catalog domain
    """
    # when
    G = level_set(build(catalog_id), vec(0), orthant(2))

    # then
    assert excluded not in G
    assert contained in G
    assert len(G) == size
    assert not G.is_empty()


def test_level_set_json_lists_members():
    # when
    G = level_set(build(CatalogId.EX_LEVELSET_QUSC), vec(0), orthant(2))

    # then
    assert G.to_json()["points"] == [["1/4"], ["1/2"], ["3/4"], ["1"]]


def test_level_set_on_smaller_domain():
    """
    Test that a level set can be computed on a sub box of the map domain
    """
    # when
    G = level_set(build(CatalogId.EX_LEVELSET_QUSC), vec(0), orthant(2), interval(0, 1, 2))

    # then
    assert G.points() == [vec("1/2"), vec(1)]


def test_grid_set_mask_must_fit_the_grid():
    with pytest.raises(ValueError):
        GridSet(interval(0, 1, 4), (True, False))


@pytest.mark.parametrize(
    "catalog_id, expected",
    [
        pytest.param(CatalogId.EX_LEVELSET_QUSC, [vec(0)], id="reciprocal blow up"),
        pytest.param(CatalogId.EX_LEVELSET_WUSC, [vec(-1)], id="step map"),
        pytest.param(CatalogId.EX_B1_SEMICONT_G, [], id="whole domain"),
    ],
)
def test_transition_anchors(catalog_id, expected):
    """
    Test that anchors are the non-members next to a member
    """
    # given
    G = level_set(build(catalog_id), vec(0), orthant(2))

    # then
    assert transition_anchors(G) == expected


@pytest.mark.parametrize(
    "direction, expected",
    [
        pytest.param(vec(1), True, id="from the right"),
        pytest.param(vec(-1), False, id="from the left"),
    ],
)
def test_eventually_member(direction, expected):
    """
    Test the eventual membership of h(x_n) outside of -int C
    """
    # given
    h = fix_second(build(CatalogId.EX_LEVELSET_QUSC), vec(0))

    # when
    member = eventually_member(h, SequenceSpec.toward(vec(0), direction), orthant(2))

    # then
    assert member is expected


@pytest.mark.parametrize(
    "catalog_id, anchor",
    [
        pytest.param(CatalogId.EX_LEVELSET_QUSC, ["0"], id="reciprocal blow up"),
        pytest.param(CatalogId.EX_LEVELSET_WUSC, ["-1"], id="step map"),
    ],
)
def test_level_set_is_not_closed(catalog_id, anchor, budget):
    """
    Test the refutation of closedness by a member sequence with an outside limit
    """
    # when
    verdict = closedness_probe(build(catalog_id), vec(0), orthant(2), budget=budget)

    # then
    assert verdict.status is Status.FAILS
    assert verdict.kind == "closedness-refutation"
    assert verdict.certificate["anchor"] == anchor
    assert verdict.certificate["value"] == ["-1", "-1"]
    assert verdict.certificate["depth"] == budget.depth


def test_closedness_without_anchors_is_consistent():
    """
    Test that a level set covering the whole grid is not refuted
    """
    # when
    verdict = closedness_probe(build(CatalogId.EX_B1_SEMICONT_G), vec(0), orthant(2))

    # then
    assert verdict.status is Status.CONSISTENT
    assert verdict.kind == "closedness"
    assert "0 anchors probed" in verdict.notes
