"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

import os

import pytest

import tagexpressions

from vequil.core import Core
from vequil.catalog import CatalogId
from vequil.model import Tag
from vequil.ordered_space import vec
from vequil.parser import ProblemFileParser, parse_text, serialize, parse_cone, parse_domain
import vequil.exceptions as errors


@pytest.fixture()
def parser(request, problemfiledir):
    """
    Fixture to create a ProblemFileParser for the problem file named by the test parameter
    """
    name, *tag_expr = request.param
    path = os.path.join(problemfiledir, name + ".vq")
    return ProblemFileParser(Core(), path, tagexpressions.parse(tag_expr[0]) if tag_expr else None)


@pytest.mark.parametrize("parser", [("increasing",)], indirect=["parser"])
def test_parse_problem_with_inline_map(parser):
    """
    Test parsing a problem with cone, domain, an inline map and tasks
    """
    # when
    problems = parser.parse()

    # then
    assert len(problems) == 1
    problem = problems[0]
    assert problem.title == "increasing bifunction"
    assert problem.line == 3
    assert problem.tags == [Tag("solve")]
    assert problem.cone.describe() == "orthant 2"
    assert problem.domain.describe() == "[0, 1] grid 4"
    declaration = problem.declarations["G"]
    assert declaration.arity == "bifunction"
    assert declaration.codomain_dim == 2
    assert declaration.pieces == ("always -> (sub y x); (sub y x)",)
    assert declaration.line == 6

    assert [t.sentence for t in problem.tasks] == ["solve dual G", "eval G at 0 and 1"]
    assert problem.tasks[0].keys == {"expect": "contains (0)"}
    assert problem.tasks[0].is_assertion
    assert problem.tasks[1].tags == [Tag("assert")]
    assert problem.tasks[1].line == 12
    assert problem.map("G")(vec(0), vec(1)) == vec(1, 1)


@pytest.mark.parametrize("parser", [("tags",)], indirect=["parser"])
def test_parse_tags_budget_and_anchor(parser):
    """
    Test parsing tags with arguments, budgets and anchor keys of multiple problems
    """
    # when
    first, second = parser.parse()

    # then
    assert first.tags == [Tag("solve"), Tag("seed", "3")]
    assert first.budget.depth == 8
    assert first.budget.density == 2
    assert first.tasks[0].tag_names == ["solve", "seed(3)", "slow"]
    assert first.tasks[1].anchor == "the bifunction is increasing in y"
    assert second.cone.describe() == "icecream"
    assert second.domain is None
    assert second.tasks[0].keys["expect"] == "true"


@pytest.mark.parametrize(
    "parser, expected_sentences",
    [
        pytest.param(("tags", "not slow"), [["eval G at 0 and 1/2"], ["cone contains (-3/2, 3/2)"]], id="not slow"),
        pytest.param(("tags", "other"), [[], ["cone contains (-3/2, 3/2)"]], id="problem tag"),
        pytest.param(("tags", "slow or other"), [["solve dual G"], ["cone contains (-3/2, 3/2)"]], id="or"),
    ],
    indirect=["parser"],
)
def test_parse_with_tag_expression(parser, expected_sentences):
    """
    Test that tag expressions select tasks by their own and their problem's tags
    """
    # when
    problems = parser.parse()

    # then
    assert [[t.sentence for t in p.tasks] for p in problems] == expected_sentences


@pytest.mark.parametrize(
    "parser, expected_message, expected_line, expected_column",
    [
        pytest.param(("syntax-error",), "A domain needs grid counts", 3, 13, id="domain without grid"),
        pytest.param(("unknown-key",), "Unknown task key 'hope'", 8, 1, id="unknown task key"),
        pytest.param(("map-error",), "Missing ')'", 5, None, id="malformed map expression"),
        pytest.param(
            ("dimension-mismatch",),
            "Map 'G' maps into dimension 3 but the cone lives in dimension 2",
            4,
            1,
            id="map dimension differs from cone",
        ),
    ],
    indirect=["parser"],
)
def test_parse_syntax_errors(parser, expected_message, expected_line, expected_column):
    """
    Test that syntax errors point to the line and column of the problem file
    """
    # when
    with pytest.raises(errors.ProblemFileSyntaxError) as exc:
        parser.parse()

    # then
    assert expected_message in str(exc.value)
    assert exc.value.line == expected_line
    if expected_column is not None:
        assert exc.value.column == expected_column
    assert exc.value.path.endswith(".vq")
    assert isinstance(exc.value, errors.InputError)


@pytest.mark.parametrize(
    "text, expected_message",
    [
        pytest.param("    cone: orthant 2\n", "Expected 'Problem:'", id="key before problem"),
        pytest.param("Problem:\n", "A Problem needs a title", id="problem without title"),
        pytest.param("Problem: p\n    Task:\n", "A Task needs a sentence", id="task without sentence"),
        pytest.param("Problem: p\n    cone: orthant 2\n    cone: orthant 2\n", "only be declared once", id="two cones"),
        pytest.param("Problem: p\n    cone: cube\n", "Expected 'orthant <dim>'", id="unknown cone"),
        pytest.param("Problem: p\n    color: red\n", "Unknown problem key 'color'", id="unknown problem key"),
        pytest.param("Problem: p\n    map G: catalog NOPE\n", "Unknown catalog id 'NOPE'", id="unknown catalog id"),
        pytest.param("Problem: p\n    map G: bifunction 2\n", "Inline map 'G' has no pieces", id="map without piece"),
        pytest.param("Problem: p\n    piece: always -> 0\n", "A piece must follow", id="piece without map"),
        pytest.param("Problem: p\n    budget: depth=0\n", "", id="non positive budget"),
        pytest.param(
            "Problem: p\n    Task: solve dual G\n        expect: holds\n        expect: fails\n",
            "Task key 'expect' is given twice",
            id="duplicate task key",
        ),
        pytest.param("Problem: p\n@assert\n", "Tags without a following Problem or Task", id="dangling tag"),
    ],
)
def test_parse_text_errors(text, expected_message):
    """
    Test the syntax errors of problem file text
    """
    with pytest.raises(errors.ProblemFileSyntaxError) as exc:
        parse_text(text)

    assert expected_message in str(exc.value)


def test_parse_catalog_map_defaults():
    """
    Test that problems with catalog maps fall back to the cone and domain of the catalog
    """
    # when
    (problem,) = parse_text("Problem: q-usc\n    map Q: catalog EX_QUSC_NOT_AUSC\n")

    # then
    assert problem.cone is None
    assert problem.declarations["Q"].catalog_id is CatalogId.EX_QUSC_NOT_AUSC
    assert problem.effective_cone is not None
    assert problem.effective_domain is not None


def test_serialize_round_trip(problemfiledir):
    """
    Test that serialized problems parse to equal problems
    """
    # given
    problems = ProblemFileParser(None, os.path.join(problemfiledir, "tags.vq")).parse()

    # when
    text = serialize(problems)

    # then
    assert parse_text(text) == problems
    assert "    budget: depth=8 density=2" in text
    assert "@solve @seed(3)" in text


def test_parse_cone_and_domain():
    assert parse_cone("normals (1, 0) (0, 1)").dim == 2
    assert parse_domain("[0, 1] x [-1, 1] grid 2 2").describe() == "[0, 1] x [-1, 1] grid 2 2"
    with pytest.raises(ValueError):
        parse_cone("orthant two")
