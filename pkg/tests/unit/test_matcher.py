"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

import pytest

from parse_type.cfparse import Parser

import vequil.matcher as matcher
import vequil.exceptions as errors
from vequil.conditions import ConditionId
from vequil.customtyperegistry import CustomTypeRegistry
from vequil.ordered_space import vec
from vequil.taskregistry import TaskRegistry
from vequil import tasks


@pytest.mark.parametrize(
    "parse_pattern, string, expected_args, expected_kwargs",
    [
        pytest.param("solve dual {:Name}", "solve dual G", ("G",), {}, id="unnamed group"),
        pytest.param("solve dual {g:Name}", "solve dual G", tuple(), {"g": "G"}, id="named group"),
        pytest.param(
            "eval {map:Name} at {:Vector}", "eval F at (1/2, -1)", (vec("1/2", -1),), {"map": "F"}, id="both groups"
        ),
    ],
)
def test_parse_task_arguments_object(parse_pattern, string, expected_args, expected_kwargs):
    """
    Test functionality of ParseTaskArguments object
    """
    # given
    parser = Parser(parse_pattern, CustomTypeRegistry().custom_types)
    match = parser.search(string, evaluate_result=False)
    args = matcher.ParseTaskArguments(match)

    # when
    actual_args, actual_kwargs = args.evaluate()

    # then
    assert actual_args == expected_args
    assert actual_kwargs == expected_kwargs


@pytest.mark.parametrize(
    "given_sentence, given_tasks, expected_func_match",
    [
        pytest.param("solve dual G", {"solve dual {g:Name}": 1}, 1, id="single candidate"),
        pytest.param(
            "solve dual G",
            {"solve perturbed {f:Name} + {g:Name}": 1, "solve dual {g:Name}": 2},
            2,
            id="one matching candidate",
        ),
        pytest.param(
            "eval G at 1/2 and 3/4",
            {"eval {map:Name} at {x:Vector}": 1, "eval {map:Name} at {x:Vector} and {y:Vector}": 2},
            2,
            id="perfect match wins",
        ),
        pytest.param(
            "solve dual G quickly",
            {"dual {g:Name}": 1, "solve dual {g:Name}": 2},
            2,
            id="closest match",
        ),
    ],
)
def test_match_sentence_with_tasks(given_sentence, given_tasks, expected_func_match):
    """
    Test matching a sentence with given tasks
    """
    # given & when
    match = matcher.match_task(given_sentence, given_tasks)

    # then
    assert isinstance(match.argument_match, matcher.ParseTaskArguments)
    assert match.func == expected_func_match


@pytest.mark.parametrize(
    "given_sentence, expected_func, expected_kwargs",
    [
        pytest.param("solve dual G", tasks.solve_dual_problem, {"g": "G"}, id="solve dual"),
        pytest.param(
            "eval G at -1/2 and 3/4",
            tasks.evaluate_bifunction,
            {"map": "G", "x": vec("-1/2"), "y": vec("3/4")},
            id="eval bifunction",
        ),
        pytest.param(
            "a-usc of F with y = 0 at -1/2",
            tasks.notion_with_y_at,
            {"notion": "a-usc", "map": "F", "y": vec(0), "x": vec("-1/2")},
            id="notion with y",
        ),
        pytest.param(
            "check B1 for F and G at -1/2 with y = 3/4",
            tasks.check_condition_at,
            {"cond": ConditionId.B1, "f": "F", "g": "G", "x0": vec("-1/2"), "y": vec("3/4")},
            id="condition",
        ),
        pytest.param(
            "closedness of G at y = 0",
            tasks.closedness_at,
            {"g": "G", "y": vec(0)},
            id="closedness",
        ),
    ],
)
def test_match_builtin_tasks(given_sentence, expected_func, expected_kwargs):
    """
    Test that the sentences of the problem files match the built-in task definitions
    """
    # when
    match = matcher.match_task(given_sentence, TaskRegistry().tasks)
    _, actual_kwargs = match.argument_match.evaluate()

    # then
    assert match.func is expected_func
    assert actual_kwargs == expected_kwargs


@pytest.mark.parametrize(
    "given_sentence, given_tasks",
    [
        pytest.param("solve dual", {"solve dual {g:Name}": 1}, id="missing argument"),
        pytest.param("eval G at x", {"eval {map:Name} at {x:Vector}": 1}, id="malformed vector"),
    ],
)
def test_no_task_match(given_sentence, given_tasks):
    """
    Test failing to match a sentence with given tasks
    """
    # given & when
    match = matcher.match_task(given_sentence, given_tasks)

    # then
    assert match is None


def test_invalid_parse_pattern():
    """
    Test failure for invalid Parse pattern
    """
    # given
    invalid_pattern = "solve dual {g:Name {}"

    # when
    with pytest.raises(errors.TaskPatternError) as exc:
        matcher.match_task("solve dual G", {invalid_pattern: int})

    assert str(exc.value).startswith("Cannot compile pattern 'solve dual {g:Name {}' of task 'int': ")


def test_merging_task(mocker):
    """
    Test merging a Task with registered task functions
    """
    # given
    task_to_merge = mocker.MagicMock(sentence="solve dual G", definition_func=None, argument_match=None, verb=None)

    # when
    matcher.merge_task(task_to_merge, TaskRegistry().tasks)
    actual_args, actual_kwargs = task_to_merge.argument_match.evaluate()

    # then
    assert task_to_merge.definition_func is tasks.solve_dual_problem
    assert task_to_merge.verb == "solve"
    assert actual_args == tuple()
    assert actual_kwargs == {"g": "G"}


def test_no_task_definition_merge(mocker):
    """
    Test failure when no task definition function can be found during the merge
    """
    # given
    task_to_merge = mocker.MagicMock(sentence="walk the dog", path="walk.vq", line=3, definition_func=None)

    # when
    with pytest.raises(errors.TaskDefinitionNotFoundError) as exc:
        matcher.merge_task(task_to_merge, TaskRegistry().tasks)

    # then
    assert str(exc.value).startswith("Cannot find task definition for task 'walk the dog' in walk.vq:3")
