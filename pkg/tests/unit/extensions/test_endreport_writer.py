"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

from datetime import datetime, timedelta, timezone

import pytest

from vequil.extensions.endreport_writer import EndreportWriter, problem_state
from vequil.problem import Problem
from vequil.task import Task


def _problem(*states):
    problem = Problem(1, "states", "states.vq", 1)
    for i, state in enumerate(states, start=1):
        task = Task(i, "validate cone", "states.vq", i + 1, problem)
        task.state = state
        problem.tasks.append(task)
    return problem


@pytest.mark.parametrize(
    "states, expected",
    [
        pytest.param([Task.State.PASSED, Task.State.FAILED], Task.State.FAILED, id="one failed task"),
        pytest.param([Task.State.SKIPPED, Task.State.SKIPPED], Task.State.SKIPPED, id="all skipped"),
        pytest.param([Task.State.PASSED, Task.State.UNTESTED], Task.State.UNTESTED, id="not run"),
        pytest.param([Task.State.PASSED, Task.State.SKIPPED], Task.State.PASSED, id="passed"),
        pytest.param([], Task.State.PASSED, id="no tasks"),
    ],
)
def test_problem_state(states, expected):
    """
    Test deriving the state of a problem from its tasks
    """
    assert problem_state(_problem(*states)) == expected


def test_endreport_counts(mocker):
    """
    Test that the end report counts problems and tasks
    """
    # given
    write = mocker.patch("vequil.extensions.endreport_writer.write")
    problems = [
        _problem(Task.State.PASSED, Task.State.FAILED),
        _problem(Task.State.PASSED, Task.State.SKIPPED),
    ]

    # when
    EndreportWriter().console_write(problems, "run")

    # then
    output = str(write.call_args[0][0])
    assert "2 problems (" in output
    assert "4 tasks (" in output
    assert "2 passed" in output
    assert "1 failed" in output
    assert "1 skipped" in output
    assert "finished within" not in output


def test_endreport_with_timing(world_config, mocker):
    """
    Test that --timing adds the total duration of the run
    """
    # given
    world_config.timing = True
    write = mocker.patch("vequil.extensions.endreport_writer.write")
    problem = _problem(Task.State.PASSED)
    problem.starttime = datetime.now(timezone.utc)
    problem.endtime = problem.starttime + timedelta(seconds=3)

    # when
    EndreportWriter().console_write([problem], "nightly")

    # then
    assert "Run nightly finished within 3 seconds" in str(write.call_args[0][0])
