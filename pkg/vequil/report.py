"""
This module renders task results as text lines and as the JSON run report
"""

import io
import json

from . import __VERSION__
from .exceptions import MalformedReportError
from .equilibrium import SolutionReport
from .task import Task, ValueResult
from .verdict import Verdict

#: solutions listed in a text summary before it is cut
MAX_LISTED_SOLUTIONS = 8

STATE_SYMBOLS = {
    Task.State.PASSED: "+",
    Task.State.FAILED: "x",
    Task.State.SKIPPED: "-",
    Task.State.UNTESTED: "?",
}


def describe_result(task):
    """
    Returns the (status, summary) pair of a task result
    """
    if task.failure is not None:
        return "Error", "{0}: {1}".format(task.failure.name, task.failure.reason)

    result = task.result
    if isinstance(result, Verdict):
        return str(result.status), "; ".join(result.notes)
    if isinstance(result, SolutionReport):
        listed = ", ".join(str(x) for x in result.solutions[:MAX_LISTED_SOLUTIONS])
        if len(result.solutions) > MAX_LISTED_SOLUTIONS:
            listed += ", ..."
        return "Solved", "{0} solutions{1}".format(len(result.solutions), ": " + listed if listed else "")
    if isinstance(result, ValueResult):
        return "Value", result.summary()
    return str(task.state), ""


def format_task_line(task):
    """
    Formats ``<symbol> <sentence>  -> <status> [<summary>]``
    """
    status, summary = describe_result(task)
    line = "{0} {1}  -> {2}".format(STATE_SYMBOLS[task.state], task.sentence, status)
    if summary:
        line += " [{0}]".format(summary)
    return line


def result_to_json(result):
    if result is None:
        return None
    return result.to_json()


def task_to_json(task, timing=False):
    data = {
        "sentence": task.sentence,
        "verb": task.verb,
        "tags": [str(t) for t in task.tags],
        "state": task.state,
        "expect": task.keys.get("expect"),
        "value": task.keys.get("value"),
        "anchor": task.anchor,
        "assertion": task.is_assertion,
        "result": result_to_json(task.result),
        "mismatch": task.mismatch,
        "failure": None,
    }
    if task.failure is not None:
        data["failure"] = {"type": task.failure.name, "reason": task.failure.reason}
    if timing and task.starttime and task.endtime:
        data["duration"] = task.duration.total_seconds()
    return data


def _map_text(declaration):
    if declaration.catalog_id is not None:
        return "catalog {0}".format(declaration.catalog_id.value)
    return "{0} {1}: {2}".format(declaration.arity, declaration.codomain_dim, " | ".join(declaration.pieces))


def problem_to_json(problem, timing=False):
    domain = problem.effective_domain
    try:
        cone = problem.effective_cone.describe()
    except Exception:  # pylint: disable=broad-except
        cone = None
    return {
        "title": problem.title,
        "path": problem.path,
        "tags": [str(t) for t in problem.tags],
        "cone": cone,
        "domain": domain.describe() if domain is not None else None,
        "maps": {name: _map_text(d) for name, d in problem.declarations.items()},
        "tasks": [task_to_json(t, timing) for t in problem.tasks],
    }


def exit_status(problems):
    """
    Returns 2 if a task failed on an input error, 1 if any other task failed and 0 otherwise
    """
    return max((t.returncode for p in problems for t in p.tasks), default=0)


def build_report(problems, timing=False):
    return {
        "version": __VERSION__,
        "exit_status": exit_status(problems),
        "problems": [problem_to_json(p, timing) for p in problems],
    }


def dumps(report):
    return json.dumps(report, indent=4, sort_keys=True)


def write_report(report, path):
    with io.open(path, "w", encoding="utf-8") as f:
        f.write(dumps(report))
        f.write("\n")


def load_report(path):
    """
    Loads a JSON run report

    :raises MalformedReportError: if the report cannot be read or lacks its problem list
    """
    try:
        with io.open(path, "r", encoding="utf-8") as f:
            report = json.load(f)
    except (IOError, OSError) as e:
        raise MalformedReportError(path, e.strerror or str(e))
    except ValueError as e:
        raise MalformedReportError(path, "invalid JSON: {0}".format(e))

    if not isinstance(report, dict) or not isinstance(report.get("problems"), list):
        raise MalformedReportError(path, "no 'problems' list")
    for problem in report["problems"]:
        if not isinstance(problem, dict) or not isinstance(problem.get("tasks"), list):
            raise MalformedReportError(path, "problem without a 'tasks' list")
    return report


def iter_results(report):
    """
    Yields (problem title, task sentence, result json) of every task with a result
    """
    for problem in report["problems"]:
        for task in problem["tasks"]:
            if task.get("result"):
                yield problem.get("title"), task.get("sentence"), task["result"]
