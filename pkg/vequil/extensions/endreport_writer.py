"""
This vequil extension module provide the functionality to write the end report
"""

# disable no-member lint error because of dynamic method from colorful
# pylint: disable=no-member

from datetime import timedelta

import colorful
import humanize

from vequil.hookregistry import after
from vequil.task import Task
from vequil.utils import console_write as write
from vequil.extensionregistry import extension
from vequil.terrain import world


def _count(models):
    stats = {"amount": 0, Task.State.PASSED: 0, Task.State.FAILED: 0, Task.State.SKIPPED: 0, Task.State.UNTESTED: 0}
    for model in models:
        stats["amount"] += 1
        stats[model.state] += 1
    return stats


def problem_state(problem):
    """
    Returns the state of a problem derived from its tasks
    """
    states = [t.state for t in problem.tasks]
    if Task.State.FAILED in states:
        return Task.State.FAILED
    if states and all(s == Task.State.SKIPPED for s in states):
        return Task.State.SKIPPED
    if Task.State.UNTESTED in states:
        return Task.State.UNTESTED
    return Task.State.PASSED


class _ProblemState(object):  # pylint: disable=too-few-public-methods
    def __init__(self, problem):
        self.state = problem_state(problem)


@extension
class EndreportWriter(object):
    """
    Endreport writer vequil extension
    """

    LOAD_IF = staticmethod(lambda config: not config.get("json"))
    LOAD_PRIORITY = 50

    def __init__(self):
        after.all(self.console_write)

    def console_write(self, problems, marker):
        """
        Writes the endreport for all problems

        :param list problems: all problems
        """
        stats = {
            "problems": _count(_ProblemState(p) for p in problems),
            "tasks": _count(t for p in problems for t in p.tasks),
        }

        colored_closing_paren = colorful.bold_white(")")
        colored_comma = colorful.bold_white(", ")
        passed_word = colorful.bold_green("{0} passed")
        failed_word = colorful.bold_red("{0} failed")
        skipped_word = colorful.cyan("{0} skipped")

        output = ""
        for name in ("problems", "tasks"):
            if output:
                output += "\n"
            output += colorful.bold_white("{0} {1} (".format(stats[name]["amount"], name))
            output += passed_word.format(stats[name][Task.State.PASSED])
            if stats[name][Task.State.FAILED]:
                output += colored_comma + failed_word.format(stats[name][Task.State.FAILED])
            if stats[name][Task.State.SKIPPED]:
                output += colored_comma + skipped_word.format(stats[name][Task.State.SKIPPED])
            output += colored_closing_paren

        if world.config.get("timing"):
            duration = timedelta()
            for problem in problems:
                if problem.starttime and problem.endtime:
                    duration += problem.duration
            output += "\n"
            output += colorful.cyan("Run {0} finished within {1}".format(marker, humanize.naturaldelta(duration)))

        write(output)
