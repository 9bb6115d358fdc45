"""
This vequil extension writes the run to the console as a text report:
one block per problem and one line per task.
"""

# pylint: disable=no-member

import colorful as cf

from vequil.terrain import world
from vequil.hookregistry import before, after
from vequil.task import Task
from vequil.extensionregistry import extension
from vequil.report import format_task_line
from vequil.utils import console_write as write


@extension
class TextOutputFormatter(object):
    """
    Output formatter for the text report
    """

    LOAD_IF = staticmethod(lambda config: not config.get("json"))
    LOAD_PRIORITY = 30

    STATE_COLORS = {
        Task.State.PASSED: cf.bold_green,
        Task.State.FAILED: cf.bold_red,
        Task.State.SKIPPED: cf.cyan,
        Task.State.UNTESTED: cf.bold_yellow,
    }

    def __init__(self):
        before.each_problem(self.text_formatter_before_each_problem)
        after.each_task(self.text_formatter_after_each_task)
        after.each_problem(self.text_formatter_after_each_problem)

    def text_formatter_before_each_problem(self, problem):
        """
        Writes the problem header to the console
        """
        if problem.tags:
            write(cf.cyan(" ".join(str(t) for t in problem.tags)))
        write("{0}: {1}".format(cf.bold_white("Problem"), problem.title))

    def text_formatter_after_each_task(self, task):
        """
        Writes the task line together with its anchor quote and failure
        """
        if task.state == Task.State.SKIPPED and world.config.get("verb"):
            return

        color = self.STATE_COLORS.get(task.state, cf.white)
        line = "    {0}".format(color(format_task_line(task)))
        if world.config.get("timing") and task.starttime and task.endtime:
            line += cf.bold_black(" ({0:.3f}s)".format(task.duration.total_seconds()))
        write(line)

        if task.anchor:
            write("        {0}".format(cf.italic_white('"{0}"'.format(task.anchor))))
        if task.mismatch:
            write("        {0}".format(cf.red(task.mismatch)))
        if task.failure is not None and world.config.get("with_traceback"):
            write(
                "        {0}".format(
                    "\n        ".join(str(cf.red(l)) for l in task.failure.traceback.split("\n")[:-1])
                )
            )

    def text_formatter_after_each_problem(self, problem):
        write("")
