"""
This module provides an extension to write all problems and tasks to the syslog.
"""

import os
import sys

from vequil.terrain import world
from vequil.hookregistry import before, after
from vequil.extensionregistry import extension


@extension
class SyslogWriter(object):
    """
    Syslog Writer vequil extension. This extension is only supported on
    systems where the Python standard library supports the system logger
    (syslog). For example, this extension works on UNIX and UNIX-like
    systems (Linux), but will not work on Windows.
    """

    OPTIONS = [("--syslog", "log all of your problems and tasks to the syslog")]
    LOAD_IF = staticmethod(lambda config: config.get("syslog"))
    LOAD_PRIORITY = 40

    def __init__(self):
        if os.name == "nt":
            sys.stdout.write("Using --syslog on Windows is not supported.\n")
            return

        before.all(self.syslog_writer_before_all)
        before.each_problem(self.syslog_writer_before_each_problem)
        before.each_task(self.syslog_writer_before_each_task)
        after.all(self.syslog_writer_after_all)
        after.each_problem(self.syslog_writer_after_each_problem)
        after.each_task(self.syslog_writer_after_each_task)

    def log(self, message):
        """
        Logs the given message to the syslog

        :param string message: the message to log
        """
        import syslog

        syslog.syslog(syslog.LOG_INFO, message)

    def syslog_writer_before_all(self, problems, marker):  # pylint: disable=unused-argument
        """
        Opens the syslog
        """
        import syslog

        syslog.openlog("vequil")
        self.log("begin run {0}".format(marker))

    def syslog_writer_after_all(self, problems, marker):  # pylint: disable=unused-argument
        """
        Closes the syslog
        """
        import syslog

        self.log("end run {0}".format(marker))
        syslog.closelog()

    def syslog_writer_before_each_problem(self, problem):
        self.log("begin problem {0}:{1} {2}".format(world.config.marker, problem.id, problem.sentence))

    def syslog_writer_after_each_problem(self, problem):
        self.log("end problem {0}:{1} {2}".format(world.config.marker, problem.id, problem.sentence))

    def syslog_writer_before_each_task(self, task):
        self.log(
            "begin task {0}:{1}.{2} {3}".format(world.config.marker, task.problem.id, task.id, task.sentence)
        )

    def syslog_writer_after_each_task(self, task):
        self.log(
            "{0} task {1}:{2}.{3} {4}".format(
                task.state, world.config.marker, task.problem.id, task.id, task.sentence
            )
        )
