"""
This module is a REQUIRED extension to record the time of problems and tasks
"""

from datetime import datetime, timezone

from vequil.hookregistry import after, before
from vequil.extensionregistry import extension

__REQUIRED__ = True


@extension
class TimeRecorder(object):
    """
    Time Recorder vequil plugin
    """

    OPTIONS = [("--timing", "report the durations of problems and tasks")]
    LOAD_IF = staticmethod(lambda config: True)
    LOAD_PRIORITY = 1

    def __init__(self):
        before.each_problem(self.time_recorder_before_each_problem)
        before.each_task(self.time_recorder_before_each_task)
        after.each_problem(self.time_recorder_after_each_problem)
        after.each_task(self.time_recorder_after_each_task)

    def time_recorder_before_each_problem(self, problem):
        """
        Sets the starttime of the problem
        """
        problem.starttime = datetime.now(timezone.utc)

    def time_recorder_before_each_task(self, task):
        """
        Sets the starttime of the task
        """
        task.starttime = datetime.now(timezone.utc)

    def time_recorder_after_each_problem(self, problem):
        """
        Sets the endtime of the problem
        """
        problem.endtime = datetime.now(timezone.utc)

    def time_recorder_after_each_task(self, task):
        """
        Sets the endtime of the task
        """
        task.endtime = datetime.now(timezone.utc)
