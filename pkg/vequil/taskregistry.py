"""
This module provides a registry for all task definitions which were decorated with the @task-decorator.
"""

from singleton import singleton

from .exceptions import SameTaskError


@singleton()
class TaskRegistry(object):
    """
    Represents the task registry
    """

    def __init__(self):
        self._tasks = {}

    def register(self, pattern, func):
        """
        Registers a given pattern with the given task function.
        """
        if pattern in self._tasks:
            raise SameTaskError(pattern, self._tasks[pattern], func)

        self._tasks[pattern] = func

    def get_pattern(self, func):
        """
        Get task pattern from a given function.
        """
        return next((k for k, v in self._tasks.items() if v == func), "Unknown")

    def verbs(self):
        """
        Returns all verbs of the registered tasks in registration order
        """
        verbs = []
        for func in self._tasks.values():
            verb = getattr(func, "verb", None)
            if verb and verb not in verbs:
                verbs.append(verb)
        return verbs

    def clear(self):
        """
        Clears all registered tasks
        """
        self._tasks = {}

    @property
    def tasks(self):
        """
        Returns all registered tasks
        """
        return self._tasks


def task(pattern, verb=None):
    """
    Task decorator for task definitions

    :param string pattern: the parse pattern to match the task sentences in the problem file
    :param string verb: the subcommand this task belongs to

    :returns: the decorated function
    :rtype: function
    """

    def _decorator(func):
        """
        Represents the actual decorator
        """
        func.verb = verb
        TaskRegistry().register(pattern, func)
        return func

    return _decorator
