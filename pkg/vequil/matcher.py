"""
This module matches the task sentences of the problem files with the registered task definitions
"""

from collections import namedtuple

from parse_type.cfparse import Parser

from .customtyperegistry import CustomTypeRegistry
from .exceptions import TaskDefinitionNotFoundError, TaskPatternError

TaskMatch = namedtuple("TaskMatch", ["argument_match", "func"])


class ParseTaskArguments(object):  # pylint: disable=too-few-public-methods
    """Class to represent the argument groups matched by a parse task pattern"""

    def __init__(self, match):
        self.match = match

    def evaluate(self):
        """Lazy and return evaluate the task group matches"""
        result = self.match.evaluate_result()
        return result.fixed, result.named


def merge_tasks(problems, tasks):
    """
    Merges the tasks of the given problems with the registered task definitions

    :param list problems: the problems
    :param dict tasks: the registered tasks
    """
    for problem in problems:
        for task in problem.tasks:
            merge_task(task, tasks)


def merge_task(task, tasks):
    """
    Merges a single task with the registered task definitions

    :param Task task: the task from a problem file to merge
    :param dict tasks: the registered tasks
    """
    match = match_task(task.sentence, tasks)
    if not match or not match.func:
        raise TaskDefinitionNotFoundError(task)

    task.definition_func = match.func
    task.argument_match = match.argument_match
    task.verb = getattr(match.func, "verb", None)


def match_task(sentence, tasks):
    """
    Tries to find a match from the given sentence with the given tasks

    :param string sentence: the task sentence to match
    :param dict tasks: the available registered tasks

    :returns: the arguments and the func which were matched
    :rtype: TaskMatch
    """
    potentional_matches = []
    for pattern, func in tasks.items():
        try:
            parser = Parser(pattern, CustomTypeRegistry().custom_types)
        except ValueError as e:
            raise TaskPatternError(pattern, func.__name__, e)

        match = parser.search(sentence, evaluate_result=False)
        if not match:
            continue

        task_match = TaskMatch(argument_match=ParseTaskArguments(match), func=func)
        longest_group = len(match.match.group())
        if len(sentence) == longest_group:
            # a perfect match wins no matter of the other potentional matches
            return task_match

        potentional_matches.append((task_match, abs(len(sentence) - longest_group)))

    if potentional_matches:
        return min(potentional_matches, key=lambda x: x[1])[0]

    return None
