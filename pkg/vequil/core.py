"""
Providing vequil core functionality.
"""

from threading import Lock
from collections import OrderedDict

from .parser import ProblemFileParser


class Configuration(object):
    """
    Manage configuration. Attributes of the class are created from the
    names of the command line options and are set to the command line
    values.

    Attribute names are parsed from command-line options removing or
    replacing characters that can not be used in python variables.

    Specifically:
      * "-" is replaced with "_"
      * "--" is removed.
      * "<" and ">" are removed (they are used in positional arguments)

    :param arguments: command line arguments and their values
    :type arguments: dict-line object (i.e. docopt.Dict)
    """

    def __init__(self, arguments):
        for key, value in arguments.items():
            config_key = key.replace("--", "").replace("-", "_").replace("<", "").replace(">", "")
            setattr(self, config_key, value)

    def get(self, key, default=None):
        return getattr(self, key, default)


class Core(object):
    """
    Provide some core functionalities like parsing and storing of the problem files
    """

    def __init__(self):
        self.problems = []
        self._problem_files = OrderedDict()
        self._problem_id_lock = Lock()
        self._problem_id = 0
        self._task_id_lock = Lock()
        self._task_id = 0

    @property
    def problems_to_run(self):
        """
        Return all parsed problems in file and declaration order
        """
        return [p for problems in self._problem_files.values() for p in problems]

    @property
    def next_problem_id(self):
        """
        Returns the next problem id
        """
        with self._problem_id_lock:
            self._problem_id += 1
            return self._problem_id

    @property
    def next_task_id(self):
        """
        Returns the next task id
        """
        with self._task_id_lock:
            self._task_id += 1
            return self._task_id

    def parse_problems(self, problem_files, tag_expr=None):
        """
        Parses the given problem files
        """
        for problem_file in problem_files:
            if problem_file in self._problem_files:
                continue

            problems = self.parse_problem_file(problem_file, tag_expr)
            self._problem_files[problem_file] = problems

    def parse_problem_file(self, problem_file, tag_expr=None):
        """
        Parses the given problem file

        :returns: the parsed problems
        :rtype: list
        """
        problems = ProblemFileParser(self, problem_file, tag_expr).parse()
        self.problems.extend(problems)
        return problems
