"""
Providing vequil core functionality like the problem file Runner.
"""

from .task import Task


class Runner(object):
    """
    Represents a class which is able to run problems.
    """

    def handle_exit(func):  # pylint: disable=no-self-argument
        """
        Handles an runner exit
        """

        def _decorator(self, *args, **kwargs):
            """
            Actual decorator
            """
            if self._required_exit:  # pylint: disable=protected-access
                return 1

            return func(self, *args, **kwargs)  # pylint: disable=not-callable

        return _decorator

    def call_hooks(model):  # pylint: disable=no-self-argument
        """
        Call hooks for a specific model
        """

        def _decorator(func):
            """
            The actual decorator
            """

            def _wrapper(self, model_instance, *args, **kwargs):
                """
                Decorator wrapper
                """
                self._hooks.call(
                    "before", model, True, model_instance, *args, **kwargs
                )  # pylint: disable=protected-access
                try:
                    return func(self, model_instance, *args, **kwargs)
                finally:
                    self._hooks.call(
                        "after", model, False, model_instance, *args, **kwargs
                    )  # pylint: disable=protected-access

            return _wrapper

        return _decorator

    def __init__(self, hooks, early_exit=False, verb=None):
        self._hooks = hooks
        self._early_exit = early_exit
        self._required_exit = False
        self._verb = verb

    @handle_exit
    @call_hooks("all")
    def start(self, problems, marker):
        """
        Start running problems

        :param list problems: the problems to run
        :param string marker: the marker for this run

        :returns: the exit status: 2 for input errors, 1 for failed tasks, 0 otherwise
        """
        returncode = 0
        for problem in problems:
            returncode = max(returncode, self.run_problem(problem))
        return returncode

    @handle_exit
    @call_hooks("each_problem")
    def run_problem(self, problem):
        """
        Runs the given problem

        :param Problem problem: the problem to run
        """
        returncode = 0
        for task in problem.tasks:
            if self._required_exit or (self._verb and task.verb != self._verb):
                self.skip_task(task)
                continue

            returncode = max(returncode, self.run_task(task))

            if task.state == Task.State.FAILED and self._early_exit:
                self.exit()
        return returncode

    @handle_exit
    @call_hooks("each_task")
    def run_task(self, task):
        """
        Runs the given task

        :param Task task: the task to run
        """
        task.run()
        return task.returncode

    def skip_task(self, task):
        """
        Skips the given task
        """
        self._hooks.call("before", "each_task", True, task)
        task.skip()
        self._hooks.call("after", "each_task", False, task)

    def exit(self):
        """
        Exits the runner
        """
        self._required_exit = True
