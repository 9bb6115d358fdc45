"""
This module provides a registry for the hooks around a run, its problems and its tasks
"""

from collections import namedtuple

from singleton import singleton
import tagexpressions

from . import utils
from .exceptions import HookError

#: the models a hook can wrap
HOOK_MODELS = ("all", "each_problem", "each_task")

#: a registered hook; ``matches`` decides with the tag names of a model
RegisteredHook = namedtuple("RegisteredHook", ["order", "matches", "func"])


def _always(_):
    return True


def tag_filter(on_tags):
    """
    Returns a predicate over tag names for the given tag expression
    """
    if not on_tags:
        return _always
    return tagexpressions.parse(on_tags).evaluate


@singleton()
class HookRegistry(object):
    """
    Represents an object with all registered hooks
    """

    DEFAULT_HOOK_ORDER = 100

    def __init__(self):
        self._hooks = {}
        self.reset()

    @property
    def hooks(self):
        """
        Returns all registered hooks
        """
        return self._hooks

    class Hook(object):
        """
        Provides the hook decorators of one point in time:

            @before.all
            @before.each_problem(order=1)
            @after.each_task(on_tags="assert and not slow")
        """

        def __init__(self, when):
            self._when = when

        def __getattr__(self, what):
            if what not in HOOK_MODELS:
                raise AttributeError("There is no hook model '{0}'".format(what))

            def _decorator(*args, **kwargs):
                if len(args) == 1 and not kwargs and callable(args[0]):
                    HookRegistry().register(self._when, what, args[0])
                    return args[0]

                def _register(func):
                    HookRegistry().register(self._when, what, func, kwargs.get("order"), kwargs.get("on_tags"))
                    return func

                return _register

            _decorator.__name__ = what
            return _decorator

    def register(self, when, what, func, order=None, on_tags=None):
        """
        Registers a function as a hook

        :param str on_tags: tag expression a model has to match to run the hook
        """
        order = self.DEFAULT_HOOK_ORDER if order is None else order
        self._hooks[what][when].append(RegisteredHook(order, tag_filter(on_tags), func))

    def reset(self):
        """
        Resets all registered hooks
        """
        self._hooks = {what: {"before": [], "after": []} for what in HOOK_MODELS}

    @staticmethod
    def _has_to_run(hook, model):
        # a list of problems runs the hook if one of them matches
        if isinstance(model, list):
            return not model or any(hook.matches(m.tag_names) for m in model)
        return hook.matches(model.tag_names)

    def call(self, when, what, ascending, model, *args, **kwargs):
        """
        Calls the hooks registered for the given point in time and model

        :param bool ascending: before hooks run by ascending, after hooks by descending order
        :raises HookError: if a hook raises
        """
        for hook in sorted(self._hooks[what][when], key=lambda h: h.order, reverse=not ascending):
            if not self._has_to_run(hook, model):
                continue

            try:
                hook.func(model, *args, **kwargs)
            except Exception as e:
                raise HookError(hook.func, utils.Failure(e))


HookRegistry()
before = HookRegistry.Hook("before")  # pylint: disable=invalid-name
after = HookRegistry.Hook("after")  # pylint: disable=invalid-name
