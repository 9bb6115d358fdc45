"""
This module provides a class to represent a Task of a problem file
"""

import re
from dataclasses import dataclass, field

from .model import Model
from .exceptions import VequilError, InputError, SequenceError
from .customtyperegistry import parse_vector
from .conditions import ConditionWitness, ConditionId
from .ordered_space import rational
from .sequences import parse_net, SEQ_RE, CONST_RE
from .verdict import Verdict, Status
from . import codec
from . import utils

#: keys a task accepts below its ``Task:`` line
TASK_KEYS = ("expect", "value", "anchor", "budget", "t-grid", "condition", "swap", "on-sum")

#: budget keys a problem or a task may override
BUDGET_KEYS = ("directions", "depth", "radius", "density", "kgrid", "kradius", "seed")

BOOLEAN_VALUES = {"yes": True, "true": True, "no": False, "false": False}

EXPECT_RE = re.compile(
    r"^(?:(?P<negate>not)\s+)?(?P<status>holds|fails|consistent)$"
    r"|^(?P<truth>true|false)$"
    r"|^(?P<membership>contains|excludes)\s+(?P<point>.+)$"
)

STATUS_NAMES = {"holds": Status.HOLDS, "fails": Status.FAILS, "consistent": Status.CONSISTENT}


class Expectation(object):
    """
    Represents the ``expect:`` key of a task
    """

    def __init__(self, text):
        self.text = " ".join(text.split())
        match = EXPECT_RE.match(self.text)
        if not match:
            raise ValueError("unknown expectation '{0}'".format(self.text))

        self.status = STATUS_NAMES.get(match.group("status"))
        self.negate = bool(match.group("negate"))
        self.truth = None if match.group("truth") is None else match.group("truth") == "true"
        self.membership = match.group("membership")
        self.point = parse_vector(match.group("point")) if self.membership else None

    def check(self, result):
        """
        Checks the given task result against this expectation

        :returns: None or the reason of the mismatch
        """
        if self.status is not None:
            if not isinstance(result, Verdict):
                return "expected a verdict but got {0}".format(describe_type(result))
            if (result.status is self.status) == self.negate:
                return "expected {0} but got {1}".format(self.text, result.status)
            return None

        if self.truth is not None:
            actual = result.value if isinstance(result, ValueResult) else result
            if not isinstance(actual, bool):
                return "expected a truth value but got {0}".format(describe_type(result))
            if actual != self.truth:
                return "expected {0} but got {1}".format(self.text, str(actual).lower())
            return None

        payload = result.payload if isinstance(result, ValueResult) else result
        try:
            member = self.point in payload
        except TypeError:
            return "expected a point set but got {0}".format(describe_type(result))
        if member != (self.membership == "contains"):
            return "expected {0} but it {1}".format(self.text, "does" if member else "does not")
        return None

    def __str__(self):
        return self.text


def describe_type(result):
    if isinstance(result, ValueResult):
        return "a {0} value".format(result.kind)
    return "a {0}".format(type(result).__name__)


@dataclass(frozen=True)
class ValueResult:
    """
    Represents a task result which is a plain value: a vector, a truth value or a point set
    """

    kind: str
    value: object
    payload: object = field(default=None, compare=False)
    notes: tuple = ()

    def summary(self):
        if isinstance(self.value, bool):
            text = str(self.value).lower()
        elif hasattr(self.value, "points"):
            text = "{0} grid points".format(len(self.value.points()))
        else:
            text = str(self.value)
        if self.notes:
            return "{0} ({1})".format(text, "; ".join(self.notes))
        return text

    def to_json(self):
        if hasattr(self.value, "to_strings"):
            value = codec.vec_to_json(self.value)
        elif hasattr(self.value, "to_json"):
            value = self.value.to_json()
        else:
            value = self.value
        return {"type": "value", "kind": self.kind, "value": value, "notes": list(self.notes)}


def parse_boolean(text):
    try:
        return BOOLEAN_VALUES[text.strip().lower()]
    except KeyError:
        raise ValueError("expected yes or no, got '{0}'".format(text.strip()))


def validate_key(key, text):
    """
    Validates the text of a task key

    :raises ValueError: if the text is malformed
    """
    if key == "expect":
        Expectation(text)
    elif key == "value":
        parse_vector(text)
    elif key == "budget":
        for name, value in utils.parse_key_values(text).items():
            if name not in BUDGET_KEYS:
                raise ValueError("unknown budget key '{0}'".format(name))
            int(value)
    elif key == "t-grid":
        for value in text.replace(",", " ").split():
            if not 0 < rational(value) < 1:
                raise ValueError("t-grid values must lie in ]0, 1[, got '{0}'".format(value))
    elif key == "condition":
        ConditionId.from_name(text.strip())
    elif key in ("swap", "on-sum"):
        parse_boolean(text)
    elif key.startswith("net "):
        if not (SEQ_RE.match(text.strip()) or CONST_RE.match(text.strip())):
            raise ValueError("malformed net literal '{0}'".format(text.strip()))


class Task(Model):
    """
    Represents a task
    """

    class State(object):
        """
        Represents the task state
        """

        UNTESTED = "untested"
        SKIPPED = "skipped"
        PASSED = "passed"
        FAILED = "failed"

    def __init__(self, id, sentence, path, line, parent, tags=None):
        super(Task, self).__init__(id, "Task", sentence, path, line, parent, tags)
        self.keys = {}
        self.nets = {}
        self.definition_func = None
        self.argument_match = None
        self.verb = None
        self.state = Task.State.UNTESTED
        self.result = None
        self.failure = None
        self.mismatch = None

    @property
    def problem(self):
        return self.parent

    @property
    def expectation(self):
        if "expect" not in self.keys:
            return None
        return Expectation(self.keys["expect"])

    @property
    def anchor(self):
        return self.keys.get("anchor")

    @property
    def is_assertion(self):
        """
        Returns whether a Fails result or a mismatch marks this task as failed
        """
        return "expect" in self.keys or "value" in self.keys or "assert" in self.tag_names

    @property
    def budget(self):
        """
        Returns the sampling budget of the problem with the task's own overrides
        """
        overrides = {}
        if "budget" in self.keys:
            overrides = {k: int(v) for k, v in utils.parse_key_values(self.keys["budget"]).items()}
        budget = self.problem.budget.override(**overrides)
        return budget.override(**self.problem.cli_overrides)

    def flag(self, key):
        return parse_boolean(self.keys[key]) if key in self.keys else False

    def set_key(self, key, text):
        """
        Stores the text of a task key
        """
        if key.startswith("net "):
            self.nets[key[4:].strip()] = text.strip()
        else:
            self.keys[key] = text.strip()

    def net(self, name, names=None):
        """
        Returns the net declared with ``net <name>:``
        """
        if name not in self.nets:
            raise SequenceError("task '{0}' declares no net '{1}'".format(self.sentence, name))
        return parse_net(self.nets[name], names)

    def witness(self, names=None):
        """
        Returns a ConditionWitness of all declared nets or None if there are none
        """
        if not self.nets:
            return None
        return ConditionWitness.of(**{name: self.net(name, names) for name in self.nets})

    def signature(self):
        return (
            self.sentence,
            tuple(str(t) for t in self.tags),
            tuple(sorted(self.keys.items())),
            tuple(sorted(self.nets.items())),
        )

    def _validate(self):
        """
        Checks if the task is valid to run or not
        """
        if not self.definition_func or not callable(self.definition_func):
            raise VequilError("The task '{0}' does not have a task definition".format(self.sentence))

    def run(self):
        """
        Runs the task
        """
        self._validate()
        _, kwargs = self.argument_match.evaluate()

        try:
            self.result = self.definition_func(self, **kwargs)  # pylint: disable=not-callable
        except Exception as e:  # pylint: disable=broad-except
            self.state = Task.State.FAILED
            self.failure = utils.Failure(e)
            return self.state

        self.mismatch = self.check_expectations()
        self.state = Task.State.FAILED if self.mismatch else Task.State.PASSED
        return self.state

    def check_expectations(self):
        """
        Compares the result with the ``expect:`` and ``value:`` keys

        :returns: None or the reason of the first mismatch
        """
        expectation = self.expectation
        if expectation is not None:
            mismatch = expectation.check(self.result)
            if mismatch:
                return mismatch

        if "value" in self.keys:
            expected = parse_vector(self.keys["value"])
            actual = getattr(self.result, "value", None)
            if actual != expected:
                return "expected value {0} but got {1}".format(expected, actual)

        if expectation is None and self.is_assertion and isinstance(self.result, Verdict) and self.result.is_fails:
            return "assertion task returned Fails"
        return None

    @property
    def returncode(self):
        """
        Returns the exit status this task contributes
        """
        if self.state != Task.State.FAILED:
            return 0
        if self.failure is not None and isinstance(self.failure.exception, InputError):
            return 2
        return 1

    def skip(self):
        """
        Skips the task
        """
        self.state = Task.State.SKIPPED
