"""
This module provides the registry of the argument types used in task sentences
"""

import re
from collections import namedtuple

from singleton import singleton

from .exceptions import VequilError
from .ordered_space import RationalVec, rational
from .conditions import ConditionId
from .equilibrium import NOT_NEG_INT, IN_CONE
from .semicontinuity import NOTIONS
from .utils import split_top_level

RATIONAL_PATTERN = r"-?\d+(?:/\d+)?"
VECTOR_PATTERN = r"\([^()]*\)|" + RATIONAL_PATTERN
BOX_PATTERN = r"\[[^\]]*\](?:\s*x\s*\[[^\]]*\])*(?:\s+grid(?:\s+\d+)+)?"

BOX_RE = re.compile(r"^\s*(?P<boxes>\[[^\]]*\](?:\s*x\s*\[[^\]]*\])*)\s*(?:grid(?P<grid>(?:\s+\d+)+))?\s*$")

#: a box literal; ``grid`` is None if the literal does not fix the grid counts
BoxLiteral = namedtuple("BoxLiteral", ["lower", "upper", "grid"])


@singleton()
class CustomTypeRegistry(object):
    """
    Registry for all custom argument expressions
    """

    def __init__(self):
        self.custom_types = {}

    def register(self, name, func):
        """
        Registers a custom type
        """
        if name in self.custom_types:
            raise VequilError("Cannot register custom type with name {0} because it already exists".format(name))

        self.custom_types[name] = func


def custom_type(name, pattern):
    """
    Decorator for custom type pattern
    """

    def _decorator(func):
        """
        Actual decorator
        """
        func.pattern = pattern
        CustomTypeRegistry().register(name, func)

        return func

    return _decorator


def parse_vector(text):
    """
    Parses a vector literal ``(a, b, ...)``; a bare rational is a one dimensional vector
    """
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts = [part.strip() for part in text.split(",")]
    if not all(parts):
        raise ValueError("malformed vector literal '({0})'".format(text))
    return RationalVec(tuple(rational(part) for part in parts))


def parse_vector_list(text):
    """
    Parses whitespace or comma separated vector literals
    """
    vectors = []
    for part in split_top_level(text.strip()):
        vectors.extend(parse_vector(v) for v in re.findall(VECTOR_PATTERN, part))
    if not vectors:
        raise ValueError("expected at least one vector literal, got '{0}'".format(text.strip()))
    return vectors


def parse_box(text):
    """
    Parses a box literal ``[lo, hi] x [lo, hi] grid n m``
    """
    match = BOX_RE.match(text)
    if not match:
        raise ValueError("malformed box literal '{0}'".format(text.strip()))
    lower, upper = [], []
    for interval in re.findall(r"\[([^\]]*)\]", match.group("boxes")):
        bounds = [b.strip() for b in interval.split(",")]
        if len(bounds) != 2 or not all(bounds):
            raise ValueError("an interval needs two bounds, got '[{0}]'".format(interval))
        lower.append(rational(bounds[0]))
        upper.append(rational(bounds[1]))
    grid = tuple(int(c) for c in match.group("grid").split()) if match.group("grid") else None
    return BoxLiteral(RationalVec(tuple(lower)), RationalVec(tuple(upper)), grid)


@custom_type("Rational", RATIONAL_PATTERN)
def rational_type(text):
    """
    Custom type to parse an exact rational like ``-3/2``
    """
    return rational(text)


@custom_type("Vector", VECTOR_PATTERN)
def vector_type(text):
    """
    Custom type to parse a point of the domain or of the ordered space
    """
    return parse_vector(text)


@custom_type("Name", r"[A-Za-z_][A-Za-z0-9_]*")
def name_type(text):
    return text


@custom_type("Notion", "|".join(re.escape(n) for n in sorted(NOTIONS)))
def notion_type(text):
    return text


@custom_type("Condition", r"[ABab][1-6]")
def condition_type(text):
    """
    Custom type to parse a transfer condition id like ``B1``
    """
    return ConditionId.from_name(text)


@custom_type("Mode", "{0}|{1}".format(re.escape(NOT_NEG_INT), re.escape(IN_CONE)))
def mode_type(text):
    return text


@custom_type("Box", BOX_PATTERN)
def box_type(text):
    """
    Custom type to parse a box literal
    """
    return parse_box(text)
