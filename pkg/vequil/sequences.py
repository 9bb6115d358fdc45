"""
This module provides the exactly evaluable sequences (nets) all
semicontinuity checks quantify over.

A SequenceSpec is indexed from n = 1. Each coordinate is a Möbius formula
(alpha*n + beta) / (gamma*n + delta) whose pole lies before n = 1, so every
coordinate is monotone and lies between its first tail term and its limit.
"""

import re
import random
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import SequenceError, DomainError, DimensionMismatchError
from .ordered_space import RationalVec, rational, format_rational, vec, check_dim
from . import symbolic
from . import codec


@dataclass(frozen=True)
class Moebius:
    """
    Represents a single coordinate formula (alpha*n + beta) / (gamma*n + delta)
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, rational(getattr(self, name)))
        if self.gamma == 0 and self.delta == 0:
            raise SequenceError("formula {0} has a zero denominator".format(self))
        if self.gamma != 0 and -self.delta / self.gamma >= 1:
            pole = format_rational(-self.delta / self.gamma)
            raise SequenceError("formula {0} has its pole at n = {1}".format(self, pole))
        if self.gamma == 0 and self.alpha != 0:
            raise SequenceError("formula {0} diverges".format(self))

    @classmethod
    def constant(cls, value):
        return cls(0, value, 0, 1)

    def term(self, n):
        return (self.alpha * n + self.beta) / (self.gamma * n + self.delta)

    def limit(self):
        if self.gamma != 0:
            return self.alpha / self.gamma
        return self.beta / self.delta

    def is_constant(self):
        return self.alpha * self.delta == self.beta * self.gamma

    def to_sympy(self):
        to = symbolic.to_sympy
        return (to(self.alpha) * symbolic.N + to(self.beta)) / (to(self.gamma) * symbolic.N + to(self.delta))

    def to_strings(self):
        return [format_rational(v) for v in (self.alpha, self.beta, self.gamma, self.delta)]

    def __str__(self):
        return "({0}n + {1})/({2}n + {3})".format(*self.to_strings())


class Net(object):
    """
    Base class of every exactly evaluable sequence
    """

    kind = None

    @property
    def dim(self):
        raise NotImplementedError()

    def term(self, n):
        """
        Returns the exact n-th term, n >= 1
        """
        raise NotImplementedError()

    def terms(self, depth):
        return [self.term(n) for n in range(1, depth + 1)]

    def symbolic(self):
        """
        Returns sympy expressions in n which describe the terms for all large n
        """
        raise NotImplementedError()

    def limit(self):
        """
        Returns the exact limit as tuple of Fractions or the strings +oo/-oo
        """
        return tuple(symbolic.limit_at_infinity(expression) for expression in self.symbolic())

    def finite_limit(self):
        """
        Returns the limit as RationalVec or None if a coordinate diverges
        """
        limit = self.limit()
        if any(isinstance(value, str) for value in limit):
            return None
        return RationalVec(limit)

    def to_json(self):
        raise NotImplementedError()

    def describe(self):
        raise NotImplementedError()

    def __str__(self):
        return self.describe()


@dataclass(frozen=True, eq=True)
class SequenceSpec(Net):
    """
    Represents a rational sequence with Möbius tail and optional explicit prefix.

    :param tuple coords: one Moebius formula per coordinate
    :param RationalVec limit: the declared limit, checked against the formulas
    :param tuple prefix: explicit first terms, replacing the formula for n <= len(prefix)
    :param bool allow_limit_terms: whether terms may equal the limit
    """

    coords: tuple
    limit_point: RationalVec
    prefix: tuple = ()
    allow_limit_terms: bool = False
    label: str = field(default=None, compare=False)

    kind = "seq"

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "prefix", tuple(self.prefix))
        check_dim(len(self.coords), self.limit_point, "declared limit")
        for term in self.prefix:
            check_dim(len(self.coords), term, "prefix term")

        formula_limit = RationalVec(tuple(c.limit() for c in self.coords))
        if formula_limit != self.limit_point:
            raise SequenceError(
                "sequence {0} is declared to tend to {1} but tends to {2}".format(
                    self.describe(), self.limit_point, formula_limit
                )
            )

        if not self.allow_limit_terms:
            if any(term == self.limit_point for term in self.prefix):
                raise SequenceError("a prefix term of {0} equals its limit".format(self.describe()))
            if all(c.is_constant() for c in self.coords):
                raise SequenceError("the tail of {0} equals its limit".format(self.describe()))

    @classmethod
    def toward(cls, x0, direction, label=None):
        """
        Returns the sequence x_n = x0 + direction / (n + 1)
        """
        check_dim(x0.dim, direction, "direction")
        coords = tuple(Moebius(c, c + d, 1, 1) for c, d in zip(x0, direction))
        return cls(coords, x0, label=label)

    @classmethod
    def constant(cls, point, label=None):
        return cls(tuple(Moebius.constant(c) for c in point), point, allow_limit_terms=True, label=label)

    @classmethod
    def from_formulas(cls, coords, prefix=(), allow_limit_terms=False, label=None):
        """
        Returns the sequence of the given formulas with its computed limit
        """
        coords = tuple(coords)
        limit = RationalVec(tuple(c.limit() for c in coords))
        return cls(coords, limit, prefix, allow_limit_terms, label)

    @property
    def dim(self):
        return len(self.coords)

    def term(self, n):
        if n < 1:
            raise SequenceError("sequences are indexed from n = 1, got {0}".format(n))
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        return RationalVec(tuple(c.term(n) for c in self.coords))

    def symbolic(self):
        return [c.to_sympy() for c in self.coords]

    def limit(self):
        return tuple(self.limit_point)

    def is_constant(self):
        return not self.prefix and all(c.is_constant() for c in self.coords)

    def validate_in(self, domain):
        """
        Checks that every term lies in the domain box.

        Tail coordinates are monotone, so the first tail term and the limit
        bound the whole tail.
        """
        for term in self.prefix:
            if not domain.contains(term):
                raise DomainError(term, domain)
        for point in (self.term(len(self.prefix) + 1), self.limit_point):
            if not domain.contains(point):
                raise DomainError(point, domain)

    def to_json(self):
        return {
            "type": self.kind,
            "coords": [c.to_strings() for c in self.coords],
            "limit": codec.vec_to_json(self.limit_point),
            "prefix": [codec.vec_to_json(p) for p in self.prefix],
            "allow_limit_terms": self.allow_limit_terms,
        }

    def to_text(self):
        if self.is_constant():
            return "const({0})".format(", ".join(self.limit_point.to_strings()))
        return "seq[{0}]".format("; ".join(",".join(c.to_strings()) for c in self.coords))

    def describe(self):
        if self.label:
            return "{0} {1}".format(self.label, self.to_text())
        return self.to_text()


@dataclass(frozen=True)
class ImageNet(Net):
    """
    Represents the image of nets under a map, e.g. h(x_n) or g(x0, z_n).

    Every argument is either a Net or a fixed RationalVec.
    """

    F: object
    args: tuple

    kind = "image"

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        expected = 2 if self.F.is_bifunction else 1
        if len(self.args) != expected:
            raise ValueError("map '{0}' takes {1} argument(s)".format(self.F.label, expected))

    @property
    def dim(self):
        return self.F.codomain_dim

    def term(self, n):
        values = [a.term(n) if isinstance(a, Net) else a for a in self.args]
        return self.F(*values)

    def symbolic(self):
        return eventual_expressions(self.F, self.args)

    def to_json(self):
        return {
            "type": self.kind,
            "map": codec.map_to_json(self.F),
            "args": [
                a.to_json() if isinstance(a, Net) else {"type": "point", "value": codec.vec_to_json(a)}
                for a in self.args
            ],
        }

    def describe(self):
        args = ", ".join(a.describe() if isinstance(a, Net) else str(a) for a in self.args)
        return "{0}({1})".format(self.F.label, args)


@dataclass(frozen=True)
class SumNet(Net):
    """
    Represents the termwise sum of two nets
    """

    left: Net
    right: Net

    kind = "sum"

    def __post_init__(self):
        if self.left.dim != self.right.dim:
            raise DimensionMismatchError(self.left.dim, self.right.dim, "summand")

    @property
    def dim(self):
        return self.left.dim

    def term(self, n):
        return self.left.term(n) + self.right.term(n)

    def symbolic(self):
        return [a + b for a, b in zip(self.left.symbolic(), self.right.symbolic())]

    def to_json(self):
        return {"type": self.kind, "left": self.left.to_json(), "right": self.right.to_json()}

    def describe(self):
        return "{0} + {1}".format(self.left.describe(), self.right.describe())


@dataclass(frozen=True)
class WitnessSpec:
    """
    Represents a witness net z_n over Z together with its declared limit z
    """

    net: Net
    limit_point: RationalVec

    def __post_init__(self):
        check_dim(self.net.dim, self.limit_point, "witness limit")

    def validate(self):
        """
        Checks the declared limit against the symbolic limit of the net
        """
        try:
            limit = self.net.limit()
        except symbolic.UndecidedLimit as e:
            raise SequenceError("cannot decide the limit of witness {0}: {1}".format(self.net, e))
        if tuple(limit) != tuple(self.limit_point):
            raise SequenceError(
                "witness {0} is declared to tend to {1} but tends to ({2})".format(
                    self.net, self.limit_point, ", ".join(format_limit(v) for v in limit)
                )
            )

    def term(self, n):
        return self.net.term(n)

    def to_json(self):
        return {"net": self.net.to_json(), "limit": codec.vec_to_json(self.limit_point)}

    def describe(self):
        return "{0} -> {1}".format(self.net.describe(), self.limit_point)


def format_limit(value):
    if isinstance(value, str):
        return value
    return format_rational(value)


def net_from_json(data):
    """
    Rebuilds a net from its JSON representation
    """
    kind = data.get("type")
    if kind == SequenceSpec.kind:
        return SequenceSpec(
            tuple(Moebius(*c) for c in data["coords"]),
            codec.vec_from_json(data["limit"]),
            tuple(codec.vec_from_json(p) for p in data.get("prefix", ())),
            data.get("allow_limit_terms", False),
        )
    if kind == ImageNet.kind:
        args = tuple(
            codec.vec_from_json(a["value"]) if a.get("type") == "point" else net_from_json(a) for a in data["args"]
        )
        return ImageNet(codec.map_from_json(data["map"]), args)
    if kind == SumNet.kind:
        return SumNet(net_from_json(data["left"]), net_from_json(data["right"]))
    raise SequenceError("unknown net type '{0}'".format(kind))


def witness_from_json(data):
    return WitnessSpec(net_from_json(data["net"]), codec.vec_from_json(data["limit"]))


SEQ_RE = re.compile(r"^seq\[(?P<coords>[^\]]*)\]$")
CONST_RE = re.compile(r"^const\((?P<value>[^)]*)\)$")


def parse_net(text, names=None):
    """
    Parses a net literal: ``seq[a,b,c,d; ...]`` or ``const(v1, ...)``.

    ``const`` accepts a name from ``names`` (e.g. ``const(y)``) as well.
    """
    text = text.strip()
    names = names or {}
    match = SEQ_RE.match(text)
    if match:
        coords = []
        for part in match.group("coords").split(";"):
            values = [v.strip() for v in part.split(",")]
            if len(values) != 4:
                raise SequenceError("a sequence coordinate needs four numbers a,b,c,d, got '{0}'".format(part.strip()))
            try:
                coords.append(Moebius(*values))
            except (ValueError, ZeroDivisionError) as e:
                raise SequenceError("malformed sequence coordinate '{0}': {1}".format(part.strip(), e))
        return SequenceSpec.from_formulas(coords)

    match = CONST_RE.match(text)
    if match:
        value = match.group("value").strip()
        if value in names:
            return SequenceSpec.constant(names[value])
        try:
            return SequenceSpec.constant(vec([v.strip() for v in value.split(",")]))
        except (ValueError, ZeroDivisionError) as e:
            raise SequenceError("malformed constant net '{0}': {1}".format(text, e))
    raise SequenceError("malformed net literal '{0}'".format(text))


def _env(F, args):
    env = {}
    for prefix, arg in zip(("x", "y"), args):
        values = arg.symbolic() if isinstance(arg, Net) else [symbolic.to_sympy(c) for c in arg]
        for index, value in enumerate(values):
            env["{0}{1}".format(prefix, index + 1)] = value
    return env


def eventual_piece(F, args):
    """
    Returns the index of the piece the arguments eventually stay in
    """
    env = _env(F, args)
    matches = [index for index, piece in enumerate(F.pieces) if piece.region.holds_eventually(env)]
    if len(matches) != 1:
        raise symbolic.UndecidedLimit(
            "the arguments of '{0}' eventually match {1} pieces".format(F.label, len(matches))
        )
    return matches[0]


def eventual_expressions(F, args):
    """
    Returns the sympy expressions of F along the given nets for all large n
    """
    env = _env(F, args)
    piece = F.pieces[eventual_piece(F, args)]
    return [component.to_sympy(env) for component in piece.components]


def map_limit_along(F, *args):
    """
    Returns the exact limit of F along the given nets.

    Coordinates are Fractions or the strings +oo/-oo.
    """
    return ImageNet(F, args).limit()


def _directions(x0, domain, count, depth):
    """
    Yields sampled directions d with x0 + d in the domain: scales 1, 1/2, 1/4, ...
    along every axis and every diagonal, positive before negative.
    """
    dim = x0.dim
    found = []
    for level in range(depth + 1):
        scale = Fraction(1, 2 ** level)
        candidates = []
        for axis in range(dim):
            for sign in (1, -1):
                candidates.append(RationalVec(tuple(Fraction(sign) * scale if i == axis else 0 for i in range(dim))))
        if dim > 1:
            for signs in itertools.product((1, -1), repeat=dim):
                candidates.append(RationalVec(tuple(s * scale for s in signs)))
        for direction in candidates:
            if domain.contains(x0 + direction) and direction not in found:
                found.append(direction)
                if len(found) == count:
                    return found
    return found


def generate_sequences(x0, domain, budget):
    """
    Returns the deterministic family of sequences approaching x0.

    The family consists of the sampled directions x0 + d/(n+1), the one-sided
    axis approaches from the box boundary and the segments toward every box vertex.
    """
    domain.ensure_contains(x0)
    if budget.directions == 0:
        return []

    sequences = []
    seen = set()

    def add(direction, label):
        if direction.is_zero():
            return
        sequence = SequenceSpec.toward(x0, direction, label=label)
        if sequence.coords not in seen:
            seen.add(sequence.coords)
            sequences.append(sequence)

    for direction in _directions(x0, domain, budget.directions, budget.depth):
        add(direction, "direction {0}".format(direction))

    for axis in range(x0.dim):
        for sign, bound in ((1, domain.upper[axis]), (-1, domain.lower[axis])):
            room = bound - x0[axis]
            direction = RationalVec(tuple(room if i == axis else 0 for i in range(x0.dim)))
            add(direction, "axis {0}{1}".format("+" if sign > 0 else "-", axis + 1))

    for vertex in domain.vertices():
        add(vertex - x0, "segment to {0}".format(vertex))

    if budget.seed is not None:
        for direction in _random_directions(x0, domain, budget.directions, budget.seed):
            add(direction, "random direction {0}".format(direction))

    return sequences


def _random_directions(x0, domain, count, seed):
    """
    Returns up to ``count`` reproducible random directions d with x0 + d in the domain.

    Coordinates are multiples of 1/8 of the box width, mirrored or halved until they fit.
    """
    rng = random.Random(seed)
    directions = []
    for _ in range(count):
        coords = []
        for axis in range(x0.dim):
            lower, upper = domain.lower[axis], domain.upper[axis]
            value = Fraction(rng.randint(-8, 8), 8) * (upper - lower)
            if not lower <= x0[axis] + value <= upper:
                value = -value
            while not lower <= x0[axis] + value <= upper:
                value /= 2
            coords.append(value)
        direction = RationalVec(tuple(coords))
        if not direction.is_zero():
            directions.append(direction)
    return directions
