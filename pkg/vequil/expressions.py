"""
This module provides the expression trees and regions piecewise maps are made of.

Expressions range over the variables x1..xm and y1..ym and support
add, sub, mul, neg, constants, abs and the reciprocal of abs (1/|t|).
"""

import operator
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .exceptions import PoleError
from .ordered_space import rational, format_rational
from . import symbolic


class Expr(object):
    """
    Base class for all expression nodes
    """

    def evaluate(self, env):
        """
        Evaluates the expression exactly.

        :param dict env: maps variable names like ``x1`` to Fractions
        """
        raise NotImplementedError()

    def to_sympy(self, env):
        """
        Builds the sympy expression where every variable is replaced by ``env[name]``
        """
        raise NotImplementedError()

    def children(self):
        return ()

    def variables(self):
        names = set()
        for child in self.children():
            names.update(child.variables())
        return frozenset(names)

    def substitute(self, mapping):
        """
        Replaces variables by expressions and folds constant subtrees
        """
        raise NotImplementedError()

    def degree(self, kind):
        """
        Returns the polynomial degree in the variables of the given kind (``x`` or ``y``).

        None means the expression is not polynomial in these variables.
        """
        raise NotImplementedError()

    def is_piecewise_linear(self):
        """
        Checks if the expression is affine or abs-affine in all variables
        """
        raise NotImplementedError()

    def poles(self):
        """
        Yields the arguments of all reciprocal nodes
        """
        for child in self.children():
            yield from child.poles()

    def has_pole_at(self, env):
        return any(arg.evaluate_unguarded(env) == 0 for arg in self.poles())

    def evaluate_unguarded(self, env):
        return self.evaluate(env)

    def depends_on(self, kind):
        return any(name.startswith(kind) for name in self.variables())

    def to_text(self):
        raise NotImplementedError()

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class Const(Expr):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", rational(self.value))

    def evaluate(self, env):
        return self.value

    def to_sympy(self, env):
        return symbolic.to_sympy(self.value)

    def substitute(self, mapping):
        return self

    def degree(self, kind):
        return 0

    def is_piecewise_linear(self):
        return True

    def to_text(self):
        return format_rational(self.value)


@dataclass(frozen=True)
class Var(Expr):
    kind: str
    index: int = 1

    @property
    def name(self):
        return "{0}{1}".format(self.kind, self.index)

    def variables(self):
        return frozenset([self.name])

    def evaluate(self, env):
        return env[self.name]

    def to_sympy(self, env):
        return env[self.name]

    def substitute(self, mapping):
        return mapping.get(self.name, self)

    def degree(self, kind):
        return 1 if self.kind == kind else 0

    def is_piecewise_linear(self):
        return True

    def to_text(self):
        if self.index == 1:
            return self.kind
        return self.name


def fold(node):
    """
    Replaces a node whose children are all constants by its value
    """
    if all(isinstance(child, Const) for child in node.children()):
        try:
            return Const(node.evaluate({}))
        except PoleError:
            return node
    return node


@dataclass(frozen=True)
class BinaryOp(Expr):
    left: Expr
    right: Expr

    OPNAME = None
    FUNC = None

    def children(self):
        return (self.left, self.right)

    def evaluate(self, env):
        return self.FUNC(self.left.evaluate(env), self.right.evaluate(env))

    def evaluate_unguarded(self, env):
        return self.FUNC(self.left.evaluate_unguarded(env), self.right.evaluate_unguarded(env))

    def to_sympy(self, env):
        return self.FUNC(self.left.to_sympy(env), self.right.to_sympy(env))

    def substitute(self, mapping):
        return fold(type(self)(self.left.substitute(mapping), self.right.substitute(mapping)))

    def to_text(self):
        return "({0} {1} {2})".format(self.OPNAME, self.left.to_text(), self.right.to_text())


class Add(BinaryOp):
    OPNAME = "add"
    FUNC = staticmethod(operator.add)

    def degree(self, kind):
        left, right = self.left.degree(kind), self.right.degree(kind)
        if left is None or right is None:
            return None
        return max(left, right)

    def is_piecewise_linear(self):
        return self.left.is_piecewise_linear() and self.right.is_piecewise_linear()


class Sub(Add):
    OPNAME = "sub"
    FUNC = staticmethod(operator.sub)


class Mul(BinaryOp):
    OPNAME = "mul"
    FUNC = staticmethod(operator.mul)

    def degree(self, kind):
        left, right = self.left.degree(kind), self.right.degree(kind)
        if left is None or right is None:
            return None
        return left + right

    def is_piecewise_linear(self):
        if not (self.left.is_piecewise_linear() and self.right.is_piecewise_linear()):
            return False
        return not self.left.variables() or not self.right.variables()


@dataclass(frozen=True)
class UnaryOp(Expr):
    arg: Expr

    OPNAME = None

    def children(self):
        return (self.arg,)

    def substitute(self, mapping):
        return fold(type(self)(self.arg.substitute(mapping)))

    def to_text(self):
        return "({0} {1})".format(self.OPNAME, self.arg.to_text())


class Neg(UnaryOp):
    OPNAME = "neg"

    def evaluate(self, env):
        return -self.arg.evaluate(env)

    def evaluate_unguarded(self, env):
        return -self.arg.evaluate_unguarded(env)

    def to_sympy(self, env):
        return -self.arg.to_sympy(env)

    def degree(self, kind):
        return self.arg.degree(kind)

    def is_piecewise_linear(self):
        return self.arg.is_piecewise_linear()


class Abs(UnaryOp):
    OPNAME = "abs"

    def evaluate(self, env):
        return abs(self.arg.evaluate(env))

    def evaluate_unguarded(self, env):
        return abs(self.arg.evaluate_unguarded(env))

    def to_sympy(self, env):
        return sympy.Abs(self.arg.to_sympy(env))

    def degree(self, kind):
        if self.arg.degree(kind) == 0:
            return 0
        return None

    def is_piecewise_linear(self):
        return self.arg.is_piecewise_linear()


class RecipAbs(UnaryOp):
    OPNAME = "recip-abs"

    def evaluate(self, env):
        value = self.arg.evaluate(env)
        if value == 0:
            raise PoleError(self.to_text(), env)
        return 1 / abs(value)

    def evaluate_unguarded(self, env):
        value = self.arg.evaluate_unguarded(env)
        return 0 if value == 0 else 1 / abs(value)

    def to_sympy(self, env):
        return 1 / sympy.Abs(self.arg.to_sympy(env))

    def poles(self):
        yield self.arg
        yield from self.arg.poles()

    def degree(self, kind):
        if self.arg.degree(kind) == 0:
            return 0
        return None

    def is_piecewise_linear(self):
        return False


OPERATORS = {"add": Add, "sub": Sub, "mul": Mul, "neg": Neg, "abs": Abs, "recip-abs": RecipAbs}

COMPARATORS = {
    "<": operator.lt,
    "<=": operator.le,
    "=": operator.eq,
    ">=": operator.ge,
    ">": operator.gt,
}


@dataclass(frozen=True)
class Comparison:
    """
    Represents a comparison ``lhs op rhs`` with a constant right hand side
    """

    lhs: Expr
    op: str
    rhs: Fraction

    def __post_init__(self):
        if self.op not in COMPARATORS:
            raise ValueError("unknown comparison operator '{0}'".format(self.op))
        if not self.lhs.is_piecewise_linear():
            raise ValueError("region comparison '{0}' is not affine or abs-affine".format(self.lhs))
        object.__setattr__(self, "rhs", rational(self.rhs))

    def holds(self, env):
        return COMPARATORS[self.op](self.lhs.evaluate(env), self.rhs)

    def substitute(self, mapping):
        return Comparison(self.lhs.substitute(mapping), self.op, self.rhs)

    def is_constant(self):
        return isinstance(self.lhs, Const)

    def holds_eventually(self, env):
        """
        Decides the comparison for large n where ``env`` maps variables to sympy expressions in n
        """
        sign = symbolic.eventual_sign(self.lhs.to_sympy(env) - symbolic.to_sympy(self.rhs))
        return COMPARATORS[self.op](sign, 0)

    def relaxed_holds(self, env):
        """
        Evaluates the closure of the comparison (strict comparisons become non-strict)
        """
        op = {"<": "<=", ">": ">="}.get(self.op, self.op)
        return COMPARATORS[op](self.lhs.evaluate(env), self.rhs)

    def to_text(self):
        return "{0} {1} {2}".format(self.lhs.to_text(), self.op, format_rational(self.rhs))

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class Region:
    """
    Represents a conjunction of comparisons
    """

    comparisons: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "comparisons", tuple(self.comparisons))

    def holds(self, env):
        return all(c.holds(env) for c in self.comparisons)

    def holds_eventually(self, env):
        return all(c.holds_eventually(env) for c in self.comparisons)

    def closure_contains(self, env):
        return all(c.relaxed_holds(env) for c in self.comparisons)

    def substitute(self, mapping):
        """
        Substitutes variables; constant comparisons are decided and dropped.

        :returns: the new Region or None if the region became empty
        """
        comparisons = []
        for comparison in self.comparisons:
            comparison = comparison.substitute(mapping)
            if comparison.is_constant():
                if not comparison.holds({}):
                    return None
                continue
            comparisons.append(comparison)
        return Region(tuple(comparisons))

    def conjoin(self, other):
        return Region(self.comparisons + other.comparisons)

    def isolated_points(self):
        """
        Returns the variables pinned by an equality on a single non-constant affine variable term.

        Used to detect regions which are a single point on the real line.
        """
        pinned = []
        for comparison in self.comparisons:
            if comparison.op == "=" and len(comparison.lhs.variables()) == 1 and comparison.lhs.degree("x") == 1:
                pinned.append(comparison)
        return pinned

    def to_text(self):
        if not self.comparisons:
            return "always"
        return ", ".join(c.to_text() for c in self.comparisons)

    def __str__(self):
        return self.to_text()


ALWAYS = Region(())


def const(value):
    return Const(rational(value))


def x(index=1):
    return Var("x", index)


def y(index=1):
    return Var("y", index)
