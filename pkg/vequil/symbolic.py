"""
This module provides the bridge between the exact kernel and sympy.

The kernel computes with ``fractions.Fraction``. Whenever a limit along a
sequence or a rank/nullspace has to be computed, the values are handed to
sympy and the exact results are converted back.
"""

import functools
from fractions import Fraction

import sympy

#: index variable of every sequence
N = sympy.Symbol("n", positive=True, integer=True)

#: largest power of n tried when a limit vanishes and its sign is needed
MAX_SIGN_ORDER = 8

PLUS_INFINITY = "+oo"
MINUS_INFINITY = "-oo"


class UndecidedLimit(Exception):
    """
    Raised if sympy cannot decide a limit or an eventual sign
    """

    pass


def to_sympy(value):
    """
    Converts a Fraction (or int) into an exact sympy Rational
    """
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value):
    """
    Converts an exact sympy number back into the kernel's representation.

    Finite values become Fractions, infinite ones the strings ``+oo``/``-oo``.

    :raises UndecidedLimit: if the value is neither rational nor infinite
    """
    if value == sympy.oo:
        return PLUS_INFINITY
    if value == -sympy.oo:
        return MINUS_INFINITY
    if value.is_Rational:
        return Fraction(int(value.p), int(value.q))
    raise UndecidedLimit("not an extended rational: {0}".format(value))


@functools.lru_cache(maxsize=None)
def limit_at_infinity(expression):
    """
    Returns the exact limit of the given expression in ``n`` as ``n`` tends to infinity
    """
    try:
        value = sympy.limit(expression, N, sympy.oo)
    except (NotImplementedError, ValueError) as e:
        raise UndecidedLimit(str(e))
    if isinstance(value, sympy.AccumBounds) or value is sympy.nan or value is sympy.zoo:
        raise UndecidedLimit("no limit: {0}".format(value))
    return from_sympy(value)


@functools.lru_cache(maxsize=None)
def eventual_sign(expression):
    """
    Returns the sign (-1, 0 or 1) the expression eventually keeps for large ``n``
    """
    value = limit_at_infinity(expression)
    if value == PLUS_INFINITY:
        return 1
    if value == MINUS_INFINITY:
        return -1
    if value != 0:
        return 1 if value > 0 else -1

    if sympy.simplify(expression) == 0:
        return 0

    for order in range(1, MAX_SIGN_ORDER + 1):
        scaled = limit_at_infinity(expression * N ** order)
        if scaled == PLUS_INFINITY:
            return 1
        if scaled == MINUS_INFINITY:
            return -1
        if scaled != 0:
            return 1 if scaled > 0 else -1

    raise UndecidedLimit("cannot decide the eventual sign of {0}".format(expression))


def matrix(rows):
    """
    Builds an exact sympy matrix from rows of Fractions
    """
    return sympy.Matrix([[to_sympy(value) for value in row] for row in rows])


def rank(rows):
    """
    Returns the exact rank of the matrix with the given rows
    """
    if not rows:
        return 0
    return matrix(rows).rank()


def nullspace(rows, dim):
    """
    Returns a basis of the nullspace of the given rows as lists of Fractions
    """
    if not rows:
        return [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    return [[from_sympy(value) for value in vector] for vector in matrix(rows).nullspace()]


def solve(rows, rhs):
    """
    Solves the square system ``rows * x = rhs`` exactly.

    :returns: the solution as list of Fractions or None if the system is singular
    """
    system = matrix(rows)
    if system.rank() < len(rows):
        return None
    solution = system.LUsolve(sympy.Matrix([to_sympy(value) for value in rhs]))
    return [from_sympy(value) for value in solution]
