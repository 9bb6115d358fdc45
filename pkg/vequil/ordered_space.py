"""
This module provides exact rational vectors, polyhedral cones, box domains
and the cone order predicates every other module is built on.

A cone is given by its normals a_j:

    C     = {z : <a_j, z> >= 0 for all j}
    int C = {z : <a_j, z> >  0 for all j}
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import DimensionMismatchError, DomainError, ConeValidationError
from . import symbolic

#: scalars are exact rationals in canonical form
Rational = Fraction


def rational(value):
    """
    Converts the given value into an exact Rational.

    Accepts ints, Fractions and strings like ``-3/2``. Floats are rejected
    because they cannot be represented exactly.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        raise TypeError("floating point value {0!r} is not an exact rational".format(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def format_rational(value):
    """
    Formats a rational as ``p`` or ``p/q``
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{0}/{1}".format(value.numerator, value.denominator)


@dataclass(frozen=True)
class RationalVec:
    """
    Represents an exact rational coordinate vector
    """

    coords: tuple

    def __post_init__(self):
        coords = tuple(rational(c) for c in self.coords)
        if not coords:
            raise ValueError("a vector needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self):
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def _check(self, other):
        if not isinstance(other, RationalVec):
            return NotImplemented
        check_dim(self.dim, other)
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return RationalVec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return RationalVec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return RationalVec(tuple(-a for a in self.coords))

    def __mul__(self, scalar):
        if isinstance(scalar, RationalVec):
            return NotImplemented
        scalar = rational(scalar)
        return RationalVec(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def dot(self, other):
        """
        Returns the exact inner product
        """
        check_dim(self.dim, other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def norm_inf(self):
        return max(abs(a) for a in self.coords)

    def is_zero(self):
        return all(a == 0 for a in self.coords)

    def to_strings(self):
        """
        Returns the coordinates as exact ``p/q`` strings
        """
        return [format_rational(a) for a in self.coords]

    def __str__(self):
        return "({0})".format(", ".join(self.to_strings()))

    def __repr__(self):
        return "<RationalVec {0}>".format(self)


def vec(*coords):
    """
    Shorthand to build a RationalVec from its coordinates
    """
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = coords[0]
    return RationalVec(tuple(coords))


def zero(dim):
    return RationalVec(tuple(Fraction(0) for _ in range(dim)))


def check_dim(expected, vector, what="vector"):
    """
    Raises a DimensionMismatchError if the vector does not have the expected dimension
    """
    if vector.dim != expected:
        raise DimensionMismatchError(expected, vector.dim, what)


@dataclass(frozen=True)
class ConeSpec:
    """
    Represents a polyhedral cone given by the normals describing its interior.

    The normals must have full rank (pointedness) and the strict system
    must be feasible (nonempty interior), see ``cone_validate``.
    """

    normals: tuple
    name: str = None
    witness: RationalVec = field(default=None, compare=False)

    def __post_init__(self):
        normals = tuple(n if isinstance(n, RationalVec) else vec(n) for n in self.normals)
        if not normals:
            raise ConeValidationError("a cone needs at least one normal")
        dim = normals[0].dim
        for normal in normals:
            check_dim(dim, normal, "cone normal")
        object.__setattr__(self, "normals", normals)

    @property
    def dim(self):
        return self.normals[0].dim

    def describe(self):
        """
        Returns the problem file notation of this cone
        """
        if self.name == "icecream":
            return "icecream"
        if self.name and self.name.startswith("orthant"):
            return "orthant {0}".format(self.dim)
        return "normals {0}".format(" ".join(str(n) for n in self.normals))

    def __str__(self):
        return self.describe()


def orthant(dim):
    """
    Returns the nonnegative orthant of the given dimension
    """
    normals = tuple(RationalVec(tuple(Fraction(int(i == j)) for j in range(dim))) for i in range(dim))
    return ConeSpec(normals, name="orthant{0}".format(dim), witness=RationalVec(tuple(Fraction(1) for _ in range(dim))))


def icecream2():
    """
    Returns the planar cone {(z1, z2) : z1^2 <= z2^2, z2 >= 0}
    """
    return ConeSpec((vec(1, 1), vec(-1, 1)), name="icecream", witness=vec(0, 1))


def cone_contains(C, z):
    """
    Checks if z lies in C
    """
    check_dim(C.dim, z)
    return all(normal.dot(z) >= 0 for normal in C.normals)


def cone_interior_contains(C, z):
    """
    Checks if z lies in int C
    """
    check_dim(C.dim, z)
    return all(normal.dot(z) > 0 for normal in C.normals)


def not_in_neg_interior(C, z):
    """
    Checks if z lies outside of -int C
    """
    return not cone_interior_contains(C, -z)


def leq_cone(C, z1, z2):
    """
    Checks z1 <=_C z2, i.e. z2 - z1 in C
    """
    check_dim(C.dim, z1)
    return cone_contains(C, z2 - z1)


def lt_interior(C, z1, z2):
    """
    Checks z2 - z1 in int C
    """
    check_dim(C.dim, z1)
    return cone_interior_contains(C, z2 - z1)


@dataclass(frozen=True)
class ConeReport:
    """
    Represents the result of validating a cone
    """

    valid: bool
    rank: int
    witness: RationalVec = None
    rays: tuple = ()
    reason: str = None


def extreme_rays(C):
    """
    Returns the extreme rays of a pointed cone, normalized and lexicographically sorted.

    Every ray lies on dim - 1 linearly independent boundary hyperplanes.
    """
    dim = C.dim
    rays = set()
    rows = [list(n.coords) for n in C.normals]
    for subset in itertools.combinations(rows, dim - 1):
        subset = list(subset)
        if symbolic.rank(subset) != dim - 1:
            continue
        for basis in symbolic.nullspace(subset, dim):
            for sign in (1, -1):
                candidate = RationalVec(tuple(sign * c for c in basis))
                if candidate.is_zero() or not cone_contains(C, candidate):
                    continue
                rays.add(candidate * (1 / candidate.norm_inf()))
    return tuple(sorted(rays, key=lambda r: r.coords))


def cone_validate(C):
    """
    Validates the representation contract of the given cone.

    The normals must have full rank and a strictly feasible point must exist.
    Built-in cones report their stored witness.
    """
    rank = symbolic.rank([list(n.coords) for n in C.normals])
    if rank < C.dim:
        return ConeReport(
            False, rank, reason="not pointed under representation contract (rank {0} < {1})".format(rank, C.dim)
        )

    rays = extreme_rays(C)
    witness = C.witness
    if witness is None and rays:
        witness = rays[0]
        for ray in rays[1:]:
            witness = witness + ray

    if witness is None or not cone_interior_contains(C, witness):
        return ConeReport(False, rank, rays=rays, reason="empty interior")
    return ConeReport(True, rank, witness=witness, rays=rays)


def ensure_valid(C):
    """
    Raises a ConeValidationError if the given cone is not valid
    """
    report = cone_validate(C)
    if not report.valid:
        raise ConeValidationError(report.reason)
    return report


@dataclass(frozen=True)
class BoxDomain:
    """
    Represents an axis aligned box together with a rational grid
    """

    lower: RationalVec
    upper: RationalVec
    grid_counts: tuple

    def __post_init__(self):
        lower = self.lower if isinstance(self.lower, RationalVec) else vec(self.lower)
        upper = self.upper if isinstance(self.upper, RationalVec) else vec(self.upper)
        check_dim(lower.dim, upper, "upper box corner")
        counts = tuple(int(c) for c in self.grid_counts)
        if len(counts) == 1 and lower.dim > 1:
            counts = counts * lower.dim
        if len(counts) != lower.dim:
            raise DimensionMismatchError(lower.dim, len(counts), "grid counts")
        if any(c < 1 for c in counts):
            raise ValueError("grid counts must be positive")
        if any(lo > hi for lo, hi in zip(lower, upper)):
            raise ValueError("lower box corner {0} exceeds upper corner {1}".format(lower, upper))
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "grid_counts", counts)

    @property
    def dim(self):
        return self.lower.dim

    def step(self, axis):
        return (self.upper[axis] - self.lower[axis]) / self.grid_counts[axis]

    def axis_values(self, axis):
        """
        Returns the grid coordinates along the given axis
        """
        if self.lower[axis] == self.upper[axis]:
            return [self.lower[axis]]
        step = self.step(axis)
        return [self.lower[axis] + k * step for k in range(self.grid_counts[axis] + 1)]

    def grid_points(self):
        """
        Returns all grid points in lexicographic order
        """
        axes = [self.axis_values(axis) for axis in range(self.dim)]
        return [RationalVec(coords) for coords in itertools.product(*axes)]

    def total_points(self):
        total = 1
        for axis in range(self.dim):
            total *= len(self.axis_values(axis))
        return total

    def contains(self, point):
        check_dim(self.dim, point, "point")
        return all(lo <= c <= hi for lo, c, hi in zip(self.lower, point, self.upper))

    def ensure_contains(self, point):
        if not self.contains(point):
            raise DomainError(point, self)

    def contains_box(self, other):
        return self.contains(other.lower) and self.contains(other.upper)

    def vertices(self):
        """
        Returns the corners of the box in lexicographic order
        """
        axes = [sorted({self.lower[axis], self.upper[axis]}) for axis in range(self.dim)]
        return [RationalVec(coords) for coords in itertools.product(*axes)]

    def center(self):
        return (self.lower + self.upper) * Fraction(1, 2)

    def with_grid(self, counts):
        """
        Returns the same box with another grid
        """
        if isinstance(counts, int):
            counts = (counts,) * self.dim
        return BoxDomain(self.lower, self.upper, tuple(counts))

    def describe(self):
        boxes = " x ".join(
            "[{0}, {1}]".format(format_rational(lo), format_rational(hi)) for lo, hi in zip(self.lower, self.upper)
        )
        return "{0} grid {1}".format(boxes, " ".join(str(c) for c in self.grid_counts))

    def __str__(self):
        return self.describe()


def interval(lower, upper, grid_count):
    """
    Shorthand for a one dimensional BoxDomain
    """
    return BoxDomain(vec(lower), vec(upper), (grid_count,))
