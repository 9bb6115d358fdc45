"""
This module provides piecewise maps and the operations on them.

A PiecewiseMap is either unary in x or a bifunction in (x, y). Both
arguments live in the same box domain K. Its pieces partition the domain;
the partition is validated on the grid when the map is built.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import DimensionMismatchError, RegionPartitionError, DomainError
from .expressions import ALWAYS, Add, Const, Var, Region
from .ordered_space import RationalVec, BoxDomain, check_dim, cone_contains, zero
from .verdict import Verdict

UNARY = "unary"
BIFUNCTION = "bifunction"


@dataclass(frozen=True)
class Piece:
    """
    Represents one piece: a region and the component expressions valid on it
    """

    region: Region
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def evaluate(self, env):
        return RationalVec(tuple(c.evaluate(env) for c in self.components))


def make_env(x, y=None):
    """
    Builds the variable environment for the given arguments
    """
    env = {"x{0}".format(i + 1): value for i, value in enumerate(x)}
    if y is not None:
        env.update({"y{0}".format(i + 1): value for i, value in enumerate(y)})
    return env


@dataclass(frozen=True)
class PiecewiseMap:
    """
    Represents a unary map K -> Z or a bifunction K x K -> Z
    """

    arity: str
    domain: BoxDomain
    codomain_dim: int
    pieces: tuple
    name: str = field(default=None, compare=False)

    def __post_init__(self):
        if self.arity not in (UNARY, BIFUNCTION):
            raise ValueError("unknown arity '{0}'".format(self.arity))
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not self.pieces:
            raise ValueError("a piecewise map needs at least one piece")

        allowed = {"x{0}".format(i + 1) for i in range(self.domain.dim)}
        if self.is_bifunction:
            allowed |= {"y{0}".format(i + 1) for i in range(self.domain.dim)}
        for piece in self.pieces:
            if len(piece.components) != self.codomain_dim:
                raise DimensionMismatchError(self.codomain_dim, len(piece.components), "map components")
            used = set()
            for expression in piece.components:
                used |= expression.variables()
            for comparison in piece.region.comparisons:
                used |= comparison.lhs.variables()
            unknown = used - allowed
            if unknown:
                raise ValueError(
                    "map '{0}' uses unknown variables: {1}".format(self.label, ", ".join(sorted(unknown)))
                )
        self.validate()

    @property
    def is_bifunction(self):
        return self.arity == BIFUNCTION

    @property
    def label(self):
        return self.name or "<anonymous>"

    def arguments(self):
        """
        Returns all grid arguments: points for unary maps, pairs for bifunctions
        """
        points = self.domain.grid_points()
        if self.is_bifunction:
            return list(itertools.product(points, points))
        return [(p, None) for p in points]

    def validate(self):
        """
        Checks that every grid argument matches exactly one region
        """
        for x, y in self.arguments():
            env = make_env(x, y)
            count = sum(1 for piece in self.pieces if piece.region.holds(env))
            if count != 1:
                point = x if y is None else "{0}, {1}".format(x, y)
                raise RegionPartitionError(self.label, point, count)

    def piece_index(self, x, y=None):
        """
        Returns the index of the unique piece matching the arguments
        """
        env = make_env(x, y)
        matches = [index for index, piece in enumerate(self.pieces) if piece.region.holds(env)]
        if len(matches) != 1:
            point = x if y is None else "{0}, {1}".format(x, y)
            raise RegionPartitionError(self.label, point, len(matches))
        return matches[0]

    def __call__(self, x, y=None):
        return evaluate(self, x, y)

    def __str__(self):
        return "{0} map {1}: {2} -> Z^{3}".format(self.arity, self.label, self.domain, self.codomain_dim)


def evaluate(F, x, y=None):
    """
    Evaluates the map exactly at x (and y for bifunctions)
    """
    check_dim(F.domain.dim, x, "map argument")
    F.domain.ensure_contains(x)
    if F.is_bifunction:
        if y is None:
            raise ValueError("bifunction '{0}' needs a second argument".format(F.label))
        check_dim(F.domain.dim, y, "second map argument")
        F.domain.ensure_contains(y)
    elif y is not None:
        raise ValueError("unary map '{0}' takes a single argument".format(F.label))

    env = make_env(x, y)
    return F.pieces[F.piece_index(x, y)].evaluate(env)


def _substituted(F, mapping, rename=None, name=None):
    pieces = []
    for piece in F.pieces:
        region = piece.region.substitute(mapping)
        if region is None:
            continue
        components = tuple(c.substitute(mapping) for c in piece.components)
        if rename:
            region = region.substitute(rename)
            components = tuple(c.substitute(rename) for c in components)
        pieces.append(Piece(region, components))
    return PiecewiseMap(UNARY, F.domain, F.codomain_dim, tuple(pieces), name=name)


def fix_second(F, y):
    """
    Returns the unary map x -> F(x, y)
    """
    if not F.is_bifunction:
        raise ValueError("fix_second needs a bifunction, '{0}' is unary".format(F.label))
    check_dim(F.domain.dim, y, "fixed argument")
    F.domain.ensure_contains(y)
    mapping = {"y{0}".format(i + 1): Const(value) for i, value in enumerate(y)}
    return _substituted(F, mapping, name="{0}(., {1})".format(F.label, y))


def fix_first(F, x):
    """
    Returns the unary map y -> F(x, y); its argument is named x
    """
    if not F.is_bifunction:
        raise ValueError("fix_first needs a bifunction, '{0}' is unary".format(F.label))
    check_dim(F.domain.dim, x, "fixed argument")
    F.domain.ensure_contains(x)
    mapping = {"x{0}".format(i + 1): Const(value) for i, value in enumerate(x)}
    rename = {"y{0}".format(i + 1): Var("x", i + 1) for i in range(F.domain.dim)}
    return _substituted(F, mapping, rename=rename, name="{0}({1}, .)".format(F.label, x))


def check_same_shape(F, G):
    if F.arity != G.arity:
        raise ValueError("cannot combine {0} map '{1}' with {2} map '{3}'".format(F.arity, F.label, G.arity, G.label))
    if (F.domain.lower, F.domain.upper) != (G.domain.lower, G.domain.upper):
        raise ValueError("maps '{0}' and '{1}' live on different domains".format(F.label, G.label))
    if F.codomain_dim != G.codomain_dim:
        raise DimensionMismatchError(F.codomain_dim, G.codomain_dim, "codomain")


def restrict(F, domain):
    """
    Returns F restricted to a sub box of its domain
    """
    if not F.domain.contains_box(domain):
        raise DomainError(domain.lower if not F.domain.contains(domain.lower) else domain.upper, F.domain)
    return PiecewiseMap(F.arity, domain, F.codomain_dim, F.pieces, name=F.name)


def sum_maps(F, G):
    """
    Returns the region refined pointwise sum F + G
    """
    check_same_shape(F, G)
    pieces = []
    for p, q in itertools.product(F.pieces, G.pieces):
        components = tuple(Add(a, b).substitute({}) for a, b in zip(p.components, q.components))
        pieces.append(Piece(p.region.conjoin(q.region), components))
    return PiecewiseMap(F.arity, F.domain, F.codomain_dim, tuple(pieces), name="{0}+{1}".format(F.label, G.label))


def constant_map(arity, domain, value, name=None):
    """
    Returns the map which is constantly ``value``
    """
    return PiecewiseMap(arity, domain, value.dim, (Piece(ALWAYS, tuple(Const(c) for c in value)),), name=name)


def zero_map(arity, domain, codomain_dim, name=None):
    return constant_map(arity, domain, zero(codomain_dim), name=name or "0")


def is_affine_in_y(F):
    """
    Checks syntactically that the bifunction is affine in its second argument
    """
    for piece in F.pieces:
        if any(c.lhs.depends_on("y") for c in piece.region.comparisons):
            return False
        for component in piece.components:
            degree = component.degree("y")
            if degree is None or degree > 1:
                return False
    return True


def _coarse_to_fine(samples):
    density = samples
    while density % 2 == 0 and density > 2:
        density //= 2
    while density <= samples:
        yield density
        density *= 2


def c_convex_check(F, x, C, samples=4):
    """
    Checks C-convexity of y -> F(x, y) on sampled triples (y1, y2, t).

    ``samples`` is the finest density of both the t-grid {k/samples} and the
    y sub-grid of the domain. Coarser densities dividing it are tried first,
    so a refutation is reported on the coarsest grid that shows it.
    """
    if not F.is_bifunction:
        raise ValueError("c_convex_check needs a bifunction, '{0}' is unary".format(F.label))
    F.domain.ensure_contains(x)
    check_dim(C.dim, zero(F.codomain_dim), "cone")

    # FIXME: cyclic import maps -> codec -> mapparser -> maps
    from . import codec

    certificate = {"map": codec.map_to_json(F), "cone": codec.cone_to_json(C), "x": x.to_strings(), "samples": samples}
    if is_affine_in_y(F):
        certificate["reason"] = "affine in y"
        return Verdict.holds("c-convex-affine", certificate)

    for density in _coarse_to_fine(samples):
        points = F.domain.with_grid(density).grid_points()
        ts = [Fraction(k, density) for k in range(1, density)]
        for y1, y2 in itertools.product(points, points):
            if y1 == y2:
                continue
            for t in ts:
                middle = y1 * t + y2 * (1 - t)
                value = F(x, y1) * t + F(x, y2) * (1 - t) - F(x, middle)
                if not cone_contains(C, value):
                    certificate.update(
                        {"y1": y1.to_strings(), "y2": y2.to_strings(), "t": str(t), "value": value.to_strings()}
                    )
                    return Verdict.fails("c-convex-triple", certificate)
    sampled = len(points) * (len(points) - 1) * len(ts)
    return Verdict.consistent("c-convex", notes=("{0} triples sampled".format(sampled),))
