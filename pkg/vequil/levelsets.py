"""
This module provides the solution candidate sets G(y) = {x in K : g(x, y) not in -int C}
on grids and a refutation probe for their closedness.
"""

from dataclasses import dataclass

from .maps import fix_second
from .ordered_space import BoxDomain, RationalVec, not_in_neg_interior, cone_interior_contains
from .sequences import generate_sequences, eventual_expressions
from .verdict import Verdict, DEFAULT_BUDGET
from . import codec
from . import symbolic


@dataclass(frozen=True)
class GridSet:
    """
    Represents a subset of the grid points of a domain
    """

    domain: BoxDomain
    mask: tuple
    description: str = ""

    def __post_init__(self):
        object.__setattr__(self, "mask", tuple(bool(m) for m in self.mask))
        if len(self.mask) != self.domain.total_points():
            raise ValueError(
                "mask of length {0} does not fit {1} grid points".format(len(self.mask), self.domain.total_points())
            )

    def points(self):
        return [point for point, member in zip(self.domain.grid_points(), self.mask) if member]

    def __contains__(self, point):
        return point in self.points()

    def __len__(self):
        return sum(self.mask)

    def is_empty(self):
        return not any(self.mask)

    def to_json(self):
        return {
            "description": self.description,
            "domain": codec.domain_to_json(self.domain),
            "points": [codec.vec_to_json(p) for p in self.points()],
        }


def level_set(g, y, C, domain=None):
    """
    Computes G(y) on the grid of the given domain (default: the domain of g)
    """
    domain = domain or g.domain
    g.domain.ensure_contains(y)
    mask = tuple(not_in_neg_interior(C, g(x, y)) for x in domain.grid_points())
    return GridSet(domain, mask, "G({0}) = {{x : {1}(x, {0}) not in -int C}}".format(y, g.label))


def transition_anchors(G):
    """
    Returns the non-members next to a member along some axis, in grid order
    """
    domain = G.domain
    members = set(G.points())
    anchors = []
    for point in domain.grid_points():
        if point in members:
            continue
        for axis in range(domain.dim):
            step = domain.step(axis)
            if step == 0:
                continue
            offset = RationalVec(tuple(step if i == axis else 0 for i in range(domain.dim)))
            if point + offset in members or point - offset in members:
                anchors.append(point)
                break
    return anchors


def eventually_member(h, seq, C):
    """
    Checks that h(x_n) eventually stays outside of -int C
    """
    expressions = eventual_expressions(h, (seq,))
    for normal in C.normals:
        combined = sum(symbolic.to_sympy(a) * e for a, e in zip(normal, expressions) if a != 0)
        if symbolic.eventual_sign(combined) >= 0:
            return True
    return False


def closedness_probe(g, y, C, domain=None, budget=DEFAULT_BUDGET):
    """
    Searches a sequence inside G(y) whose limit lies outside G(y).

    Candidates approach the anchors of ``transition_anchors``. A sequence is
    accepted if its terms are members up to the tail depth and eventually.
    """
    G = level_set(g, y, C, domain)
    h = fix_second(g, y)
    anchors = transition_anchors(G)
    for anchor in anchors:
        value = g(anchor, y)
        if not cone_interior_contains(C, -value):
            continue
        for seq in generate_sequences(anchor, G.domain, budget):
            if not all(not_in_neg_interior(C, h(seq.term(n))) for n in range(1, budget.depth + 1)):
                continue
            try:
                if not eventually_member(h, seq, C):
                    continue
            except symbolic.UndecidedLimit:
                continue
            certificate = {
                "map": codec.map_to_json(g),
                "y": codec.vec_to_json(y),
                "cone": codec.cone_to_json(C),
                "anchor": codec.vec_to_json(anchor),
                "sequence": seq.to_json(),
                "value": codec.vec_to_json(value),
                "depth": budget.depth,
            }
            return Verdict.fails("closedness-refutation", certificate, budget)
    return Verdict.consistent("closedness", budget, notes=("{0} anchors probed".format(len(anchors)),))
