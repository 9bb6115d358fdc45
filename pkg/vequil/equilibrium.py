"""
This module provides the grid solvers of the dual and the perturbed weak
vector equilibrium problems together with the structural checks around them:
diagonal conditions, the relative algebraic core and the coercivity condition.
"""

from dataclasses import dataclass

from .exceptions import DomainError
from .maps import sum_maps, check_same_shape
from .ordered_space import cone_contains, cone_interior_contains, not_in_neg_interior
from .verdict import Verdict
from . import codec

DUAL = "dual"
PERTURBED = "perturbed"

#: diagonal modes: g(x, x) not in -int C and f(x, x) in C
NOT_NEG_INT = "not-neg-int"
IN_CONE = "in-cone"


@dataclass(frozen=True)
class SolutionReport:
    """
    Represents the grid solutions of an equilibrium problem.

    ``violators`` holds a (x, y, value) triple for every non-solution x with
    the first y (in grid order) whose value lies in -int C.
    """

    problem: str
    F: object
    C: object
    domain: object
    solutions: tuple
    violators: tuple

    def __contains__(self, x):
        return x in self.solutions

    def violator_of(self, x):
        for candidate, y, value in self.violators:
            if candidate == x:
                return y, value
        return None

    def first_mismatch(self):
        """
        Re-verifies every solution against every grid y, then every violator.

        :returns: None or the 1-based index of the first entry which does not verify,
                  solutions counted before violators
        """
        points = self.domain.grid_points()
        for index, x in enumerate(self.solutions, start=1):
            if not all(not_in_neg_interior(self.C, self.F(x, y)) for y in points):
                return index
        for index, (x, y, value) in enumerate(self.violators, start=len(self.solutions) + 1):
            if self.F(x, y) != value or not cone_interior_contains(self.C, -value):
                return index
        return None

    def recheck(self):
        return self.first_mismatch() is None

    @classmethod
    def from_json(cls, data):
        return cls(
            data["problem"],
            codec.map_from_json(data["map"]),
            codec.cone_from_json(data["cone"]),
            codec.domain_from_json(data["domain"]),
            tuple(codec.vec_from_json(x) for x in data["solutions"]),
            tuple(
                (codec.vec_from_json(v["x"]), codec.vec_from_json(v["y"]), codec.vec_from_json(v["value"]))
                for v in data["violators"]
            ),
        )

    def to_json(self):
        return {
            "type": "solution-report",
            "problem": self.problem,
            "map": codec.map_to_json(self.F),
            "cone": codec.cone_to_json(self.C),
            "domain": codec.domain_to_json(self.domain),
            "solutions": [codec.vec_to_json(x) for x in self.solutions],
            "violators": [
                {"x": codec.vec_to_json(x), "y": codec.vec_to_json(y), "value": codec.vec_to_json(v)}
                for x, y, v in self.violators
            ],
        }


def _solve(problem, F, domain, C):
    points = domain.grid_points()
    if not points:
        raise ValueError("cannot solve on an empty grid")
    solutions = []
    violators = []
    for x in points:
        for y in points:
            value = F(x, y)
            if cone_interior_contains(C, -value):
                violators.append((x, y, value))
                break
        else:
            solutions.append(x)
    return SolutionReport(problem, F, C, domain, tuple(solutions), tuple(violators))


def solve_dual(g, domain, C):
    """
    Finds every grid x0 with g(x0, y) not in -int C for all grid y
    """
    return _solve(DUAL, g, domain, C)


def solve_perturbed(f, g, domain, C):
    """
    Finds every grid x0 with f(x0, y) + g(x0, y) not in -int C for all grid y
    """
    check_same_shape(f, g)
    return _solve(PERTURBED, sum_maps(f, g), domain, C)


def diagonal_check(h, domain, C, mode=NOT_NEG_INT):
    """
    Checks h(x, x) not in -int C (or h(x, x) in C) at every grid x
    """
    if mode == NOT_NEG_INT:
        accept = not_in_neg_interior
    elif mode == IN_CONE:
        accept = cone_contains
    else:
        raise ValueError("unknown diagonal mode '{0}'".format(mode))

    points = domain.grid_points()
    certificate = {
        "map": codec.map_to_json(h),
        "cone": codec.cone_to_json(C),
        "domain": codec.domain_to_json(domain),
        "mode": mode,
    }
    violators = [x for x in points if not accept(C, h(x, x))]
    if violators:
        certificate.update(
            {
                "x": codec.vec_to_json(violators[0]),
                "value": codec.vec_to_json(h(violators[0], violators[0])),
                "violators": [codec.vec_to_json(x) for x in violators],
            }
        )
        return Verdict.fails("diagonal-violation", certificate)
    certificate["checked"] = len(points)
    return Verdict.holds("diagonal", certificate)


def remark_r1_check(f, g, domain, C):
    """
    Confirms f(x, x) + g(x, x) not in -int C wherever f(x, x) in C and g(x, x) not in -int C
    """
    certificate = {
        "f": codec.map_to_json(f),
        "g": codec.map_to_json(g),
        "cone": codec.cone_to_json(C),
        "domain": codec.domain_to_json(domain),
    }
    checked = 0
    for x in domain.grid_points():
        fx, gx = f(x, x), g(x, x)
        if not (cone_contains(C, fx) and not_in_neg_interior(C, gx)):
            continue
        checked += 1
        if not not_in_neg_interior(C, fx + gx):
            certificate.update({"x": codec.vec_to_json(x), "fx": codec.vec_to_json(fx), "gx": codec.vec_to_json(gx)})
            return Verdict.fails("remark-r1-violation", certificate)
    certificate["checked"] = checked
    return Verdict.holds("remark-r1", certificate)


@dataclass(frozen=True)
class CoreRegion:
    """
    Represents core_K K0, the points u of K0 such that ]u, v] meets K0 for every v in K
    """

    K: object
    K0: object

    def meets_segment(self, u, v):
        """
        Checks whether ]u, v] meets K0, i.e. whether u + t(v - u) stays in K0 for small t > 0
        """
        for lower, upper, start, target in zip(self.K0.lower, self.K0.upper, u, v):
            if start == upper and target > start:
                return False
            if start == lower and target < start:
                return False
        return True

    def __contains__(self, u):
        if not self.K0.contains(u):
            return False
        return all(self.meets_segment(u, v) for v in self.K.vertices())

    def points(self):
        return [u for u in self.K0.grid_points() if u in self]

    def boundary_points(self):
        """
        Returns the grid points of K0 outside the core
        """
        return [u for u in self.K0.grid_points() if u not in self]

    def to_json(self):
        return {"K": codec.domain_to_json(self.K), "K0": codec.domain_to_json(self.K0)}


def core_relative(K, K0):
    """
    Returns the algebraic interior of K0 relative to K
    """
    if not K.contains_box(K0):
        raise DomainError(K0.lower if not K.contains(K0.lower) else K0.upper, K)
    return CoreRegion(K, K0)


def coercivity_check(h, K, K0, C):
    """
    Checks that every grid x of K0 outside the core has a core point y0 with h(x, y0) in -C
    """
    core = core_relative(K, K0)
    certificate = {"map": codec.map_to_json(h), "cone": codec.cone_to_json(C)}
    certificate.update(core.to_json())

    inner = core.points()
    if not inner:
        certificate["reason"] = "empty-core"
        return Verdict.fails("coercivity-empty-core", certificate)

    cover = []
    for x in core.boundary_points():
        y0 = next((y for y in inner if cone_contains(C, -h(x, y))), None)
        if y0 is None:
            certificate["x"] = codec.vec_to_json(x)
            return Verdict.fails("coercivity-uncovered", certificate)
        cover.append({"x": codec.vec_to_json(x), "y0": codec.vec_to_json(y0)})
    certificate["cover"] = cover
    return Verdict.holds("coercivity", certificate)


def extend_solution(g, x0, K, K0, C):
    """
    Confirms on the grid of K that a dual solution on K0 solves the dual problem on K.

    The extension goes through a core point z0 with g(x0, z0) in -C: x0
    itself when it lies in the core, else the first such grid point of the core.
    """
    core = core_relative(K, K0)
    certificate = {"map": codec.map_to_json(g), "cone": codec.cone_to_json(C), "x0": codec.vec_to_json(x0)}
    certificate.update(core.to_json())

    for y in K0.grid_points():
        value = g(x0, y)
        if cone_interior_contains(C, -value):
            certificate.update({"y": codec.vec_to_json(y), "value": codec.vec_to_json(value)})
            return Verdict.fails("extend-solution-precondition", certificate)

    if x0 in core:
        z0 = x0
    else:
        z0 = next((z for z in core.points() if cone_contains(C, -g(x0, z))), None)
    if z0 is None:
        certificate["reason"] = "no core point z0 with g(x0, z0) in -C"
        return Verdict.fails("extend-solution-precondition", certificate)
    certificate["z0"] = codec.vec_to_json(z0)

    for y in K.grid_points():
        value = g(x0, y)
        if cone_interior_contains(C, -value):
            certificate.update({"y": codec.vec_to_json(y), "value": codec.vec_to_json(value)})
            return Verdict.fails("extend-solution-violation", certificate)
    certificate["checked"] = len(K.grid_points())
    return Verdict.holds("extend-solution", certificate)
