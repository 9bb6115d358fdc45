"""
This module traces the existence argument for the dual problem on a grid:
a finite cover by the sets V_y = {x : g(x, y) in -int C}, a partition of
unity subordinate to it, an approximate fixed point of the induced map and
the hypothesis the instance violates.
"""

from fractions import Fraction

from .maps import fix_second, restrict, sum_maps, c_convex_check
from .ordered_space import RationalVec, cone_interior_contains
from .semicontinuity import ausc_check
from .equilibrium import solve_dual, diagonal_check, coercivity_check, extend_solution, NOT_NEG_INT
from .conditions import transfer_check
from .verdict import Verdict, DEFAULT_BUDGET, aggregate
from . import codec

#: iterations of the damped fixed point search
MAX_ITERATIONS = 64


def greedy_cover(g, points, C):
    """
    Picks y_1, y_2, ... covering the grid with V_y, each time the y covering
    most uncovered points (first in grid order on ties).

    :returns: list of (y, members) or None if some point lies in no V_y
    """
    members = {y: frozenset(x for x in points if cone_interior_contains(C, -g(x, y))) for y in points}
    uncovered = set(points)
    cover = []
    while uncovered:
        best = max(points, key=lambda y: (len(members[y] & uncovered), -points.index(y)))
        gain = members[best] & uncovered
        if not gain:
            return None
        cover.append((best, members[best]))
        uncovered -= gain
    return cover


def _distance(a, b):
    return max(abs(p - q) for p, q in zip(a, b))


def hat_weights(point, cover, points):
    """
    Returns the normalized weights p_i(point): distance of the point to the grid complement of V_{y_i}
    """
    raw = []
    for _, members in cover:
        outside = [p for p in points if p not in members]
        raw.append(min(_distance(point, p) for p in outside) if outside else Fraction(1))
    total = sum(raw)
    return [w / total for w in raw]


def _combine(weights, cover):
    dim = cover[0][0].dim
    result = RationalVec(tuple(Fraction(0) for _ in range(dim)))
    for weight, (y, _) in zip(weights, cover):
        result = result + y * weight
    return result


def _snap(point, domain):
    coords = []
    for axis, value in enumerate(point):
        candidates = domain.axis_values(axis)
        coords.append(min(candidates, key=lambda c: (abs(c - value), c)))
    return RationalVec(tuple(coords))


def fixed_point_search(cover, domain, max_iterations=MAX_ITERATIONS):
    """
    Iterates x <- snap((x + phi(x)) / 2) on the grid, starting at y_1.

    :returns: (fixed point, iterations) or (None, iterations) if the iteration cycles or runs out
    """
    points = domain.grid_points()
    current = cover[0][0]
    seen = {current}
    for iteration in range(1, max_iterations + 1):
        image = _combine(hat_weights(current, cover, points), cover)
        following = _snap((current + image) * Fraction(1, 2), domain)
        if following == current:
            return current, iteration
        if following in seen:
            return None, iteration
        seen.add(following)
        current = following
    return None, max_iterations


def existence_probe(g, domain, C, max_iterations=MAX_ITERATIONS):
    """
    Traces the existence argument for g on the grid of the given domain
    """
    report = solve_dual(g, domain, C)
    certificate = {"map": codec.map_to_json(g), "cone": codec.cone_to_json(C), "domain": codec.domain_to_json(domain)}
    if report.solutions:
        certificate["x0"] = codec.vec_to_json(report.solutions[0])
        return Verdict.holds("existence-solution", certificate, notes=("solution exists",))

    points = domain.grid_points()
    cover = greedy_cover(g, points, C)
    claims = []
    for y, members in cover:
        for x in sorted(members, key=lambda p: p.coords):
            claims.append({"x": codec.vec_to_json(x), "y": codec.vec_to_json(y), "value": codec.vec_to_json(g(x, y))})
    certificate.update({"cover": [codec.vec_to_json(y) for y, _ in cover], "claims": claims})

    fixed, iterations = fixed_point_search(cover, domain, max_iterations)
    certificate["iterations"] = iterations
    if fixed is None:
        return Verdict.consistent(
            "existence-trace", notes=("fixed point iteration did not converge",), certificate=certificate
        )

    weights = hat_weights(fixed, cover, points)
    y0 = _combine(weights, cover)
    active = [i for i, w in enumerate(weights) if w > 0]
    certificate.update(
        {
            "fixed_point": codec.vec_to_json(fixed),
            "weights": [codec.rational_to_json(w) for w in weights],
            "active": active,
            "y0": codec.vec_to_json(y0),
        }
    )

    diagonal = g(y0, y0)
    certificate["diagonal"] = codec.vec_to_json(diagonal)
    if cone_interior_contains(C, -diagonal):
        certificate["violated"] = "diagonal"
    elif all(cone_interior_contains(C, -g(y0, cover[i][0])) for i in active):
        value = RationalVec(tuple(Fraction(0) for _ in diagonal))
        for i in active:
            value = value + g(y0, cover[i][0]) * weights[i]
        certificate["convexity_gap"] = codec.vec_to_json(value - diagonal)
        certificate["violated"] = "c-convexity"
    else:
        # y0 left some active V_y between grid points
        certificate["violated"] = "a-usc"
    return Verdict.fails("existence-trace", certificate, notes=("no solution on the grid",))


def existence_theorem_check(f, g, K, K0, C, budget=DEFAULT_BUDGET, condition=None, witness=None, on_sum=False):
    """
    Composes the hypotheses of the existence theorem on the grids of K and K0.

    With ``on_sum`` the coercivity condition is placed on f + g and the
    transfer condition is checked on K0 only.
    """
    steps = {}
    coercive = sum_maps(f, g) if on_sum else g
    steps["coercivity"] = coercivity_check(coercive, K, K0, C)

    inner = restrict(g, K0)
    points = K0.grid_points()
    hypotheses = [ausc_check(fix_second(inner, y), x, C, budget) for y in points for x in points]
    hypotheses.extend(c_convex_check(inner, x, C) for x in points)
    hypotheses.append(diagonal_check(inner, K0, C, NOT_NEG_INT))
    steps["hypotheses"] = aggregate("existence-hypotheses", hypotheses, budget)

    solutions = solve_dual(inner, K0, C)
    if not solutions.solutions:
        steps["probe"] = existence_probe(inner, K0, C)
        return _compose(steps, None, budget)

    x0 = solutions.solutions[0]
    steps["extension"] = extend_solution(g, x0, K, K0, C)
    if condition is not None:
        if on_sum:
            steps["transfer"] = transfer_check(restrict(f, K0), inner, x0, C, K0, condition, witness, budget)
        else:
            steps["transfer"] = transfer_check(f, g, x0, C, K, condition, witness, budget)
    return _compose(steps, x0, budget)


def _compose(steps, x0, budget):
    certificate = {"steps": {name: verdict.to_json() for name, verdict in steps.items()}}
    if x0 is not None:
        certificate["x0"] = codec.vec_to_json(x0)
    for name, verdict in steps.items():
        if verdict.is_fails:
            return Verdict.fails("existence-theorem", certificate, budget, notes=("{0} fails".format(name),))
    if x0 is not None and all(v.is_holds for v in steps.values()):
        return Verdict.holds("existence-theorem", certificate, budget)
    return Verdict.consistent("existence-theorem", budget, certificate=certificate)
