"""
This module provides the transfer conditions (A1)-(A5) and (B1)-(B6) under
which a solution x0 of the dual problem also solves the perturbed problem.

Every condition is a membership template over nets together with a-usc
requirements on f and g. The B-conditions lead with g(x0, z_n), the
A-conditions with an arbitrary net w_n outside of -int C.
"""

import enum
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import TemplateMismatchError, ConditionPreconditionError, TransferDiscrepancyError
from .maps import fix_first, fix_second, check_same_shape, make_env
from .ordered_space import cone_contains, cone_interior_contains, not_in_neg_interior, zero
from .semicontinuity import ausc_check
from .sequences import SequenceSpec, ImageNet, generate_sequences, map_limit_along
from .verdict import Verdict, DEFAULT_BUDGET
from . import codec
from . import symbolic


class ConditionId(enum.Enum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"
    A5 = "A5"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    B5 = "B5"
    B6 = "B6"

    @property
    def is_a(self):
        return self.value.startswith("A")

    @classmethod
    def from_name(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(name.upper())
        except ValueError:
            raise TemplateMismatchError(
                "Unknown condition '{0}', known are: {1}".format(name, ", ".join(c.value for c in cls))
            )


#: a subtracted term F(first, second); arguments are "x0", "y" or a net "x_n", "y_n", "u_n", "v_n"
Term = namedtuple("Term", ["bifunction", "first", "second"])

#: an a-usc requirement: slot "x" is x -> F(x, y) at x0, slot "z" is z -> F(x0, z) at y
Subcheck = namedtuple("Subcheck", ["bifunction", "slot"])


@dataclass(frozen=True)
class Template:
    nets: tuple
    terms: tuple
    subchecks: tuple

    def swapped(self):
        """
        Returns the template with the roles of f and g interchanged
        """
        other = {"f": "g", "g": "f"}
        return Template(
            self.nets,
            tuple(Term(other[t.bifunction], t.first, t.second) for t in self.terms),
            tuple(Subcheck(other[s.bifunction], s.slot) for s in self.subchecks),
        )


#: which fixed point every moving net tends to
NET_TARGETS = {"x": "x0", "u": "x0", "y": "y", "v": "y"}

_SHARED = {
    "1": Template(("x",), (Term("f", "x_n", "y"), Term("g", "x0", "y")), (Subcheck("f", "x"),)),
    "2": Template(("y",), (Term("f", "x0", "y_n"), Term("g", "x0", "y")), (Subcheck("f", "z"),)),
    "3": Template(
        ("x", "u"), (Term("f", "x_n", "y"), Term("g", "u_n", "y")), (Subcheck("f", "x"), Subcheck("g", "x"))
    ),
    "4": Template(
        ("y", "v"), (Term("f", "x0", "y_n"), Term("g", "x0", "v_n")), (Subcheck("f", "z"), Subcheck("g", "z"))
    ),
    "5": Template(
        ("x", "y"), (Term("f", "x_n", "y"), Term("g", "x0", "y_n")), (Subcheck("f", "x"), Subcheck("g", "z"))
    ),
    "6": Template(
        ("x", "y"), (Term("f", "x0", "y_n"), Term("g", "x_n", "y")), (Subcheck("g", "x"), Subcheck("f", "z"))
    ),
}

TEMPLATES = {cid: _SHARED[cid.value[1]] for cid in ConditionId}

#: conditions in which f and g may change their roles
SWAPPABLE = (ConditionId.A1, ConditionId.A2, ConditionId.A5)


def template_for(cid, swap_roles=False):
    template = TEMPLATES[cid]
    if swap_roles:
        if cid not in SWAPPABLE:
            raise TemplateMismatchError("the roles of f and g cannot be interchanged in {0}".format(cid.value))
        template = template.swapped()
    return template


@dataclass(frozen=True)
class ConditionWitness:
    """
    Represents the nets a condition template quantifies over, by name
    """

    nets: tuple

    @classmethod
    def of(cls, **nets):
        return cls(tuple(sorted(nets.items())))

    def names(self):
        return tuple(name for name, _ in self.nets)

    def __getitem__(self, name):
        return dict(self.nets)[name]

    def constant_nets(self):
        return [name for name, net in self.nets if isinstance(net, SequenceSpec) and net.is_constant()]

    def to_json(self):
        return {name: net.to_json() for name, net in self.nets}


def validate_witness(cid, template, witness, x0, y, domain, C):
    """
    Checks that the witness provides exactly the template's nets with the right limits
    """
    lead = "w" if cid.is_a else "z"
    required = set(template.nets) | {lead}
    given = set(witness.names())
    if required - given:
        raise TemplateMismatchError(
            "{0} needs the net(s) {1}".format(cid.value, ", ".join(sorted(required - given)))
        )
    if given - required:
        raise TemplateMismatchError(
            "{0} does not use the net(s) {1}".format(cid.value, ", ".join(sorted(given - required)))
        )

    targets = {"x0": x0, "y": y}
    for name in template.nets:
        net = witness[name]
        target = targets[NET_TARGETS[name]]
        if net.dim != domain.dim:
            raise TemplateMismatchError("net {0} of {1} has dimension {2}".format(name, cid.value, net.dim))
        if tuple(net.limit()) != tuple(target):
            raise TemplateMismatchError(
                "net {0} of {1} must tend to {2} = {3}".format(name, cid.value, NET_TARGETS[name], target)
            )
    for name in template.nets + ("z",):
        net = witness[name] if name in given else None
        if isinstance(net, SequenceSpec):
            net.validate_in(domain)
    if cid.is_a and witness["w"].dim != C.dim:
        raise TemplateMismatchError("net w of {0} has dimension {1}".format(cid.value, witness["w"].dim))


def _argument(name, n, x0, y, witness):
    if name == "x0":
        return x0
    if name == "y":
        return y
    return witness[name[0]].term(n)


def _maps(f, g):
    return {"f": f, "g": g}


def _term_value(term, n, f, g, x0, y, witness):
    F = _maps(f, g)[term.bifunction]
    return F(_argument(term.first, n, x0, y, witness), _argument(term.second, n, x0, y, witness))


def _subtracted(template, n, f, g, x0, y, witness):
    first, second = (_term_value(t, n, f, g, x0, y, witness) for t in template.terms)
    return first + second


def _base_certificate(cid, f, g, x0, y, C, swap_roles):
    return {
        "condition": cid.value,
        "swap_roles": swap_roles,
        "f": codec.map_to_json(f),
        "g": codec.map_to_json(g),
        "cone": codec.cone_to_json(C),
        "x0": codec.vec_to_json(x0),
        "y": codec.vec_to_json(y),
    }


def membership_check(cid, f, g, x0, y, C, witness, depth=DEFAULT_BUDGET.depth, swap_roles=False):
    """
    Checks the membership part of a condition at every index up to the given depth
    """
    cid = ConditionId.from_name(cid)
    template = template_for(cid, swap_roles)
    validate_witness(cid, template, witness, x0, y, f.domain, C)

    if cid.is_a:
        for n in range(1, depth + 1):
            w = witness["w"].term(n)
            if cone_interior_contains(C, -w):
                raise ConditionPreconditionError(cid.value, n, w)

    certificate = _base_certificate(cid, f, g, x0, y, C, swap_roles)
    certificate["nets"] = witness.to_json()
    for n in range(1, depth + 1):
        lead = witness["w"].term(n) if cid.is_a else g(x0, witness["z"].term(n))
        value = lead - _subtracted(template, n, f, g, x0, y, witness)
        if not cone_contains(C, -value):
            certificate.update({"index": n, "value": codec.vec_to_json(value)})
            return Verdict.fails("condition-membership", certificate)
    certificate["depth"] = depth
    return Verdict.holds("condition-membership", certificate)


def _describe_subcheck(subcheck):
    if subcheck.slot == "x":
        return "x -> {0}(x, y) a-usc at x0".format(subcheck.bifunction)
    return "z -> {0}(x0, z) a-usc at y".format(subcheck.bifunction)


def subchecks(template, f, g, x0, y, C, budget=DEFAULT_BUDGET):
    """
    Runs the a-usc requirements of the template.

    :returns: list of (description, Verdict)
    """
    results = []
    for subcheck in template.subchecks:
        F = _maps(f, g)[subcheck.bifunction]
        if subcheck.slot == "x":
            verdict = ausc_check(fix_second(F, y), x0, C, budget)
        else:
            verdict = ausc_check(fix_first(F, x0), y, C, budget)
        results.append((_describe_subcheck(subcheck), verdict))
    return results


def check_condition(cid, f, g, x0, y, C, witness=None, budget=DEFAULT_BUDGET, swap_roles=False):
    """
    Checks a transfer condition at (x0, y).

    Without a witness a bounded search runs first over constant and moving
    z-nets, or for the A-conditions over w-nets built from them. If it finds
    nothing, Fails is only reported with a bound that holds for every
    candidate net.
    """
    cid = ConditionId.from_name(cid)
    check_same_shape(f, g)
    f.domain.ensure_contains(x0)
    f.domain.ensure_contains(y)
    template = template_for(cid, swap_roles)

    if witness is None:
        return _search(cid, template, f, g, x0, y, C, budget, swap_roles)

    membership = membership_check(cid, f, g, x0, y, C, witness, budget.depth, swap_roles)
    if membership.is_fails:
        return Verdict.fails(membership.kind, membership.certificate, budget)

    notes = ["net {0} is eventually constant".format(name) for name in witness.constant_nets()]
    results = subchecks(template, f, g, x0, y, C, budget)
    for description, verdict in results:
        if verdict.is_fails:
            certificate = _base_certificate(cid, f, g, x0, y, C, swap_roles)
            certificate.update({"subcheck": description, "verdict": verdict.to_json()})
            return Verdict.fails("condition-subcheck", certificate, budget, notes=notes)

    certificate = dict(membership.certificate)
    certificate["subchecks"] = [{"subcheck": d, "verdict": v.to_json()} for d, v in results]
    if all(v.is_holds for _, v in results):
        return Verdict.holds("condition", certificate, budget, notes=notes)
    notes.extend("{0}: {1}".format(d, v.status) for d, v in results if v.is_consistent)
    return Verdict.consistent("condition", budget, notes=notes, certificate=certificate)


def check_condition_A(cid, f, g, x0, y, C, witness, budget=DEFAULT_BUDGET, swap_roles=False):
    """
    Checks one of the conditions (A1)-(A5) with an explicit witness including its w-net
    """
    cid = ConditionId.from_name(cid)
    if not cid.is_a:
        raise TemplateMismatchError("{0} is not one of the conditions A1-A5".format(cid.value))
    return check_condition(cid, f, g, x0, y, C, witness, budget, swap_roles)


def _candidate_nets(point, domain, budget):
    return [SequenceSpec.constant(point)] + generate_sequences(point, domain, budget)


def _z_candidates(domain, budget):
    """
    Returns the constant z-nets on the grid followed by the moving nets toward every grid point
    """
    grid = domain.grid_points()
    moving = [net for point in grid for net in generate_sequences(point, domain, budget)]
    return [SequenceSpec.constant(point) for point in grid] + moving


def _w_candidates(g, x0, C, z_nets, depth):
    """
    Returns candidate w-nets: zero, the images g(x0, z_n) of the z candidates, all outside of -int C
    """
    candidates = [SequenceSpec.constant(zero(C.dim))]
    seen = {tuple(zero(C.dim))}
    for z_net in z_nets:
        if z_net.is_constant():
            value = g(x0, z_net.limit_point)
            if tuple(value) in seen:
                continue
            seen.add(tuple(value))
            candidates.append(SequenceSpec.constant(value))
        else:
            candidates.append(ImageNet(g, (x0, z_net)))
    return [w for w in candidates if all(not cone_interior_contains(C, -w.term(n)) for n in range(1, depth + 1))]


def _lead_value(cid, g, x0, lead, n):
    return lead.term(n) if cid.is_a else g(x0, lead.term(n))


def _search(cid, template, f, g, x0, y, C, budget, swap_roles):
    domain = f.domain
    candidates = {"x0": _candidate_nets(x0, domain, budget), "y": _candidate_nets(y, domain, budget)}
    rounds = max(len(c) for c in candidates.values())
    z_nets = _z_candidates(domain, budget)
    if cid.is_a:
        lead_name, leads = "w", _w_candidates(g, x0, C, z_nets, budget.depth)
    else:
        lead_name, leads = "z", z_nets
    indices = range(1, budget.depth + 1)

    for index in range(rounds):
        nets = {}
        for name in template.nets:
            options = candidates[NET_TARGETS[name]]
            nets[name] = options[min(index, len(options) - 1)]
        partial = ConditionWitness.of(**nets)
        subtracted = [_subtracted(template, n, f, g, x0, y, partial) for n in indices]
        for lead in leads:
            if all(cone_contains(C, s - _lead_value(cid, g, x0, lead, n)) for n, s in zip(indices, subtracted)):
                nets[lead_name] = lead
                return check_condition(cid, f, g, x0, y, C, ConditionWitness.of(**nets), budget, swap_roles)

    obstruction = impossibility_bound(template, f, g, x0, y, C, lead=lead_name)
    if obstruction is not None:
        certificate = _base_certificate(cid, f, g, x0, y, C, swap_roles)
        certificate.update(obstruction)
        return Verdict.fails("condition-impossible", certificate, budget)
    return Verdict.consistent(
        "condition",
        budget,
        notes=("no witness found among {0} {1}-nets on {2} candidate rounds".format(len(leads), lead_name, rounds),),
    )


def _lead_lower_bound(g, x0, normal):
    lower = None
    for piece in fix_first(g, x0).pieces:
        parts = [(a, c) for a, c in zip(normal, piece.components) if a != 0]
        if any(c.depends_on("x") for _, c in parts):
            return None
        value = sum((a * c.evaluate({}) for a, c in parts), Fraction(0))
        lower = value if lower is None else min(lower, value)
    return lower


def _approach_upper_bound(h, point, normal):
    env = make_env(point)
    upper = None
    for piece in h.pieces:
        if not piece.region.closure_contains(env):
            continue
        parts = [(a, c) for a, c in zip(normal, piece.components) if a != 0]
        if any(c.has_pole_at(env) for _, c in parts):
            return None
        value = sum((a * c.evaluate(env) for a, c in parts), Fraction(0))
        upper = value if upper is None else max(upper, value)
    return upper


def _term_upper_bound(term, f, g, x0, y, normal):
    F = _maps(f, g)[term.bifunction]
    fixed = {"x0": x0, "y": y}
    if term.first in fixed and term.second in fixed:
        return normal.dot(F(fixed[term.first], fixed[term.second]))
    if term.first in fixed:
        return _approach_upper_bound(fix_first(F, fixed[term.first]), y, normal)
    return _approach_upper_bound(fix_second(F, fixed[term.second]), x0, normal)


def _term_uppers(template, f, g, x0, y, normal):
    uppers = []
    for term in template.terms:
        upper = _term_upper_bound(term, f, g, x0, y, normal)
        if upper is None:
            return None
        uppers.append(upper)
    return uppers


def impossibility_bound(template, f, g, x0, y, C, lead="z"):
    """
    Looks for a bound which refutes the membership eventually for every candidate net.

    The moving terms are bounded by the values of every piece whose closure
    contains the limit point. For the lead g(x0, z) a normal a with
    <a, g(x0, z) - value_n> > 0 is needed, where g(x0, .) is constant along a.
    A lead w outside of -int C has <a, w> >= 0 for some normal a, so every
    normal must bound the subtracted terms below zero.

    :returns: the certificate part or None
    """
    if lead == "w":
        cases = []
        for normal in C.normals:
            uppers = _term_uppers(template, f, g, x0, y, normal)
            if uppers is None or sum(uppers) >= 0:
                return None
            cases.append(
                {
                    "normal": codec.vec_to_json(normal),
                    "term_upper": [codec.rational_to_json(u) for u in uppers],
                    "bound": codec.rational_to_json(-sum(uppers)),
                }
            )
        return {"lead": lead, "normals": cases}

    for normal in C.normals:
        lower = _lead_lower_bound(g, x0, normal)
        if lower is None:
            continue
        uppers = _term_uppers(template, f, g, x0, y, normal)
        if uppers is None:
            continue
        bound = lower - sum(uppers)
        if bound > 0:
            return {
                "lead": lead,
                "normal": codec.vec_to_json(normal),
                "lead_lower": codec.rational_to_json(lower),
                "term_upper": [codec.rational_to_json(u) for u in uppers],
                "bound": codec.rational_to_json(bound),
            }
    return None


def _witness_at(witness, y):
    return witness(y) if callable(witness) else witness


def direct_perturbed_check(f, g, x0, domain, C):
    """
    Returns the first grid (y, value) with f(x0, y) + g(x0, y) in -int C or None
    """
    for y in domain.grid_points():
        value = f(x0, y) + g(x0, y)
        if cone_interior_contains(C, -value):
            return y, value
    return None


def transfer_check(f, g, x0, C, domain, cid, witness=None, budget=DEFAULT_BUDGET, swap_roles=False):
    """
    Checks whether a dual solution x0 transfers to the perturbed problem via a condition.

    :param witness: a ConditionWitness, a callable y -> ConditionWitness or None for a search
    """
    cid = ConditionId.from_name(cid)
    check_same_shape(f, g)
    points = domain.grid_points()
    certificate = {
        "condition": cid.value,
        "swap_roles": swap_roles,
        "x0": codec.vec_to_json(x0),
        "f": codec.map_to_json(f),
        "g": codec.map_to_json(g),
        "cone": codec.cone_to_json(C),
        "domain": codec.domain_to_json(domain),
    }

    for y in points:
        value = g(x0, y)
        if cone_interior_contains(C, -value):
            certificate.update(
                {
                    "reason": "x0 does not solve the dual problem",
                    "y": codec.vec_to_json(y),
                    "value": codec.vec_to_json(value),
                }
            )
            return Verdict.fails("transfer-precondition", certificate, budget)
    diagonal = f(x0, x0)
    if not cone_contains(C, diagonal):
        certificate.update({"reason": "f(x0, x0) is not in C", "value": codec.vec_to_json(diagonal)})
        return Verdict.fails("transfer-precondition", certificate, budget)

    direct = direct_perturbed_check(f, g, x0, domain, C)
    certificate["direct"] = {"solved": direct is None}
    if direct is not None:
        certificate["direct"].update({"y": codec.vec_to_json(direct[0]), "value": codec.vec_to_json(direct[1])})

    cases = []
    undecided = False
    for y in points:
        if y == x0:
            continue
        verdict = check_condition(cid, f, g, x0, y, C, _witness_at(witness, y), budget, swap_roles)
        if verdict.is_fails:
            certificate.update({"y": codec.vec_to_json(y), "case": verdict.to_json()})
            return Verdict.fails("transfer-condition-failure", certificate, budget)
        undecided = undecided or verdict.is_consistent
        cases.append({"y": codec.vec_to_json(y), "verdict": verdict.to_json()})

    certificate["cases"] = cases
    if undecided:
        notes = ("some condition checks are undecided",)
        return Verdict.consistent("transfer", budget, notes=notes, certificate=certificate)
    if direct is not None:
        raise TransferDiscrepancyError(x0, *direct)
    return Verdict.holds("transfer", certificate, budget)


#: sampled t in ]0, 1[ of the segment corollary
DEFAULT_T_GRID = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def segment_point(x0, y, t):
    return x0 * (1 - t) + y * t


def _maximum_at_one(f, g, x0, y, C, t_grid):
    def phi(t):
        point = segment_point(x0, y, t)
        return g(x0, point) - f(point, y)

    top = phi(Fraction(1))
    return all(cone_contains(C, top - phi(t)) for t in (Fraction(0),) + tuple(t_grid))


def _limit_route(f, g, x0, y, C):
    """
    Decides condition (iii) at y: "hemicontinuous" if f(x_t, y) -> f(x0, y) as t -> 0,
    "conclusion" if f(x0, y) + g(x0, y) lies outside -int C anyway, None if (iii) fails
    """
    seq = SequenceSpec.toward(x0, y - x0)
    try:
        limit = map_limit_along(fix_second(f, y), seq)
    except symbolic.UndecidedLimit:
        limit = None
    if limit is not None and tuple(limit) == tuple(f(x0, y)):
        return "hemicontinuous"
    if not_in_neg_interior(C, f(x0, y) + g(x0, y)):
        return "conclusion"
    return None


def segment_corollary_check(f, g, x0, C, domain=None, t_grid=DEFAULT_T_GRID, budget=DEFAULT_BUDGET):
    """
    Checks the segment corollary: x0 solves the dual problem, f(x, x) in C,
    a grid z exists for every (t, y) and the limit t -> 0 condition holds.
    """
    check_same_shape(f, g)
    domain = domain or g.domain
    points = domain.grid_points()
    certificate = {
        "x0": codec.vec_to_json(x0),
        "f": codec.map_to_json(f),
        "g": codec.map_to_json(g),
        "cone": codec.cone_to_json(C),
        "domain": codec.domain_to_json(domain),
        "t_grid": [codec.rational_to_json(t) for t in t_grid],
    }

    for y in points:
        value = g(x0, y)
        if cone_interior_contains(C, -value):
            certificate.update(
                {
                    "reason": "x0 does not solve the dual problem",
                    "y": codec.vec_to_json(y),
                    "value": codec.vec_to_json(value),
                }
            )
            return Verdict.fails("segment-precondition", certificate, budget)
    for x in points:
        if not cone_contains(C, f(x, x)):
            certificate.update({"reason": "f(x, x) is not in C", "x": codec.vec_to_json(x)})
            return Verdict.fails("segment-precondition", certificate, budget)

    cases = []
    for y in points:
        if y == x0:
            continue
        base = g(x0, y)
        route = "maximum-at-1" if _maximum_at_one(f, g, x0, y, C, t_grid) else "grid-search"
        witnesses = []
        for t in t_grid:
            point = segment_point(x0, y, t)
            target = f(point, y) + base
            if route == "maximum-at-1" and cone_contains(C, target - g(x0, point)):
                z = point
            else:
                z = next((z for z in points if cone_contains(C, target - g(x0, z))), None)
            if z is None:
                certificate.update({"y": codec.vec_to_json(y), "t": codec.rational_to_json(t), "reason": "no grid z"})
                return Verdict.fails("segment-no-z", certificate, budget)
            witnesses.append({"t": codec.rational_to_json(t), "z": codec.vec_to_json(z)})

        limit_route = _limit_route(f, g, x0, y, C)
        if limit_route is None:
            certificate.update({"y": codec.vec_to_json(y), "value": codec.vec_to_json(f(x0, y) + base)})
            return Verdict.fails("segment-limit", certificate, budget)
        cases.append({"y": codec.vec_to_json(y), "route": route, "witnesses": witnesses, "limit": limit_route})

    certificate["cases"] = cases
    return Verdict.holds("segment-corollary", certificate, budget)
