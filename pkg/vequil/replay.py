"""
This module replays the certificates of a run report through the exact kernel.

Every certificate kind has a replayer registered with ``@replayer(kind)``.
A replayer receives the certificate and the sampling budget of its verdict
and returns None if the certificate verifies or ``(index, reason)`` for the
first entry which does not. Index 0 stands for a claim which is not indexed.
"""

from collections import namedtuple

from singleton import singleton

from .exceptions import VequilError
from .conditions import ConditionId, ConditionWitness, membership_check, impossibility_bound, template_for
from .conditions import segment_corollary_check, transfer_check
from .equilibrium import SolutionReport, diagonal_check, remark_r1_check, coercivity_check, extend_solution
from .existence import existence_probe
from .maps import c_convex_check, fix_second
from .ordered_space import cone_contains, cone_interior_contains, not_in_neg_interior
from .semicontinuity import reduction_violation, verify_ausc_witness, is_continuous_at, wusc_obstruction
from .levelsets import eventually_member
from .sequences import net_from_json, witness_from_json
from .verdict import Verdict, Status, DEFAULT_BUDGET
from . import codec
from . import symbolic

#: outcome of one replayed result
ReplayOutcome = namedtuple("ReplayOutcome", ["problem", "sentence", "kind", "mismatch"])


@singleton()
class ReplayRegistry(object):
    """
    Registry of the certificate replayers by kind
    """

    def __init__(self):
        self._replayers = {}

    def register(self, kind, func):
        if kind in self._replayers:
            raise VequilError("Cannot register replayer for kind '{0}' because it already exists".format(kind))
        self._replayers[kind] = func

    def __contains__(self, kind):
        return kind in self._replayers

    def get(self, kind):
        if kind not in self._replayers:
            raise VequilError("No replayer for certificate kind '{0}'".format(kind))
        return self._replayers[kind]

    @property
    def kinds(self):
        return sorted(self._replayers)


def replayer(*kinds):
    """
    Registers the decorated function as the replayer of the given kinds
    """

    def _decorator(func):
        for kind in kinds:
            ReplayRegistry().register(kind, func)
        return func

    return _decorator


def replay_verdict(data):
    """
    Replays a verdict in its JSON form.

    ConsistentUpToSampling verdicts replay what they carry: their cases or
    the certified part of their kind.

    :returns: None or (index, reason)
    """
    verdict = Verdict.from_json(data)
    if verdict.is_consistent and not verdict.certificate:
        return None
    budget = verdict.budget or DEFAULT_BUDGET
    if verdict.is_consistent and (verdict.kind not in ReplayRegistry() or "cases" in verdict.certificate):
        return _replay_cases(verdict.certificate.get("cases", []))
    return ReplayRegistry().get(verdict.kind)(verdict.certificate, budget, verdict.status)


def replay_result(data):
    """
    Replays any task result in its JSON form
    """
    kind = data.get("type")
    if kind == "verdict":
        return replay_verdict(data)
    if kind == "solution-report":
        mismatch = SolutionReport.from_json(data).first_mismatch()
        return None if mismatch is None else (mismatch, "entry does not verify")
    return None


def has_certificate(data):
    if data.get("type") == "solution-report":
        return True
    return data.get("type") == "verdict" and bool(data.get("certificate"))


def replay_report(report):
    """
    Replays every certificate of the given report

    :returns: list of ReplayOutcome in report order
    """
    from .report import iter_results

    outcomes = []
    for problem, sentence, result in iter_results(report):
        if not has_certificate(result):
            continue
        try:
            mismatch = replay_result(result)
        except (VequilError, KeyError, TypeError, ValueError) as e:
            mismatch = (0, "certificate cannot be replayed: {0}".format(e))
        outcomes.append(ReplayOutcome(problem, sentence, result.get("kind", result.get("type")), mismatch))
    return outcomes


def _replay_cases(cases):
    """
    Replays nested results; entries like ``{"y": ..., "verdict": ...}`` replay their verdict
    """
    for index, case in enumerate(cases, start=1):
        if isinstance(case, dict) and "verdict" in case:
            case = case["verdict"]
        if not isinstance(case, dict) or "type" not in case:
            continue
        mismatch = replay_result(case)
        if mismatch is not None:
            return index, "case {0}: {1}".format(index, mismatch[1])
    return None


def _context(certificate):
    return (
        codec.map_from_json(certificate["map"]),
        codec.vec_from_json(certificate["x0"]),
        codec.cone_from_json(certificate["cone"]),
    )


def _recomputed(expected_status, verdict, certificate):
    """
    Compares a recomputed deterministic verdict with the stored certificate
    """
    if verdict.status is not expected_status:
        return 0, "recomputed status is {0}".format(verdict.status)
    if verdict.certificate != certificate:
        return 0, "recomputed certificate differs"
    return None


@replayer("ausc-infeasible")
def replay_ausc_infeasible(certificate, budget, status):
    h, x0, C = _context(certificate)
    seq = net_from_json(certificate["sequence"])
    try:
        violation = reduction_violation(h, x0, seq, C)
    except symbolic.UndecidedLimit as e:
        return 0, "undecided limit: {0}".format(e)
    if violation is None:
        return 0, "no normal exceeds its bound"
    if codec.vec_to_json(violation[0]) != certificate["normal"]:
        return 0, "first violated normal is {0}".format(violation[0])
    return None


@replayer("ausc-witness")
def replay_ausc_witness(certificate, budget, status):
    h, x0, C = _context(certificate)
    seq = net_from_json(certificate["sequence"])
    witness = witness_from_json(certificate["witness"])
    return verify_ausc_witness(h, x0, seq, witness, C, certificate["depth"])


@replayer("ausc-continuous")
def replay_ausc_continuous(certificate, budget, status):
    h, x0, _ = _context(certificate)
    for index, case in enumerate(certificate["cases"], start=1):
        mismatch = replay_ausc_witness(case, budget, status)
        if mismatch is not None:
            return index, "case {0}: {1}".format(index, mismatch[1])
    if not is_continuous_at(h, x0, budget):
        return 0, "map is not continuous along every generated sequence"
    return None


@replayer("cusc-refutation")
def replay_cusc_refutation(certificate, budget, status):
    h, x0, C = _context(certificate)
    h0 = h(x0)
    entries = certificate["entries"]
    for index, entry in enumerate(entries, start=1):
        radius = codec.rational_from_json(entry["radius"])
        k = codec.vec_from_json(entry["k"])
        u = codec.vec_from_json(entry["u"])
        if radius != budget.radii()[index - 1]:
            return index, "radius {0} is not the scheduled one".format(entry["radius"])
        if not cone_interior_contains(C, k):
            return index, "k = {0} is not in int C".format(k)
        if (u - x0).norm_inf() > radius or not h.domain.contains(u):
            return index, "u = {0} is not within the radius".format(u)
        residual = k + h0 - h(u)
        if codec.vec_to_json(residual) != entry["residual"] or cone_interior_contains(C, residual):
            return index, "residual {0} lies in int C".format(residual)
    if len(entries) != len(budget.radii()):
        return len(entries) + 1, "the radius schedule is incomplete"
    return None


@replayer("qusc-refutation")
def replay_qusc_refutation(certificate, budget, status):
    h, x0, C = _context(certificate)
    k = codec.vec_from_json(certificate["k"])
    if cone_contains(C, k + h(x0)):
        return 0, "k + h(x0) lies in C"
    entries = certificate["entries"]
    for index, entry in enumerate(entries, start=1):
        radius = codec.rational_from_json(entry["radius"])
        u = codec.vec_from_json(entry["u"])
        if (u - x0).norm_inf() > radius or not h.domain.contains(u):
            return index, "u = {0} is not within the radius".format(u)
        if not cone_contains(C, k + h(u)):
            return index, "k + h(u) = {0} is not in C".format(k + h(u))
    if len(entries) != len(budget.radii()):
        return len(entries) + 1, "the radius schedule is incomplete"
    return None


@replayer("wusc-obstruction")
def replay_wusc_obstruction(certificate, budget, status):
    h, x0, C = _context(certificate)
    obstruction = wusc_obstruction(h, x0, C)
    stored = {key: certificate[key] for key in ("normal", "bound", "pieces")}
    if obstruction != stored:
        return 0, "recomputed obstruction differs"
    return None


@replayer("closedness-refutation")
def replay_closedness_refutation(certificate, budget, status):
    g = codec.map_from_json(certificate["map"])
    y = codec.vec_from_json(certificate["y"])
    C = codec.cone_from_json(certificate["cone"])
    anchor = codec.vec_from_json(certificate["anchor"])
    seq = net_from_json(certificate["sequence"])

    value = g(anchor, y)
    if codec.vec_to_json(value) != certificate["value"] or not cone_interior_contains(C, -value):
        return 0, "the limit {0} lies in G(y)".format(anchor)
    if tuple(seq.limit()) != tuple(anchor):
        return 0, "the sequence does not tend to {0}".format(anchor)
    h = fix_second(g, y)
    for n in range(1, certificate["depth"] + 1):
        if not not_in_neg_interior(C, h(seq.term(n))):
            return n, "term {0} lies outside of G(y)".format(seq.term(n))
    if not eventually_member(h, seq, C):
        return 0, "the sequence does not stay in G(y)"
    return None


@replayer("diagonal", "diagonal-violation")
def replay_diagonal(certificate, budget, status):
    h = codec.map_from_json(certificate["map"])
    C = codec.cone_from_json(certificate["cone"])
    domain = codec.domain_from_json(certificate["domain"])
    return _recomputed(status, diagonal_check(h, domain, C, certificate["mode"]), certificate)


@replayer("remark-r1", "remark-r1-violation")
def replay_remark_r1(certificate, budget, status):
    f = codec.map_from_json(certificate["f"])
    g = codec.map_from_json(certificate["g"])
    C = codec.cone_from_json(certificate["cone"])
    domain = codec.domain_from_json(certificate["domain"])
    return _recomputed(status, remark_r1_check(f, g, domain, C), certificate)


@replayer("c-convex-affine", "c-convex-triple")
def replay_c_convex(certificate, budget, status):
    F = codec.map_from_json(certificate["map"])
    C = codec.cone_from_json(certificate["cone"])
    x = codec.vec_from_json(certificate["x"])
    return _recomputed(status, c_convex_check(F, x, C, certificate["samples"]), certificate)


@replayer("coercivity", "coercivity-empty-core", "coercivity-uncovered")
def replay_coercivity(certificate, budget, status):
    h = codec.map_from_json(certificate["map"])
    C = codec.cone_from_json(certificate["cone"])
    K = codec.domain_from_json(certificate["K"])
    K0 = codec.domain_from_json(certificate["K0"])
    return _recomputed(status, coercivity_check(h, K, K0, C), certificate)


@replayer("extend-solution", "extend-solution-precondition", "extend-solution-violation")
def replay_extend_solution(certificate, budget, status):
    g = codec.map_from_json(certificate["map"])
    C = codec.cone_from_json(certificate["cone"])
    x0 = codec.vec_from_json(certificate["x0"])
    K = codec.domain_from_json(certificate["K"])
    K0 = codec.domain_from_json(certificate["K0"])
    return _recomputed(status, extend_solution(g, x0, K, K0, C), certificate)


def _condition_context(certificate):
    return (
        ConditionId.from_name(certificate["condition"]),
        codec.map_from_json(certificate["f"]),
        codec.map_from_json(certificate["g"]),
        codec.vec_from_json(certificate["x0"]),
        codec.vec_from_json(certificate["y"]),
        codec.cone_from_json(certificate["cone"]),
        certificate["swap_roles"],
    )


def _replay_membership(certificate, status):
    cid, f, g, x0, y, C, swap_roles = _condition_context(certificate)
    witness = ConditionWitness.of(**{name: net_from_json(net) for name, net in certificate["nets"].items()})
    depth = certificate.get("depth", certificate.get("index"))
    verdict = membership_check(cid, f, g, x0, y, C, witness, depth, swap_roles)
    if verdict.status is not status:
        return verdict.certificate.get("index", 0), "membership recomputes to {0}".format(verdict.status)
    if verdict.certificate.get("index") != certificate.get("index"):
        return verdict.certificate.get("index", 0), "membership fails at another index"
    return None


@replayer("condition-membership")
def replay_condition_membership(certificate, budget, status):
    return _replay_membership(certificate, status)


@replayer("condition")
def replay_condition(certificate, budget, status):
    membership = {k: v for k, v in certificate.items() if k != "subchecks"}
    mismatch = _replay_membership(membership, Status.HOLDS)
    if mismatch is not None:
        return mismatch
    return _replay_cases([entry["verdict"] for entry in certificate["subchecks"]])


@replayer("condition-subcheck")
def replay_condition_subcheck(certificate, budget, status):
    return replay_verdict(certificate["verdict"])


@replayer("condition-impossible")
def replay_condition_impossible(certificate, budget, status):
    cid, f, g, x0, y, C, swap_roles = _condition_context(certificate)
    bound = impossibility_bound(template_for(cid, swap_roles), f, g, x0, y, C, certificate.get("lead", "z"))
    if bound is None or any(certificate.get(key) != value for key, value in bound.items()):
        return 0, "recomputed bound differs"
    return None


def _transfer_context(certificate):
    return (
        codec.map_from_json(certificate["f"]),
        codec.map_from_json(certificate["g"]),
        codec.vec_from_json(certificate["x0"]),
        codec.cone_from_json(certificate["cone"]),
        codec.domain_from_json(certificate["domain"]),
    )


@replayer("transfer-precondition")
def replay_transfer_precondition(certificate, budget, status):
    f, g, x0, C, domain = _transfer_context(certificate)
    if "y" in certificate:
        value = g(x0, codec.vec_from_json(certificate["y"]))
        if not cone_interior_contains(C, -value):
            return 0, "g(x0, y) = {0} is not in -int C".format(value)
        return None
    if cone_contains(C, f(x0, x0)):
        return 0, "f(x0, x0) lies in C"
    return None


@replayer("transfer", "transfer-condition-failure")
def replay_transfer(certificate, budget, status):
    f, g, x0, C, domain = _transfer_context(certificate)
    for y in domain.grid_points():
        if cone_interior_contains(C, -g(x0, y)):
            return 0, "x0 does not solve the dual problem"
    if not cone_contains(C, f(x0, x0)):
        return 0, "f(x0, x0) is not in C"
    if "case" in certificate:
        return replay_verdict(certificate["case"])
    mismatch = _replay_cases(certificate["cases"])
    if mismatch is not None or status is not Status.HOLDS:
        return mismatch
    for y in domain.grid_points():
        if cone_interior_contains(C, -(f(x0, y) + g(x0, y))):
            return 0, "x0 does not solve the perturbed problem at y = {0}".format(y)
    return None


@replayer("segment-corollary", "segment-precondition", "segment-no-z", "segment-limit")
def replay_segment(certificate, budget, status):
    f, g, x0, C, domain = _transfer_context(certificate)
    t_grid = tuple(codec.rational_from_json(t) for t in certificate["t_grid"])
    return _recomputed(status, segment_corollary_check(f, g, x0, C, domain, t_grid, budget), certificate)


@replayer("existence-solution")
def replay_existence_solution(certificate, budget, status):
    g = codec.map_from_json(certificate["map"])
    C = codec.cone_from_json(certificate["cone"])
    domain = codec.domain_from_json(certificate["domain"])
    x0 = codec.vec_from_json(certificate["x0"])
    for index, y in enumerate(domain.grid_points(), start=1):
        if cone_interior_contains(C, -g(x0, y)):
            return index, "g(x0, {0}) lies in -int C".format(y)
    return None


@replayer("existence-trace")
def replay_existence_trace(certificate, budget, status):
    g = codec.map_from_json(certificate["map"])
    C = codec.cone_from_json(certificate["cone"])
    domain = codec.domain_from_json(certificate["domain"])
    for index, claim in enumerate(certificate["claims"], start=1):
        value = g(codec.vec_from_json(claim["x"]), codec.vec_from_json(claim["y"]))
        if codec.vec_to_json(value) != claim["value"] or not cone_interior_contains(C, -value):
            return index, "claim g(x, y) in -int C does not hold"
    return _recomputed(status, existence_probe(g, domain, C), certificate)


@replayer("existence-theorem")
def replay_existence_theorem(certificate, budget, status):
    return _replay_cases(list(certificate["steps"].values()))


@replayer("existence-hypotheses")
def replay_aggregate(certificate, budget, status):
    if "case" in certificate:
        mismatch = replay_verdict(certificate["case"])
        return None if mismatch is None else (certificate["index"] + 1, mismatch[1])
    return _replay_cases(certificate.get("cases", []))
