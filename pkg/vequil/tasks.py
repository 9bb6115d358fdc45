"""
This module provides the built-in task definitions.

Every task definition receives the Task as first argument and the
arguments matched from its sentence as keyword arguments. It returns a
Verdict, a SolutionReport or a ValueResult.
"""

from .taskregistry import task
from .task import ValueResult
from .exceptions import SequenceError
from .ordered_space import cone_validate, cone_contains, cone_interior_contains, not_in_neg_interior, rational
from .maps import fix_second, sum_maps, c_convex_check
from .semicontinuity import NOTIONS, ausc_along, ausc_sum_along, ousc_verify_certificate
from .sequences import WitnessSpec
from .levelsets import level_set, closedness_probe
from .equilibrium import solve_dual, solve_perturbed, diagonal_check, remark_r1_check
from .equilibrium import core_relative, coercivity_check, extend_solution
from .conditions import check_condition, transfer_check, segment_corollary_check, DEFAULT_T_GRID, ConditionId
from .existence import existence_probe, existence_theorem_check


def _cone(task):
    return task.problem.effective_cone


def _box(task, box):
    return task.problem.sub_domain(box.lower, box.upper, box.grid)


def _witness_net(task, name, names=None):
    """
    Returns the witness of the net ``name``: the net and its finite limit
    """
    net = task.net(name, names)
    limit = net.finite_limit()
    if limit is None:
        raise SequenceError("the witness net {0} has no finite limit".format(net))
    return WitnessSpec(net, limit)


def _condition_witness(task, x0=None):
    """
    Returns a callable y -> ConditionWitness for the declared nets or None without nets
    """
    if not task.nets:
        return None

    def _witness(y):
        names = {"y": y}
        if x0 is not None:
            names["x0"] = x0
        return task.witness(names)

    return _witness


def _unary(task, name, y=None):
    F = task.problem.map(name)
    return F if y is None else fix_second(F, y)


# validate-cone


@task("validate cone", verb="validate-cone")
def validate_cone(task):
    report = cone_validate(_cone(task))
    notes = (report.reason,) if report.reason else ("rank {0}".format(report.rank),)
    return ValueResult("cone-validation", report.valid, payload=report, notes=notes)


@task("cone contains {z:Vector}", verb="validate-cone")
def cone_contains_point(task, z):
    return ValueResult("cone-contains", cone_contains(_cone(task), z))


@task("cone interior contains {z:Vector}", verb="validate-cone")
def cone_interior_contains_point(task, z):
    return ValueResult("cone-interior-contains", cone_interior_contains(_cone(task), z))


@task("not in negative interior {z:Vector}", verb="validate-cone")
def not_in_negative_interior(task, z):
    return ValueResult("not-in-negative-interior", not_in_neg_interior(_cone(task), z))


# eval


@task("eval {map:Name} at {x:Vector}", verb="eval")
def evaluate_unary(task, map, x):  # pylint: disable=redefined-builtin
    return ValueResult("value", task.problem.map(map)(x))


@task("eval {map:Name} at {x:Vector} and {y:Vector}", verb="eval")
def evaluate_bifunction(task, map, x, y):  # pylint: disable=redefined-builtin
    return ValueResult("value", task.problem.map(map)(x, y))


@task("eval sum {f:Name} + {g:Name} at {x:Vector} and {y:Vector}", verb="eval")
def evaluate_sum(task, f, g, x, y):
    return ValueResult("value", sum_maps(task.problem.map(f), task.problem.map(g))(x, y))


@task("c-convex {map:Name} at {x:Vector}", verb="eval")
def c_convex(task, map, x):  # pylint: disable=redefined-builtin
    return c_convex_check(task.problem.map(map), x, _cone(task))


# semicont


def _notion_check(task, notion, h, x):
    C = _cone(task)
    if notion != "w-usc":
        return NOTIONS[notion](h, x, C, task.budget)

    seeds = []
    if "x" in task.nets:
        names = {"x0": x}
        witness = _witness_net(task, "z", names) if "z" in task.nets else None
        seeds.append((task.net("x", names), witness))
    return NOTIONS[notion](h, x, C, task.budget, seeds)


@task("{notion:Notion} of {map:Name} at {x:Vector}", verb="semicont")
def notion_at(task, notion, map, x):  # pylint: disable=redefined-builtin
    return _notion_check(task, notion, _unary(task, map), x)


@task("{notion:Notion} of {map:Name} with y = {y:Vector} at {x:Vector}", verb="semicont")
def notion_with_y_at(task, notion, map, y, x):  # pylint: disable=redefined-builtin
    return _notion_check(task, notion, _unary(task, map, y), x)


def _along(task, h, x, net):
    names = {"x0": x}
    witness = _witness_net(task, "z", names) if "z" in task.nets else None
    return ausc_along(h, x, task.net(net, names), _cone(task), task.budget, witness)


@task("a-usc of {map:Name} at {x:Vector} along {net:Name}", verb="semicont")
def ausc_of_along(task, map, x, net):  # pylint: disable=redefined-builtin
    return _along(task, _unary(task, map), x, net)


@task("a-usc of {map:Name} with y = {y:Vector} at {x:Vector} along {net:Name}", verb="semicont")
def ausc_of_with_y_along(task, map, y, x, net):  # pylint: disable=redefined-builtin
    return _along(task, _unary(task, map, y), x, net)


@task("a-usc of sum {f:Name} + {g:Name} with y = {y:Vector} at {x:Vector} along {net:Name}", verb="semicont")
def ausc_of_sum_along(task, f, g, y, x, net):
    seq = task.net(net, {"x0": x})
    return ausc_sum_along(_unary(task, f, y), _unary(task, g, y), x, seq, _cone(task), task.budget)


@task("o-usc certificate of {map:Name} at {x:Vector}", verb="semicont")
def ousc_certificate(task, map, x):  # pylint: disable=redefined-builtin
    names = {"x0": x}
    verified = ousc_verify_certificate(
        _unary(task, map),
        x,
        _cone(task),
        task.net("x", names),
        task.net("z", names),
        task.net("w", names),
        task.budget.depth,
    )
    return ValueResult("o-usc-certificate", verified, notes=("depth {0}".format(task.budget.depth),))


# levelset


@task("level set of {g:Name} at y = {y:Vector}", verb="levelset")
def level_set_at(task, g, y):
    G = level_set(task.problem.map(g), y, _cone(task))
    return ValueResult("level-set", G, payload=G)


@task("closedness of {g:Name} at y = {y:Vector}", verb="levelset")
def closedness_at(task, g, y):
    return closedness_probe(task.problem.map(g), y, _cone(task), None, task.budget)


# solve


@task("solve dual {g:Name}", verb="solve")
def solve_dual_problem(task, g):
    G = task.problem.map(g)
    return solve_dual(G, G.domain, _cone(task))


@task("solve perturbed {f:Name} + {g:Name}", verb="solve")
def solve_perturbed_problem(task, f, g):
    G = task.problem.map(g)
    return solve_perturbed(task.problem.map(f), G, G.domain, _cone(task))


@task("diagonal {mode:Mode} {h:Name}", verb="solve")
def diagonal(task, mode, h):
    H = task.problem.map(h)
    return diagonal_check(H, H.domain, _cone(task), mode)


@task("sum diagonal {f:Name} + {g:Name}", verb="solve")
def sum_diagonal(task, f, g):
    G = task.problem.map(g)
    return remark_r1_check(task.problem.map(f), G, G.domain, _cone(task))


# check-condition


@task("check {cond:Condition} for {f:Name} and {g:Name} at {x0:Vector} with y = {y:Vector}", verb="check-condition")
def check_condition_at(task, cond, f, g, x0, y):
    return check_condition(
        cond,
        task.problem.map(f),
        task.problem.map(g),
        x0,
        y,
        _cone(task),
        task.witness({"x0": x0, "y": y}),
        task.budget,
        task.flag("swap"),
    )


@task("transfer {cond:Condition} for {f:Name} and {g:Name} at {x0:Vector}", verb="check-condition")
def transfer(task, cond, f, g, x0):
    G = task.problem.map(g)
    return transfer_check(
        task.problem.map(f),
        G,
        x0,
        _cone(task),
        G.domain,
        cond,
        _condition_witness(task, x0),
        task.budget,
        task.flag("swap"),
    )


@task("segment corollary for {f:Name} and {g:Name} at {x0:Vector}", verb="check-condition")
def segment_corollary(task, f, g, x0):
    t_grid = DEFAULT_T_GRID
    if "t-grid" in task.keys:
        t_grid = tuple(rational(t) for t in task.keys["t-grid"].replace(",", " ").split())
    G = task.problem.map(g)
    return segment_corollary_check(task.problem.map(f), G, x0, _cone(task), G.domain, t_grid, task.budget)


# coercivity


@task("core of {box:Box}", verb="coercivity")
def core_of(task, box):
    core = core_relative(task.problem.effective_domain, _box(task, box))
    return ValueResult("core", core, payload=core)


@task("coercivity of {h:Name} on {box:Box}", verb="coercivity")
def coercivity(task, h, box):
    H = task.problem.map(h)
    return coercivity_check(H, H.domain, _box(task, box), _cone(task))


@task("extend {x0:Vector} of {g:Name} from {box:Box}", verb="coercivity")
def extend(task, x0, g, box):
    G = task.problem.map(g)
    return extend_solution(G, x0, G.domain, _box(task, box), _cone(task))


# probe


@task("existence probe {g:Name}", verb="probe")
def probe(task, g):
    G = task.problem.map(g)
    return existence_probe(G, G.domain, _cone(task))


@task("existence theorem for {f:Name} and {g:Name} on {box:Box}", verb="probe")
def existence_theorem(task, f, g, box):
    G = task.problem.map(g)
    condition = ConditionId.from_name(task.keys["condition"]) if "condition" in task.keys else None
    return existence_theorem_check(
        task.problem.map(f),
        G,
        G.domain,
        _box(task, box),
        _cone(task),
        task.budget,
        condition,
        _condition_witness(task),
        task.flag("on-sum"),
    )
