"""
This module provides the semicontinuity checks of unary maps at a point.

The a-usc check along a single sequence is exact: a witness net exists iff
for every cone normal a_j the limsup of <a_j, h(x_n)> does not exceed
<a_j, h(x0)>. Before this reduction is trusted it is compared against a
brute-force witness grid oracle on every catalog sequence.
"""

import itertools
from fractions import Fraction

from .exceptions import SequenceError, ReductionOracleMismatchError
from .maps import make_env, sum_maps, check_same_shape
from .ordered_space import RationalVec, cone_contains, cone_interior_contains, extreme_rays
from .sequences import SequenceSpec, ImageNet, SumNet, WitnessSpec, generate_sequences, eventual_expressions
from .sequences import map_limit_along, witness_from_json
from .verdict import Verdict, DEFAULT_BUDGET
from . import catalog
from . import codec
from . import symbolic

#: index at which the witness oracle measures the tail distance
ORACLE_DEPTH = 64

#: largest normalized tail distance the oracle accepts
ORACLE_TOLERANCE = Fraction(1, 8)

_validated_budgets = set()


def context(h, x0, C):
    """
    Returns the certificate part which makes a certificate self-contained
    """
    return {"map": codec.map_to_json(h), "x0": codec.vec_to_json(x0), "cone": codec.cone_to_json(C)}


def axis_directions(dim):
    """
    Returns +e1, -e1, +e2, -e2, ...
    """
    directions = []
    for axis in range(dim):
        for sign in (1, -1):
            directions.append(RationalVec(tuple(sign if i == axis else 0 for i in range(dim))))
    return directions


def _check_unary(h):
    if h.is_bifunction:
        raise ValueError("semicontinuity checks need a unary map, '{0}' is a bifunction".format(h.label))


def _check_limit(seq, x0):
    if tuple(seq.limit()) != tuple(x0):
        raise SequenceError("sequence {0} does not tend to {1}".format(seq, x0))


def reduction_violation(h, x0, seq, C):
    """
    Returns the first normal whose limsup along the sequence exceeds its bound.

    :returns: (normal, limsup, bound) or None if a witness exists
    :raises UndecidedLimit: if sympy cannot decide a limit
    """
    expressions = eventual_expressions(h, (seq,))
    h0 = h(x0)
    for normal in C.normals:
        combined = sum(symbolic.to_sympy(a) * e for a, e in zip(normal, expressions) if a != 0)
        limsup = symbolic.limit_at_infinity(combined)
        bound = normal.dot(h0)
        if limsup == symbolic.PLUS_INFINITY or (not isinstance(limsup, str) and limsup > bound):
            return normal, limsup, bound
    return None


def witness_oracle(h, x0, seq, C, budget=DEFAULT_BUDGET):
    """
    Searches a witness limit z on the grid h(x0) + (radius/density) * i.

    A grid point qualifies if h(x0) - z lies in C and the normalized distance
    of z to h(x_N) + C is at most the oracle tolerance.

    :returns: the first qualifying z or None
    """
    depth = max(budget.depth, ORACLE_DEPTH)
    h0 = h(x0)
    tail = h(seq.term(depth))
    spacing = Fraction(budget.radius, budget.density)
    steps = range(-budget.density, budget.density + 1)
    for offset in itertools.product(steps, repeat=h.codomain_dim):
        z = h0 + RationalVec(tuple(spacing * s for s in offset))
        if not cone_contains(C, h0 - z):
            continue
        distance = max(max(normal.dot(tail - z), 0) / sum(abs(a) for a in normal) for normal in C.normals)
        if distance <= ORACLE_TOLERANCE:
            return z
    return None


def validate_reduction(budget=DEFAULT_BUDGET):
    """
    Compares the limit reduction with the witness oracle on every catalog sequence
    """
    for truth in catalog.GROUND_TRUTH:
        h, x0, C = catalog.ground_truth_map(truth)
        for seq in generate_sequences(x0, h.domain, budget):
            try:
                violated = reduction_violation(h, x0, seq, C) is not None
            except symbolic.UndecidedLimit:
                continue
            feasible = witness_oracle(h, x0, seq, C, budget) is not None
            if feasible == violated:
                raise ReductionOracleMismatchError("{0} at {1} along {2}".format(h.label, x0, seq))
    return True


def ensure_reduction_validated(budget=DEFAULT_BUDGET):
    if budget not in _validated_budgets:
        validate_reduction(budget)
        _validated_budgets.add(budget)


def verify_ausc_witness(h, x0, seq, witness, C, depth):
    """
    Replays an explicit a-usc witness.

    :returns: None if it verifies, else (index, reason) where index 0 stands for the limit clause
    """
    try:
        witness.validate()
    except SequenceError as e:
        return 0, str(e)
    h0 = h(x0)
    if not cone_contains(C, h0 - witness.limit_point):
        return 0, "h(x0) - z = {0} is not in C".format(h0 - witness.limit_point)
    for n in range(1, depth + 1):
        value = witness.term(n) - h(seq.term(n))
        if not cone_contains(C, value):
            return n, "z_n - h(x_n) = {0} is not in C".format(value)
    return None


def _construct_witness(h, x0, seq, C, depth):
    image = ImageNet(h, (seq,))
    limit = image.finite_limit()
    if limit is not None:
        return WitnessSpec(image, limit)

    # some coordinate diverges: keep h(x_n) until h(x0) - h(x_n) stays in C
    h0 = h(x0)
    expressions = image.symbolic()
    for normal in C.normals:
        combined = sum(symbolic.to_sympy(a) * e for a, e in zip(normal, expressions) if a != 0)
        if symbolic.eventual_sign(combined - symbolic.to_sympy(normal.dot(h0))) > 0:
            return None
    start = 1
    for n in range(1, depth + 1):
        if not cone_contains(C, h0 - h(seq.term(n))):
            start = n + 1
    prefix = tuple(h(seq.term(n)) for n in range(1, start))
    net = SequenceSpec(SequenceSpec.constant(h0).coords, h0, prefix, allow_limit_terms=True)
    return WitnessSpec(net, h0)


def ausc_along(h, x0, seq, C, budget=DEFAULT_BUDGET, witness=None):
    """
    Checks the a-usc condition of h at x0 along a single sequence.

    :param WitnessSpec witness: optional explicit witness which is verified first
    """
    _check_unary(h)
    _check_limit(seq, x0)
    h.domain.ensure_contains(x0)
    ensure_reduction_validated(budget)

    try:
        violation = reduction_violation(h, x0, seq, C)
    except symbolic.UndecidedLimit as e:
        return Verdict.consistent("ausc-along", budget, notes=("undecided limit: {0}".format(e),))

    certificate = context(h, x0, C)
    certificate["sequence"] = seq.to_json()
    if violation is not None:
        normal, limsup, bound = violation
        certificate.update(
            {
                "normal": codec.vec_to_json(normal),
                "limsup": symbolic_text(limsup),
                "bound": codec.rational_to_json(bound),
            }
        )
        return Verdict.fails("ausc-infeasible", certificate, budget)

    notes = []
    if witness is not None:
        rejected = verify_ausc_witness(h, x0, seq, witness, C, budget.depth)
        if rejected is None:
            certificate.update({"witness": witness.to_json(), "depth": budget.depth})
            return Verdict.holds("ausc-witness", certificate, budget)
        notes.append("supplied witness rejected at index {0}: {1}".format(*rejected))

    try:
        constructed = _construct_witness(h, x0, seq, C, budget.depth)
    except symbolic.UndecidedLimit as e:
        constructed = None
        notes.append("undecided limit: {0}".format(e))
    if constructed is None:
        notes.append("no witness constructed")
        return Verdict.consistent("ausc-along", budget, notes=notes)
    certificate.update({"witness": constructed.to_json(), "depth": budget.depth})
    return Verdict.holds("ausc-witness", certificate, budget, notes=notes)


def symbolic_text(value):
    if isinstance(value, str):
        return value
    return codec.rational_to_json(value)


def is_continuous_at(h, x0, budget=DEFAULT_BUDGET):
    """
    Checks that h tends to h(x0) along every generated sequence
    """
    h0 = tuple(h(x0))
    for seq in generate_sequences(x0, h.domain, budget):
        try:
            if tuple(map_limit_along(h, seq)) != h0:
                return False
        except symbolic.UndecidedLimit:
            return False
    return True


def ausc_check(h, x0, C, budget=DEFAULT_BUDGET):
    """
    Checks a-usc of h at x0 over all generated sequences
    """
    _check_unary(h)
    sequences = generate_sequences(x0, h.domain, budget)
    verdicts = [ausc_along(h, x0, seq, C, budget) for seq in sequences]
    for index, verdict in enumerate(verdicts):
        if verdict.is_fails:
            return Verdict.fails(verdict.kind, verdict.certificate, budget, notes=("sequence {0}".format(index + 1),))

    holds = [v for v in verdicts if v.is_holds]
    notes = ("{0} of {1} sequences admit a witness".format(len(holds), len(verdicts)),)
    if verdicts and len(holds) == len(verdicts) and is_continuous_at(h, x0, budget):
        certificate = context(h, x0, C)
        certificate["cases"] = [v.certificate for v in holds]
        return Verdict.holds("ausc-continuous", certificate, budget, notes=notes)
    return Verdict.consistent(
        "ausc", budget, notes=notes, certificate={"cases": [v.to_json() for v in verdicts]} if verdicts else None
    )


def _first_probe(h, x0, radius, accept):
    for direction in axis_directions(h.domain.dim):
        u = x0 + direction * (radius / 2)
        if h.domain.contains(u) and accept(u):
            return u
    return None


def cusc_check(h, x0, C, budget=DEFAULT_BUDGET):
    """
    Searches a refutation of C-usc of h at x0.

    Maps which are continuous along every generated sequence are C-usc at
    x0. Elsewhere the family k = ray + eps * d (ray an extreme ray of C, d an
    axis direction of Z) is probed at u = x0 + (eps/2) * e along the radius
    schedule eps = r_j.
    """
    _check_unary(h)
    h.domain.ensure_contains(x0)
    if is_continuous_at(h, x0, budget):
        return Verdict.consistent("cusc", budget, notes=("continuous along every generated sequence",))

    h0 = h(x0)
    for ray in extreme_rays(C):
        for direction in axis_directions(h.codomain_dim):
            entries = []
            for radius in budget.radii():
                k = ray + direction * radius
                if not cone_interior_contains(C, k):
                    break
                u = _first_probe(h, x0, radius, lambda u: not cone_interior_contains(C, k + h0 - h(u)))
                if u is None:
                    break
                entries.append(
                    {
                        "radius": codec.rational_to_json(radius),
                        "k": codec.vec_to_json(k),
                        "u": codec.vec_to_json(u),
                        "residual": codec.vec_to_json(k + h0 - h(u)),
                    }
                )
            else:
                certificate = context(h, x0, C)
                certificate.update(
                    {"ray": codec.vec_to_json(ray), "direction": codec.vec_to_json(direction), "entries": entries}
                )
                return Verdict.fails("cusc-refutation", certificate, budget)
    return Verdict.consistent("cusc", budget, notes=("no refutation in the k-family",))


def k_grid(anchor, budget):
    """
    Returns the k-grid around the anchor ordered by L1 distance, then lexicographically
    """
    step = Fraction(1, budget.kgrid)
    reach = budget.kradius * budget.kgrid
    points = [
        anchor + RationalVec(tuple(step * s for s in offset))
        for offset in itertools.product(range(-reach, reach + 1), repeat=anchor.dim)
    ]
    return sorted(points, key=lambda k: (sum(abs(a - b) for a, b in zip(k, anchor)), k.coords))


def qusc_check(h, x0, C, budget=DEFAULT_BUDGET):
    """
    Searches a refutation of q-usc of h at x0 on the k-grid around -h(x0)
    """
    _check_unary(h)
    h.domain.ensure_contains(x0)
    h0 = h(x0)
    for k in k_grid(-h0, budget):
        if cone_contains(C, k + h0):
            continue
        entries = []
        for radius in budget.radii():
            u = _first_probe(h, x0, radius, lambda u: cone_contains(C, k + h(u)))
            if u is None:
                break
            entries.append({"radius": codec.rational_to_json(radius), "u": codec.vec_to_json(u)})
        else:
            certificate = context(h, x0, C)
            certificate.update({"k": codec.vec_to_json(k), "entries": entries})
            return Verdict.fails("qusc-refutation", certificate, budget)
    return Verdict.consistent("qusc", budget, notes=("no refutation on the k-grid",))


def _pinned_at(h, piece):
    return h.domain.dim == 1 and bool(piece.region.isolated_points())


def wusc_obstruction(h, x0, C):
    """
    Looks for a normal whose bound is exceeded on every piece approaching x0.

    Such a normal rules out a witness along every sequence x_n -> x0 with x_n != x0.

    :returns: the certificate or None
    """
    env = make_env(x0)
    h0 = h(x0)
    pieces = [
        (index, piece)
        for index, piece in enumerate(h.pieces)
        if piece.region.closure_contains(env) and not _pinned_at(h, piece)
    ]
    if not pieces:
        return None

    for normal in C.normals:
        bound = normal.dot(h0)
        values = []
        for index, piece in pieces:
            components = [(a, c) for a, c in zip(normal, piece.components) if a != 0]
            if any(c.has_pole_at(env) for _, c in components):
                break
            value = sum((a * c.evaluate(env) for a, c in components), Fraction(0))
            if value <= bound:
                break
            values.append({"piece": index, "value": codec.rational_to_json(value)})
        else:
            return {"normal": codec.vec_to_json(normal), "bound": codec.rational_to_json(bound), "pieces": values}
    return None


def wusc_check(h, x0, C, budget=DEFAULT_BUDGET, seeds=()):
    """
    Checks w-usc of h at x0.

    :param list seeds: (SequenceSpec, WitnessSpec or None) pairs tried before the generated sequences
    """
    _check_unary(h)
    h.domain.ensure_contains(x0)
    candidates = []
    for seq, witness in seeds:
        if seq.allow_limit_terms:
            raise SequenceError("w-usc needs a sequence whose terms differ from x0, got {0}".format(seq))
        seq.validate_in(h.domain)
        candidates.append((seq, witness))
    candidates.extend((seq, None) for seq in generate_sequences(x0, h.domain, budget))

    for seq, witness in candidates:
        verdict = ausc_along(h, x0, seq, C, budget, witness)
        if verdict.is_holds:
            return Verdict.holds("ausc-witness", verdict.certificate, budget, notes=verdict.notes)

    obstruction = wusc_obstruction(h, x0, C)
    if obstruction is not None:
        certificate = context(h, x0, C)
        certificate.update(obstruction)
        return Verdict.fails("wusc-obstruction", certificate, budget)
    return Verdict.consistent("wusc", budget, notes=("no witness on {0} sequences".format(len(candidates)),))


def ousc_verify_certificate(h, x0, C, xnet, znet, wnet, depth=DEFAULT_BUDGET.depth):
    """
    Verifies an o-usc certificate up to the given depth.

    The x-net has to tend to x0, the z- and w-nets to 0.
    """
    _check_unary(h)
    _check_limit(xnet, x0)
    for name, net in (("z", znet), ("w", wnet)):
        if any(value != 0 for value in net.limit()):
            raise SequenceError("the {0}-net {1} does not tend to 0".format(name, net))

    h0 = h(x0)
    values = [h(xnet.term(n)) + znet.term(n) for n in range(1, depth + 1)]
    for before, after in zip(values, values[1:]):
        if not cone_contains(C, after - before):
            return False
    for n in range(1, depth + 1):
        if not cone_contains(C, h0 - h(xnet.term(n)) + wnet.term(n)):
            return False
    return True


def ausc_sum_witness(w1, w2):
    """
    Returns the witness (z1_n + z2_n) of f + g from witnesses of f and g
    """
    return WitnessSpec(SumNet(w1.net, w2.net), w1.limit_point + w2.limit_point)


def ausc_sum_along(f, g, x0, seq, C, budget=DEFAULT_BUDGET):
    """
    Checks a-usc of f + g at x0 along a sequence through the summed witnesses of f and g.

    The summed witness is replayed against f + g before it is reported.
    """
    check_same_shape(f, g)
    parts = [ausc_along(h, x0, seq, C, budget) for h in (f, g)]
    if not all(v.is_holds for v in parts):
        notes = ["{0}: {1}".format(h.label, v.status) for h, v in zip((f, g), parts)]
        return Verdict.consistent("ausc-sum", budget, notes=notes)

    h = sum_maps(f, g)
    witness = ausc_sum_witness(*(witness_from_json(v.certificate["witness"]) for v in parts))
    rejected = verify_ausc_witness(h, x0, seq, witness, C, budget.depth)
    if rejected is not None:
        notes = ("summed witness rejected at index {0}: {1}".format(*rejected),)
        return Verdict.consistent("ausc-sum", budget, notes=notes)
    certificate = context(h, x0, C)
    certificate.update({"sequence": seq.to_json(), "witness": witness.to_json(), "depth": budget.depth})
    return Verdict.holds("ausc-witness", certificate, budget, notes=("summed witness",))


#: notions checkable at a point, by their problem file name
NOTIONS = {
    "c-usc": cusc_check,
    "a-usc": ausc_check,
    "q-usc": qusc_check,
    "w-usc": wusc_check,
}
