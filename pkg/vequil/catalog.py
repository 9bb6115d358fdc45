"""
This module provides the built-in catalog of example maps.

Most entries are written in the piecewise map text format and parsed at
build time, so they go through the same validation as maps read from
problem files. The products of the perturbation example are built as
expression trees.
"""

import enum
from collections import namedtuple
from fractions import Fraction

from .exceptions import UnknownCatalogIdError
from .expressions import Abs, Add, Const, Mul, Sub, Var, ALWAYS
from .maps import Piece, PiecewiseMap, UNARY, BIFUNCTION, fix_second
from .ordered_space import interval, orthant, icecream2, vec
from . import mapparser


class CatalogId(enum.Enum):
    """
    Represents the ids of all catalog maps
    """

    EX_ICECREAM_G = "EX_ICECREAM_G"
    EX_QUSC_NOT_AUSC = "EX_QUSC_NOT_AUSC"
    EX_WUSC_NOT_QUSC = "EX_WUSC_NOT_QUSC"
    EX_LEVELSET_QUSC = "EX_LEVELSET_QUSC"
    EX_LEVELSET_WUSC = "EX_LEVELSET_WUSC"
    EX_REAL_WUSC = "EX_REAL_WUSC"
    EX_PHI_PSI_F = "EX_PHI_PSI_F"
    EX_PHI_PSI_G = "EX_PHI_PSI_G"
    EX_B1_SEMICONT_F = "EX_B1_SEMICONT_F"
    EX_B1_SEMICONT_G = "EX_B1_SEMICONT_G"

    @classmethod
    def from_name(cls, name):
        try:
            return cls(name)
        except ValueError:
            raise UnknownCatalogIdError(name, [c.value for c in cls])


CatalogEntry = namedtuple("CatalogEntry", ["arity", "lower", "upper", "grid", "cone", "pieces"])


def _phi(var):
    """
    Returns the pieces (region text, expression) of the first real function of the perturbation example
    """
    v = Var(var)
    return [
        ("{0} <= -1/2".format(var), Sub(Mul(Const(-2), v), Const(1))),
        ("{0} > -1/2, {0} <= 0".format(var), Add(Mul(Const(2), v), Const(1))),
        ("{0} > 0".format(var), Add(Mul(Const(-2), v), Const(1))),
    ]


def _psi(var):
    v = Var(var)
    return [
        ("{0} <= 1/2".format(var), Add(Mul(Const(Fraction(-2, 3)), v), Const(Fraction(1, 3)))),
        ("{0} > 1/2".format(var), Add(Mul(Const(-2), v), Const(1))),
    ]


def _phi_psi_x():
    """
    Returns the pieces of (phi(x), psi(x)) on the common refinement of their breakpoints
    """
    return [
        ("x <= -1/2", _phi("x")[0][1], _psi("x")[0][1]),
        ("x > -1/2, x <= 0", _phi("x")[1][1], _psi("x")[0][1]),
        ("x > 0, x <= 1/2", _phi("x")[2][1], _psi("x")[0][1]),
        ("x > 1/2", _phi("x")[2][1], _psi("x")[1][1]),
    ]


def _phi_psi_f_pieces():
    pieces = []
    for psi_region, psi_x in _psi("x"):
        for phi_region, phi_y in _phi("y"):
            region = mapparser.parse_region("{0}, {1}".format(psi_region, phi_region))
            pieces.append(Piece(region, (Mul(phi_y, psi_x), Const(0))))
    return pieces


def _phi_psi_g_pieces():
    pieces = []
    for x_region, phi_x, psi_x in _phi_psi_x():
        for phi_region, phi_y in _phi("y"):
            region = mapparser.parse_region("{0}, {1}".format(x_region, phi_region))
            product = Mul(phi_x, psi_x)
            pieces.append(Piece(region, (Mul(Const(-1), product), Sub(Mul(phi_y, psi_x), product))))
    return pieces


CATALOG = {
    CatalogId.EX_ICECREAM_G: CatalogEntry(
        BIFUNCTION, 0, 1, 8, "icecream", ["x <= 1/2 -> (add x y); x", "x > 1/2 -> (add (mul 2 x) y); 0"]
    ),
    CatalogId.EX_QUSC_NOT_AUSC: CatalogEntry(
        UNARY, -1, 1, 8, "orthant", ["(abs x) > 0 -> 1; (neg (recip-abs x))", "x = 0 -> 0; 0"]
    ),
    CatalogId.EX_WUSC_NOT_QUSC: CatalogEntry(
        UNARY, 0, 1, 8, "icecream", ["x <= 1/2 -> x; (mul 2 x)", "x > 1/2 -> (mul 2 x); (mul 2 x)"]
    ),
    CatalogId.EX_LEVELSET_QUSC: CatalogEntry(
        BIFUNCTION,
        -1,
        1,
        8,
        "orthant",
        ["(abs x) > 0 -> (add x y); (sub y (recip-abs x))", "x = 0 -> (add -1 y); (add -1 y)"],
    ),
    CatalogId.EX_LEVELSET_WUSC: CatalogEntry(
        BIFUNCTION,
        -2,
        2,
        16,
        "orthant",
        ["x <= -1 -> -1; (sub y 1)", "x > -1, x <= 0 -> 0; (sub y 1)", "x > 0 -> 1; (sub y 1)"],
    ),
    CatalogId.EX_REAL_WUSC: CatalogEntry(
        UNARY, -1, 1, 8, "orthant", ["x < 0 -> x", "x = 0 -> 1/2", "x > 0 -> (add x 1)"]
    ),
    CatalogId.EX_PHI_PSI_F: CatalogEntry(BIFUNCTION, -1, 1, 8, "orthant", _phi_psi_f_pieces),
    CatalogId.EX_PHI_PSI_G: CatalogEntry(BIFUNCTION, -1, 1, 8, "orthant", _phi_psi_g_pieces),
    CatalogId.EX_B1_SEMICONT_F: CatalogEntry(
        BIFUNCTION,
        -1,
        1,
        8,
        "orthant",
        ["x <= -1/2 -> (sub (sub -1 x) y); (sub x y)", "x > -1/2 -> (add x (abs y)); (add (neg x) y)"],
    ),
    CatalogId.EX_B1_SEMICONT_G: CatalogEntry(
        BIFUNCTION, -1, 1, 8, "orthant", ["always -> (sub (sub -1 x) (abs y)); (abs y)"]
    ),
}


def default_domain(catalog_id):
    entry = CATALOG[catalog_id]
    return interval(entry.lower, entry.upper, entry.grid)


def build(catalog_id, domain=None):
    """
    Builds the catalog map with the given id.

    :param CatalogId catalog_id: the id (or its name) of the map
    :param BoxDomain domain: optional domain replacing the default one
    """
    if not isinstance(catalog_id, CatalogId):
        catalog_id = CatalogId.from_name(catalog_id)
    entry = CATALOG[catalog_id]
    domain = domain or default_domain(catalog_id)
    if callable(entry.pieces):
        return PiecewiseMap(entry.arity, domain, 2, tuple(entry.pieces()), name=catalog_id.value)
    return mapparser.parse_map(entry.pieces, entry.arity, domain, name=catalog_id.value)


def default_cone(catalog_id):
    """
    Returns the cone the catalog map is studied with
    """
    if not isinstance(catalog_id, CatalogId):
        catalog_id = CatalogId.from_name(catalog_id)
    entry = CATALOG[catalog_id]
    if entry.cone == "icecream":
        return icecream2()
    return orthant(1 if catalog_id is CatalogId.EX_REAL_WUSC else 2)


def eps_perturbation(domain, epsilon, direction, name=None):
    """
    Builds the epsilon perturbation g(x, y) = epsilon * |x - y|_1 * e.

    :param BoxDomain domain: the common domain of both arguments
    :param Fraction epsilon: the positive scale
    :param RationalVec direction: the direction e of the perturbation
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive, got {0}".format(epsilon))
    distance = Abs(Sub(Var("x", 1), Var("y", 1)))
    for index in range(2, domain.dim + 1):
        distance = Add(distance, Abs(Sub(Var("x", index), Var("y", index))))
    components = tuple(Mul(Const(epsilon * e), distance) for e in direction)
    return PiecewiseMap(BIFUNCTION, domain, direction.dim, (Piece(ALWAYS, components),), name=name or "eps")


#: hand derived values ((x, y), value) of every catalog map
SPOT_CHECKS = {
    CatalogId.EX_ICECREAM_G: [
        (("0", "0"), ("0", "0")),
        (("1/2", "1/4"), ("3/4", "1/2")),
        (("3/4", "0"), ("3/2", "0")),
        (("1", "1"), ("3", "0")),
        (("1/4", "1"), ("5/4", "1/4")),
    ],
    CatalogId.EX_QUSC_NOT_AUSC: [
        (("0", None), ("0", "0")),
        (("1/2", None), ("1", "-2")),
        (("-1/4", None), ("1", "-4")),
        (("1", None), ("1", "-1")),
        (("-1", None), ("1", "-1")),
    ],
    CatalogId.EX_WUSC_NOT_QUSC: [
        (("0", None), ("0", "0")),
        (("1/2", None), ("1/2", "1")),
        (("3/4", None), ("3/2", "3/2")),
        (("1", None), ("2", "2")),
        (("1/4", None), ("1/4", "1/2")),
    ],
    CatalogId.EX_LEVELSET_QUSC: [
        (("0", "0"), ("-1", "-1")),
        (("1/4", "0"), ("1/4", "-4")),
        (("-1/2", "1/2"), ("0", "-3/2")),
        (("1", "-1"), ("0", "-2")),
        (("0", "1"), ("0", "0")),
    ],
    CatalogId.EX_LEVELSET_WUSC: [
        (("-2", "0"), ("-1", "-1")),
        (("-1", "1"), ("-1", "0")),
        (("-1/2", "2"), ("0", "1")),
        (("0", "0"), ("0", "-1")),
        (("3/2", "-1"), ("1", "-2")),
    ],
    CatalogId.EX_REAL_WUSC: [
        (("-1", None), ("-1",)),
        (("-1/4", None), ("-1/4",)),
        (("0", None), ("1/2",)),
        (("1/4", None), ("5/4",)),
        (("1", None), ("2",)),
    ],
    CatalogId.EX_PHI_PSI_F: [
        (("-1/2", "3/4"), ("-1/3", "0")),
        (("0", "0"), ("1/3", "0")),
        (("-1", "-1"), ("1", "0")),
        (("1", "1"), ("1", "0")),
        (("3/4", "-3/4"), ("-1/4", "0")),
    ],
    CatalogId.EX_PHI_PSI_G: [
        (("-1/2", "3/4"), ("0", "-1/3")),
        (("0", "-1"), ("-1/3", "0")),
        (("1", "0"), ("-1", "-2")),
        (("1/2", "1/4"), ("0", "0")),
        (("-1", "1/4"), ("-1", "-1/2")),
        (("-3/4", "-1/2"), ("-5/12", "-5/12")),
    ],
    CatalogId.EX_B1_SEMICONT_F: [
        (("-1/2", "-1/2"), ("0", "0")),
        (("-1/2", "0"), ("-1/2", "-1/2")),
        (("0", "0"), ("0", "0")),
        (("1", "-1"), ("2", "-2")),
        (("-1", "1"), ("-1", "-2")),
    ],
    CatalogId.EX_B1_SEMICONT_G: [
        (("-1/2", "0"), ("-1/2", "0")),
        (("0", "1"), ("-2", "1")),
        (("1", "-1"), ("-3", "1")),
        (("-1", "0"), ("0", "0")),
        (("-1/2", "1/2"), ("-1", "1/2")),
    ],
}


GroundTruth = namedtuple("GroundTruth", ["catalog_id", "y", "x0", "cusc", "ausc", "qusc", "wusc"])

#: analytic semicontinuity truth values of x -> g(x, y) at x0 with the catalog cone
GROUND_TRUTH = [
    GroundTruth(CatalogId.EX_ICECREAM_G, "0", "1/2", False, True, True, True),
    GroundTruth(CatalogId.EX_ICECREAM_G, "0", "1/4", True, True, True, True),
    GroundTruth(CatalogId.EX_QUSC_NOT_AUSC, None, "0", False, False, True, False),
    GroundTruth(CatalogId.EX_WUSC_NOT_QUSC, None, "1/2", False, False, False, True),
    GroundTruth(CatalogId.EX_LEVELSET_QUSC, "0", "0", False, False, True, False),
    GroundTruth(CatalogId.EX_LEVELSET_QUSC, "0", "1/2", True, True, True, True),
    GroundTruth(CatalogId.EX_LEVELSET_WUSC, "0", "-1", False, False, False, True),
    GroundTruth(CatalogId.EX_REAL_WUSC, None, "0", False, False, False, True),
    GroundTruth(CatalogId.EX_B1_SEMICONT_F, "0", "-1/2", False, False, False, True),
    GroundTruth(CatalogId.EX_PHI_PSI_F, "3/4", "-1/2", True, True, True, True),
]


def ground_truth_map(truth):
    """
    Returns the unary map, point and cone a ground truth entry talks about
    """
    F = build(truth.catalog_id)
    if F.is_bifunction:
        F = fix_second(F, vec(truth.y))
    return F, vec(truth.x0), default_cone(truth.catalog_id)
