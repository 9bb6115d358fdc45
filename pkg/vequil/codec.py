"""
This module provides the JSON representation of the kernel values.

Rationals are written as exact ``p/q`` strings so that every certificate
in a report can be rebuilt and replayed without loss.
"""

from .ordered_space import ConeSpec, BoxDomain, RationalVec, format_rational, rational, orthant, icecream2
from . import mapparser


def vec_to_json(vector):
    return vector.to_strings()


def vec_from_json(data):
    return RationalVec(tuple(rational(value) for value in data))


def rational_to_json(value):
    return format_rational(value)


def cone_to_json(C):
    data = {"normals": [vec_to_json(n) for n in C.normals]}
    if C.name:
        data["name"] = C.name
    return data


def cone_from_json(data):
    name = data.get("name")
    if name == "icecream":
        return icecream2()
    if name and name.startswith("orthant"):
        return orthant(len(data["normals"]))
    return ConeSpec(tuple(vec_from_json(n) for n in data["normals"]))


def domain_to_json(domain):
    return {
        "lower": vec_to_json(domain.lower),
        "upper": vec_to_json(domain.upper),
        "grid": list(domain.grid_counts),
    }


def domain_from_json(data):
    return BoxDomain(vec_from_json(data["lower"]), vec_from_json(data["upper"]), tuple(data["grid"]))


def map_to_json(F):
    """
    Returns a self-contained JSON representation of the given map
    """
    return {
        "name": F.name,
        "arity": F.arity,
        "domain": domain_to_json(F.domain),
        "pieces": mapparser.serialize_map(F),
    }


def map_from_json(data):
    return mapparser.parse_map(data["pieces"], data["arity"], domain_from_json(data["domain"]), name=data.get("name"))


def rational_from_json(data):
    return rational(data)
