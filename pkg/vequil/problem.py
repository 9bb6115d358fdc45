"""
This module provides a class to represent a Problem of a problem file
"""

from collections import OrderedDict, namedtuple

from .model import Model
from .exceptions import UnknownMapError, InputError, DimensionMismatchError
from .maps import PiecewiseMap
from .ordered_space import BoxDomain, RationalVec
from .verdict import DEFAULT_BUDGET
from . import catalog
from . import mapparser

#: a map declaration: either a catalog id or an arity with piece lines
MapDeclaration = namedtuple("MapDeclaration", ["name", "catalog_id", "arity", "codomain_dim", "pieces", "line"])


class Problem(Model):
    """
    Represents a problem: an ordered space, a domain, maps and the tasks on them
    """

    def __init__(self, id, title, path, line, tags=None):
        super(Problem, self).__init__(id, "Problem", title, path, line, None, tags)
        self.cone = None
        self.domain = None
        self.declarations = OrderedDict()
        self.budget_overrides = OrderedDict()
        self.cli_overrides = {}
        self.tasks = []
        self._maps = None

    @property
    def title(self):
        return self.sentence

    @property
    def budget(self):
        return DEFAULT_BUDGET.override(**self.budget_overrides)

    def declare(self, declaration):
        self.declarations[declaration.name] = declaration
        self._maps = None

    def _catalog_ids(self):
        return [d.catalog_id for d in self.declarations.values() if d.catalog_id is not None]

    @property
    def effective_domain(self):
        """
        Returns the declared domain or the default domain of the first catalog map
        """
        if self.domain is not None:
            return self.domain
        ids = self._catalog_ids()
        if ids:
            return catalog.default_domain(ids[0])
        return None

    @property
    def effective_cone(self):
        """
        Returns the declared cone or the cone the first catalog map is studied with
        """
        if self.cone is not None:
            return self.cone
        ids = self._catalog_ids()
        if ids:
            return catalog.default_cone(ids[0])
        raise InputError("Problem '{0}' declares no cone".format(self.title))

    def build_map(self, declaration):
        """
        Builds the PiecewiseMap of the given declaration on the problem domain
        """
        domain = self.effective_domain
        if declaration.catalog_id is not None:
            built = catalog.build(declaration.catalog_id, domain)
            return built if built.name == declaration.name else _renamed(built, declaration.name)

        if domain is None:
            raise InputError(
                "Problem '{0}' needs a domain for the inline map '{1}'".format(self.title, declaration.name)
            )
        built = mapparser.parse_map(declaration.pieces, declaration.arity, domain, name=declaration.name)
        if built.codomain_dim != declaration.codomain_dim:
            raise DimensionMismatchError(
                declaration.codomain_dim, built.codomain_dim, "map '{0}'".format(declaration.name)
            )
        return built

    @property
    def maps(self):
        if self._maps is None:
            self._maps = OrderedDict((name, self.build_map(d)) for name, d in self.declarations.items())
        return self._maps

    def map(self, name):
        """
        Returns the declared map with the given name
        """
        if name not in self.declarations:
            raise UnknownMapError(name, self.title)
        return self.maps[name]

    def sub_domain(self, lower, upper, grid=None):
        """
        Returns a box inside the problem domain; without grid counts the step of the problem grid is kept
        """
        if grid is None:
            domain = self.effective_domain
            grid = tuple(
                max(1, int((hi - lo) / domain.step(axis))) if domain.step(axis) else 1
                for axis, (lo, hi) in enumerate(zip(lower, upper))
            )
        return BoxDomain(RationalVec(tuple(lower)), RationalVec(tuple(upper)), tuple(grid))

    def override(self, grid=None, depth=None, seed=None):
        """
        Applies the command line overrides ``--grid``, ``--budget`` and ``--seed``
        """
        if grid is not None:
            domain = self.effective_domain
            if domain is not None:
                self.domain = domain.with_grid(int(grid))
                self._maps = None
        self.cli_overrides = {
            k: int(v) for k, v in (("depth", depth), ("seed", seed)) if v is not None
        }

    def signature(self):
        return (
            self.sentence,
            tuple(str(t) for t in self.tags),
            self.cone.describe() if self.cone is not None else None,
            self.domain.describe() if self.domain is not None else None,
            tuple(self.declarations.values()),
            tuple(self.budget_overrides.items()),
            tuple(t.signature() for t in self.tasks),
        )

    def __eq__(self, other):
        if not isinstance(other, Problem):
            return NotImplemented
        return _without_lines(self.signature()) == _without_lines(other.signature())

    __hash__ = Model.__hash__

    def __repr__(self):
        return "<Problem '{0}' with {1} tasks>".format(self.title, len(self.tasks))


def _without_lines(signature):
    declarations = tuple(d._replace(line=None) for d in signature[4])
    return signature[:4] + (declarations,) + signature[5:]


def _renamed(F, name):
    return PiecewiseMap(F.arity, F.domain, F.codomain_dim, F.pieces, name=name)
