"""
Problem file parser.
One problem file parser instance is able to parse one problem file.
A problem file contains one or more problems.
"""

import io
import os
import re
import itertools

from .exceptions import VequilError, ProblemFileSyntaxError, MapTextSyntaxError
from .problem import Problem, MapDeclaration
from .task import Task, TASK_KEYS, BUDGET_KEYS, validate_key
from .model import Tag
from .catalog import CatalogId
from .customtyperegistry import parse_box, parse_vector_list
from .maps import UNARY, BIFUNCTION
from .ordered_space import BoxDomain, ConeSpec, orthant, icecream2
from . import mapparser
from . import utils

KEY_RE = re.compile(r"^(?P<key>[A-Za-z][A-Za-z-]*(?:\s+[A-Za-z_][A-Za-z0-9_]*)?)\s*:\s*(?P<value>.*)$")
MAP_KEY_RE = re.compile(r"^map\s+(?P<name>[A-Za-z_][A-Za-z0-9_]*)$")
NET_KEY_RE = re.compile(r"^net\s+(?P<name>[A-Za-z_][A-Za-z0-9_]*)$")
CATALOG_RE = re.compile(r"^catalog\s+(?P<id>\S+)$")
INLINE_RE = re.compile(r"^(?P<arity>unary|bifunction)\s+(?P<dim>\d+)$")


class ProblemFileParser(object):
    """
    Class to parse a problem file
    """

    class State(object):
        """
        Represents the parser state
        """

        INIT = "init"
        PROBLEM = "problem"
        TASK = "task"

    def __init__(self, core, path, tag_expr=None):
        self._core = core
        self._path = path
        self._tag_expr = tag_expr
        self._ids = itertools.count(1)

        self._current_state = ProblemFileParser.State.INIT
        self._current_line = 0
        self._current_tags = []
        self._current_problem = None
        self._current_task = None
        self._current_map = None
        self.problems = []

    def parse(self):
        """
        Parses the problem file of this parser instance

        :returns: the parsed problems
        :rtype: list
        """
        if not os.path.exists(self._path):
            raise OSError("Problem file at '{0}' does not exist".format(self._path))

        with io.open(self._path, "r", encoding="utf-8") as f:
            return self.parse_lines(f.readlines())

    def parse_lines(self, lines):
        """
        Parses the given lines of problem file text
        """
        for line in lines:
            self._current_line += 1
            line_strip = line.strip()
            if not line_strip or line_strip.startswith("#"):
                continue

            self._parse_line(line.rstrip("\n"), line_strip)

        self._finish_problem()
        if self._current_tags:
            self._error("Tags without a following Problem or Task")
        return self.problems

    def _error(self, msg, column=1):
        raise ProblemFileSyntaxError(msg, self._path, self._current_line, column)

    def _next_id(self, kind):
        if self._core is None:
            return next(self._ids)
        return getattr(self._core, "next_{0}_id".format(kind))

    def _parse_line(self, line, line_strip):
        if line_strip.startswith("@"):
            self._current_tags.extend(self._parse_tags(line_strip))
            return

        if line_strip.startswith("Problem:"):
            self._finish_problem()
            self._parse_problem(line_strip[len("Problem:") :].strip())
            return

        if self._current_problem is None:
            self._error("Expected 'Problem:' but got '{0}'".format(line_strip))

        if line_strip.startswith("Task:"):
            self._finish_map()
            self._parse_task(line_strip[len("Task:") :].strip())
            return

        match = KEY_RE.match(line_strip)
        if not match:
            self._error("Expected 'key: value' but got '{0}'".format(line_strip))

        key = " ".join(match.group("key").split())
        value = match.group("value").strip()
        column = len(line) - len(line.lstrip()) + match.start("value") + 1

        parse_context_func = getattr(self, "_parse_{0}_key".format(self._current_state))
        try:
            parse_context_func(key, value, column)
        except ProblemFileSyntaxError:
            raise
        except MapTextSyntaxError as e:
            self._error(str(e), column + max(e.column - 1, 0))
        except (VequilError, ValueError, ZeroDivisionError) as e:
            self._error(str(e), column)

    def _parse_problem(self, title):
        if not title:
            self._error("A Problem needs a title")
        self._current_problem = Problem(
            self._next_id("problem"), title, self._path, self._current_line, tags=self._current_tags
        )
        self._current_tags = []
        self._current_task = None
        self._current_state = ProblemFileParser.State.PROBLEM

    def _parse_task(self, sentence):
        if not sentence:
            self._error("A Task needs a sentence")
        task = Task(
            self._next_id("task"),
            sentence,
            self._path,
            self._current_line,
            self._current_problem,
            tags=self._current_tags,
        )
        self._current_tags = []
        self._current_task = task
        self._current_state = ProblemFileParser.State.TASK
        if self._tag_expr is None or self._tag_expr.evaluate(task.tag_names):
            self._current_problem.tasks.append(task)

    def _parse_problem_key(self, key, value, column):
        """
        Parses a key which belongs to the problem itself
        """
        problem = self._current_problem
        if key == "cone":
            if problem.cone is not None:
                self._error("The cone may only be declared once per Problem")
            problem.cone = parse_cone(value)
        elif key == "domain":
            if problem.domain is not None:
                self._error("The domain may only be declared once per Problem")
            problem.domain = parse_domain(value)
        elif key.startswith("map "):
            self._parse_map_key(key, value)
        elif key == "piece":
            if self._current_map is None or self._current_map["catalog_id"] is not None:
                self._error("A piece must follow an inline map declaration")
            mapparser.parse_piece(value)
            self._current_map["pieces"].append(" ".join(value.split()))
        elif key == "budget":
            for name, number in utils.parse_key_values(value).items():
                if name not in BUDGET_KEYS:
                    raise ValueError("unknown budget key '{0}'".format(name))
                problem.budget_overrides[name] = int(number)
            # fail early on non positive values
            problem.budget  # pylint: disable=pointless-statement
        else:
            self._error("Unknown problem key '{0}'".format(key))

    def _parse_map_key(self, key, value):
        self._finish_map()
        match = MAP_KEY_RE.match(key)
        if not match:
            self._error("Malformed map name in '{0}'".format(key))
        name = match.group("name")
        if name in self._current_problem.declarations:
            self._error("Map '{0}' is declared twice".format(name))

        catalog_match = CATALOG_RE.match(value)
        inline_match = INLINE_RE.match(value)
        if catalog_match:
            self._current_map = {
                "name": name,
                "catalog_id": CatalogId.from_name(catalog_match.group("id")),
                "arity": None,
                "codomain_dim": None,
                "pieces": [],
                "line": self._current_line,
            }
        elif inline_match:
            self._current_map = {
                "name": name,
                "catalog_id": None,
                "arity": UNARY if inline_match.group("arity") == "unary" else BIFUNCTION,
                "codomain_dim": int(inline_match.group("dim")),
                "pieces": [],
                "line": self._current_line,
            }
        else:
            raise ValueError("Expected 'catalog <ID>' or 'unary|bifunction <dim>' but got '{0}'".format(value))

    def _parse_task_key(self, key, value, column):
        """
        Parses a key which belongs to the current task
        """
        net_match = NET_KEY_RE.match(key)
        if key not in TASK_KEYS and not net_match:
            self._error("Unknown task key '{0}'".format(key))

        task = self._current_task
        if key in task.keys or (net_match and net_match.group("name") in task.nets):
            self._error("Task key '{0}' is given twice".format(key))

        validate_key("net " if net_match else key, value)
        task.set_key("net {0}".format(net_match.group("name")) if net_match else key, value)

    def _parse_init_key(self, key, value, column):
        self._error("Expected 'Problem:' but got '{0}'".format(key))

    def _finish_map(self):
        if self._current_map is None:
            return

        current = self._current_map
        self._current_map = None
        if current["catalog_id"] is None and not current["pieces"]:
            raise ProblemFileSyntaxError(
                "Inline map '{0}' has no pieces".format(current["name"]), self._path, current["line"]
            )
        current["pieces"] = tuple(current["pieces"])
        self._current_problem.declare(MapDeclaration(**current))

    def _finish_problem(self):
        """
        Completes the current problem: builds every map to report partition and dimension errors
        """
        if self._current_problem is None:
            return

        self._finish_map()
        problem = self._current_problem
        self._current_problem = None
        self._current_task = None

        cone = None
        if problem.cone is not None or any(d.catalog_id for d in problem.declarations.values()):
            cone = problem.effective_cone
        for declaration in problem.declarations.values():
            try:
                built = problem.build_map(declaration)
            except (VequilError, ValueError) as e:
                raise ProblemFileSyntaxError(str(e), self._path, declaration.line)
            if cone is not None and built.codomain_dim != cone.dim:
                raise ProblemFileSyntaxError(
                    "Map '{0}' maps into dimension {1} but the cone lives in dimension {2}".format(
                        declaration.name, built.codomain_dim, cone.dim
                    ),
                    self._path,
                    declaration.line,
                )
        self.problems.append(problem)

    def _parse_tags(self, line):
        """
        Parses all tags of a line like ``@assert @seed(3)``
        """
        tags = []
        for part in [p.strip() for p in line.split("@") if p.strip()]:
            match = re.search(r"^([^\s(]+)\((.*)\)$", part)
            if match:
                tags.append(Tag(match.group(1), match.group(2)))
            elif " " in part:
                self._error("Malformed tag '@{0}'".format(part))
            else:
                tags.append(Tag(part))
        return tags


def parse_cone(text):
    """
    Parses the value of a ``cone:`` key
    """
    words = text.split(None, 1)
    if not words:
        raise ValueError("Expected 'orthant <dim>', 'icecream' or 'normals <vectors>'")
    if words[0] == "orthant" and len(words) == 2 and words[1].isdigit():
        return orthant(int(words[1]))
    if words == ["icecream"]:
        return icecream2()
    if words[0] == "normals" and len(words) == 2:
        return ConeSpec(tuple(parse_vector_list(words[1])))
    raise ValueError("Expected 'orthant <dim>', 'icecream' or 'normals <vectors>' but got '{0}'".format(text))


def parse_domain(text):
    """
    Parses the value of a ``domain:`` key
    """
    box = parse_box(text)
    if box.grid is None:
        raise ValueError("A domain needs grid counts: '{0} grid <n>'".format(text.strip()))
    return BoxDomain(box.lower, box.upper, box.grid)


def parse_text(text, path="<text>", tag_expr=None):
    """
    Parses problem file text which does not live in a file
    """
    return ProblemFileParser(None, path, tag_expr).parse_lines(text.splitlines())


def serialize(problems):
    """
    Serializes the given problems in the problem file grammar
    """
    lines = []
    for problem in problems:
        if lines:
            lines.append("")
        if problem.tags:
            lines.append(" ".join(str(t) for t in problem.tags))
        lines.append("Problem: {0}".format(problem.title))
        if problem.cone is not None:
            lines.append("    cone: {0}".format(problem.cone.describe()))
        if problem.domain is not None:
            lines.append("    domain: {0}".format(problem.domain.describe()))
        for declaration in problem.declarations.values():
            if declaration.catalog_id is not None:
                lines.append("    map {0}: catalog {1}".format(declaration.name, declaration.catalog_id.value))
                continue
            lines.append("    map {0}: {1} {2}".format(declaration.name, declaration.arity, declaration.codomain_dim))
            lines.extend("        piece: {0}".format(piece) for piece in declaration.pieces)
        if problem.budget_overrides:
            lines.append(
                "    budget: {0}".format(" ".join("{0}={1}".format(k, v) for k, v in problem.budget_overrides.items()))
            )
        for task in problem.tasks:
            if task.tags:
                lines.append("    " + " ".join(str(t) for t in task.tags))
            lines.append("    Task: {0}".format(task.sentence))
            lines.extend("        {0}: {1}".format(key, value) for key, value in task.keys.items())
            lines.extend("        net {0}: {1}".format(name, value) for name, value in task.nets.items())
    return "\n".join(lines) + "\n" if lines else ""
