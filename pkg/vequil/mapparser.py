"""
Piecewise map text parser.

A map is written as one line per piece:

    <region> -> <expr>; <expr>; ...

where a region is ``always`` or a comma separated list of comparisons
``<expr> <op> <rational>`` and expressions use prefix notation:

    1/2   x   y2   (add x 1)   (mul 2 x)   (neg y)   (abs x)   (recip-abs x)
"""

import re

from .exceptions import MapTextSyntaxError
from .expressions import OPERATORS, Const, Var, Comparison, Region, ALWAYS, Add, Mul
from .maps import Piece, PiecewiseMap

TOKEN_RE = re.compile(
    r"\s*(?:(?P<lparen>\()|(?P<rparen>\))|(?P<number>-?\d+(?:/\d+)?)|(?P<name>[a-z][a-z0-9-]*))"
)
VARIABLE_RE = re.compile(r"^(?P<kind>[xy])(?P<index>\d*)$")
COMPARISON_RE = re.compile(r"^(?P<lhs>.+?)\s*(?P<op><=|>=|<|>|=)\s*(?P<rhs>-?\d+(?:/\d+)?)\s*$")

#: number of arguments per operator, None means two or more
ARITY = {"add": None, "mul": None, "sub": 2, "neg": 1, "abs": 1, "recip-abs": 1}


class ExpressionParser(object):
    """
    Recursive descent parser for a single prefix expression
    """

    def __init__(self, text):
        self.text = text
        self.tokens = list(self._tokenize(text))
        self.position = 0

    def _tokenize(self, text):
        offset = 0
        text = text.rstrip()
        while offset < len(text):
            match = TOKEN_RE.match(text, offset)
            if not match or match.end() == offset:
                character = text[offset:].strip()[:1]
                raise MapTextSyntaxError("Unexpected character '{0}'".format(character), text, offset + 1)
            kind = match.lastgroup
            yield kind, match.group(kind), match.start(kind) + 1
            offset = match.end()

    def _next(self):
        if self.position >= len(self.tokens):
            raise MapTextSyntaxError("Unexpected end of expression", self.text, len(self.text) + 1)
        token = self.tokens[self.position]
        self.position += 1
        return token

    def parse(self):
        if not self.tokens:
            raise MapTextSyntaxError("Empty expression", self.text, 1)
        expression = self._parse_expression()
        if self.position != len(self.tokens):
            _, value, column = self.tokens[self.position]
            raise MapTextSyntaxError("Trailing token '{0}'".format(value), self.text, column)
        return expression

    def _parse_expression(self):
        kind, value, column = self._next()
        if kind == "number":
            return Const(value)
        if kind == "name":
            match = VARIABLE_RE.match(value)
            if not match:
                raise MapTextSyntaxError("Unknown variable '{0}'".format(value), self.text, column)
            return Var(match.group("kind"), int(match.group("index") or 1))
        if kind == "rparen":
            raise MapTextSyntaxError("Unexpected ')'", self.text, column)

        kind, opname, column = self._next()
        if kind != "name" or opname not in OPERATORS:
            raise MapTextSyntaxError("Unknown operator '{0}'".format(opname), self.text, column)
        arguments = []
        while True:
            if self.position >= len(self.tokens):
                raise MapTextSyntaxError("Missing ')'", self.text, len(self.text) + 1)
            if self.tokens[self.position][0] == "rparen":
                self.position += 1
                break
            arguments.append(self._parse_expression())

        expected = ARITY[opname]
        if expected is None and len(arguments) < 2:
            raise MapTextSyntaxError("Operator '{0}' needs at least two arguments".format(opname), self.text, column)
        if expected is not None and len(arguments) != expected:
            raise MapTextSyntaxError(
                "Operator '{0}' takes {1} argument(s), got {2}".format(opname, expected, len(arguments)),
                self.text,
                column,
            )

        if expected is None:
            # n-ary add and mul fold to the left
            node = arguments[0]
            for argument in arguments[1:]:
                node = (Add if opname == "add" else Mul)(node, argument)
            return node
        return OPERATORS[opname](*arguments)


def parse_expression(text):
    """
    Parses a prefix expression
    """
    return ExpressionParser(text).parse()


def parse_comparison(text):
    match = COMPARISON_RE.match(text.strip())
    if not match:
        raise MapTextSyntaxError("Malformed comparison", text, 1)
    lhs = parse_expression(match.group("lhs"))
    try:
        return Comparison(lhs, match.group("op"), match.group("rhs"))
    except ValueError as e:
        raise MapTextSyntaxError(str(e), text, 1)


def parse_region(text):
    """
    Parses ``always`` or a comma separated conjunction of comparisons
    """
    text = text.strip()
    if text == "always":
        return ALWAYS
    if not text:
        raise MapTextSyntaxError("Empty region", text, 1)
    return Region(tuple(parse_comparison(part) for part in text.split(",")))


def parse_piece(text):
    """
    Parses a single ``<region> -> <expr>; <expr>`` piece
    """
    region_text, arrow, components_text = text.partition("->")
    if not arrow:
        raise MapTextSyntaxError("Missing '->' between region and components", text, len(text) + 1)
    components = tuple(parse_expression(part) for part in components_text.split(";"))
    return Piece(parse_region(region_text), components)


def parse_map(lines, arity, domain, name=None):
    """
    Parses the given piece lines into a PiecewiseMap.

    The codomain dimension is the number of components of the first piece.
    """
    pieces = [parse_piece(line) for line in lines if line.strip()]
    if not pieces:
        raise MapTextSyntaxError("A map needs at least one piece", "", 1)
    return PiecewiseMap(arity, domain, len(pieces[0].components), tuple(pieces), name=name)


def serialize_piece(piece):
    return "{0} -> {1}".format(piece.region.to_text(), "; ".join(c.to_text() for c in piece.components))


def serialize_map(F):
    """
    Returns the piece lines of the given map
    """
    return [serialize_piece(piece) for piece in F.pieces]


