"""
Intersection-number expressions.

Grammar:
    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := base ('^' nat)?
    base    := var | nat | '(' expr ')'
    ambient := 'P' nat ('x' 'P' nat)*
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from fanolab.shared.exact_core.rings import IntersectionRing, RingElement
from fanolab.shared.utils.exceptions import ExpressionParseError, UnboundVariableError


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow:
    base: Expr
    exponent: int


Expr = Union[Num, Var, Neg, Add, Sub, Mul, Pow]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


_TOKEN_PATTERN = re.compile(
    r"(?P<space>\s+)|(?P<nat>\d+)|(?P<var>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()])"
)


def tokenize(source: str) -> list[Token]:
    tokens = []
    position = 0
    while position < len(source):
        match = _TOKEN_PATTERN.match(source, position)
        if match is None:
            raise ExpressionParseError(f"Unexpected character {source[position]!r}", source, position)
        kind = match.lastgroup
        if kind != "space":
            text = match.group()
            tokens.append(Token(text if kind == "op" else kind, text, position))
        position = match.end()
    tokens.append(Token("end", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        if self.current.kind != kind:
            found = self.current.text or "end of input"
            raise ExpressionParseError(f"Expected {what}, found {found!r}", self.source, self.current.position)
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        self.expect("end", "an operator or end of input")
        return node

    def expr(self) -> Expr:
        sign = None
        if self.current.kind in ("+", "-"):
            sign = self.advance().kind
        node = self.term()
        if sign == "-":
            node = Neg(node)
        while self.current.kind in ("+", "-"):
            operator = self.advance().kind
            right = self.term()
            node = Add(node, right) if operator == "+" else Sub(node, right)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.current.kind == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Expr:
        node = self.base()
        if self.current.kind == "^":
            self.advance()
            node = Pow(node, int(self.expect("nat", "a nonnegative integer exponent").text))
        return node

    def base(self) -> Expr:
        token = self.current
        if token.kind == "nat":
            self.advance()
            return Num(int(token.text))
        if token.kind == "var":
            self.advance()
            return Var(token.text)
        if token.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")", "')'")
            return node
        found = token.text or "end of input"
        raise ExpressionParseError(
            f"Expected a variable, an integer or '(', found {found!r}", self.source, token.position
        )


def parse(source: str) -> Expr:
    return _Parser(source).parse()


# binding strength of each context, and of each node kind
_CONTEXT = {"expr": 0, "term": 1, "factor": 2, "base": 3}


def _strength(node: Expr) -> int:
    if isinstance(node, (Add, Sub, Neg)):
        return 0
    if isinstance(node, Mul):
        return 1
    if isinstance(node, Pow):
        return 2
    return 3


def _render(node: Expr, context: str) -> str:
    if _strength(node) < _CONTEXT[context]:
        return f"({_render(node, 'expr')})"
    match node:
        case Num(value):
            return str(value)
        case Var(name):
            return name
        case Neg(operand):
            return f"-{_render(operand, 'term')}"
        case Add(left, right):
            return f"{_render(left, 'expr')} + {_render(right, 'term')}"
        case Sub(left, right):
            return f"{_render(left, 'expr')} - {_render(right, 'term')}"
        case Mul(left, right):
            return f"{_render(left, 'term')}*{_render(right, 'factor')}"
        case Pow(base, exponent):
            return f"{_render(base, 'base')}^{exponent}"
    raise TypeError(f"Not an expression node: {node!r}")


def pretty(node: Expr) -> str:
    """Minimal-parenthesis text form; parse(pretty(node)) == node."""
    return _render(node, "expr")


def variables(node: Expr) -> set[str]:
    match node:
        case Var(name):
            return {name}
        case Num():
            return set()
        case Neg(operand):
            return variables(operand)
        case Pow(base, _):
            return variables(base)
        case Add(left, right) | Sub(left, right) | Mul(left, right):
            return variables(left) | variables(right)
    raise TypeError(f"Not an expression node: {node!r}")


def evaluate(node: Expr, ring: IntersectionRing, bindings: Mapping[str, RingElement]) -> RingElement:
    """
    Evaluates an expression tree in an intersection ring.

    Args:
        node: parsed expression
        ring: ring in which integer literals are read
        bindings: variable name to ring element

    Returns:
        the value of the expression, in normal form

    """
    match node:
        case Num(value):
            return ring.scalar(value)
        case Var(name):
            if name not in bindings:
                raise UnboundVariableError(f"Variable {name!r} is not bound; available: {', '.join(sorted(bindings))}")
            return bindings[name]
        case Neg(operand):
            return -evaluate(operand, ring, bindings)
        case Add(left, right):
            return evaluate(left, ring, bindings) + evaluate(right, ring, bindings)
        case Sub(left, right):
            return evaluate(left, ring, bindings) - evaluate(right, ring, bindings)
        case Mul(left, right):
            return evaluate(left, ring, bindings) * evaluate(right, ring, bindings)
        case Pow(base, exponent):
            return evaluate(base, ring, bindings) ** exponent
    raise TypeError(f"Not an expression node: {node!r}")


_AMBIENT_FACTOR = re.compile(r"\s*P\s*(\d+)\s*")


def parse_ambient(source: str) -> list[int]:
    """'P4 x P5' -> [4, 5]."""
    dims = []
    position = 0
    while True:
        match = _AMBIENT_FACTOR.match(source, position)
        if match is None:
            raise ExpressionParseError("Expected a factor 'P<n>'", source, position)
        dims.append(int(match.group(1)))
        position = match.end()
        if position == len(source):
            return dims
        if source[position] != "x":
            raise ExpressionParseError("Expected 'x' between factors", source, position)
        position += 1
