"""A small expression language for user-defined potentials V(r).

Grammar, lowest to highest precedence::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' unary)?            # right-associative
    atom   := NUMBER | 'r' | NAME '(' args ')' | '(' expr ')'

The only variable is ``r``. Functions: exp, ln, sqrt, sgn, abs, sin, cos.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import ExpressionError

FUNCTIONS = {
    "exp": np.exp,
    "ln": np.log,
    "sqrt": np.sqrt,
    "sgn": np.sign,
    "abs": np.abs,
    "sin": np.sin,
    "cos": np.cos,
}

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^(),]))"
)


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Node"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Num, Var, Unary, Binary, Call]


def _tokenize(source: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    raw = source.encode("utf-8")
    # offsets are reported in bytes; the grammar is ASCII so any non-ASCII is an error anyway
    while True:
        m = _TOKEN.match(source, pos)
        if m is None or m.end() == pos:
            rest = source[pos:]
            if rest.strip() == "":
                break
            bad = pos + (len(rest) - len(rest.lstrip()))
            raise ExpressionError(
                f"unexpected character {source[bad]!r}", len(source[:bad].encode("utf-8"))
            )
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), len(source[:start].encode("utf-8"))))
        pos = m.end()
    tokens.append(("end", "", len(raw)))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str):
        kind, value, off = self.take()
        if value != text or kind != "op":
            found = "end of input" if kind == "end" else repr(value)
            raise ExpressionError(f"expected {text!r}, found {found}", off)

    def parse(self) -> Node:
        node = self.expr()
        kind, value, off = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected token {value!r}", off)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = Binary(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            node = Binary(op, node, self.unary())
        return node

    def unary(self) -> Node:
        kind, value, _ = self.peek()
        if kind == "op" and value in ("-", "+"):
            self.take()
            return Unary(value, self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            return Binary("^", base, self.unary())
        return base

    def atom(self) -> Node:
        kind, value, off = self.take()
        if kind == "num":
            number = float(value)
            if not np.isfinite(number):
                raise ExpressionError("numeric literal out of range", off)
            return Num(number)
        if kind == "name":
            if value == "r":
                return Var()
            if value not in FUNCTIONS:
                raise ExpressionError(f"unknown identifier {value!r}", off)
            self.expect("(")
            args = [self.expr()]
            while self.peek()[:2] == ("op", ","):
                self.take()
                args.append(self.expr())
            self.expect(")")
            if len(args) != 1:
                raise ExpressionError(f"{value}() takes 1 argument, got {len(args)}", off)
            return Call(value, args[0])
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(value)
        raise ExpressionError(f"unexpected {found}", off)


def parse_expression(source: str) -> Node:
    """Parse ``source`` into an expression tree.

    Raises ExpressionError on syntax errors, unknown identifiers and wrong
    argument counts; the error carries the byte offset of the offending token.
    """
    if not source or not source.strip():
        raise ExpressionError("empty expression", 0)
    return _Parser(source).parse()


def evaluate(node: Node, r):
    """Evaluate the tree at ``r`` (scalar or array), elementwise."""
    r = np.asarray(r, dtype=float)
    with np.errstate(all="ignore"):
        return _eval(node, r)


def _eval(node: Node, r):
    if isinstance(node, Num):
        return np.full_like(r, node.value)
    if isinstance(node, Var):
        return r
    if isinstance(node, Unary):
        v = _eval(node.operand, r)
        return -v if node.op == "-" else v
    if isinstance(node, Call):
        return FUNCTIONS[node.func](_eval(node.arg, r))
    a, b = _eval(node.left, r), _eval(node.right, r)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    if node.op == "/":
        return a / b
    return np.power(a, b)


def to_source(node: Node) -> str:
    """Fully parenthesized source text that parses back to an equivalent tree."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return "r"
    if isinstance(node, Unary):
        return f"({node.op}{to_source(node.operand)})"
    if isinstance(node, Call):
        return f"{node.func}({to_source(node.arg)})"
    return f"({to_source(node.left)} {node.op} {to_source(node.right)})"
