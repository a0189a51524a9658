"""Recursive-descent parser for series expressions.

Grammar, loosest binding first::

    top     := sum [ '+' 'O' '(' 't' '^' INT ')' ] | 'O' '(' 't' '^' INT ')'
    sum     := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom [ '^' ['-'] INT ]
    atom    := INT | 'u' | 'w' | 't' | '(' sum ')' | 'comm' '(' sum ',' sum ')'
             | 'inv' '(' sum ')'

so ``^`` binds tighter than unary minus, which binds tighter than ``*``
and ``/``; ``-t^2`` is ``-(t^2)`` and ``u*t^2`` is ``u*(t^2)``.
"""

import re
from dataclasses import dataclass

from ..errors import UsageError


class ParseError(UsageError):
    def __init__(self, message, offset, expected=None):
        self.offset = offset
        self.expected = expected
        hint = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at offset {offset}{hint}")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Comm:
    left: object
    right: object


@dataclass(frozen=True)
class Inv:
    operand: object


@dataclass(frozen=True)
class WithPrecision:
    """``body + O(t^prec)``; ``body`` is None for a bare ``O(t^prec)``."""

    body: object
    prec: int


SYMBOLS = ("u", "w", "t")
FUNCTIONS = ("comm", "inv")

_TOKEN = re.compile(r"(\d+)|([A-Za-z_]\w*)|(\S)")


def tokenize(text):
    """List of ``(kind, text, char_offset)``; the last token has kind ``end``."""
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        num, name, op = m.groups()
        kind = "int" if num else "name" if name else "op"
        tokens.append((kind, m.group(0), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def offset(self):
        # byte offset into the UTF-8 source
        return len(self.text[: self.tok[2]].encode())

    def fail(self, message, expected=None):
        raise ParseError(message, self.offset(), expected)

    def at(self, kind, value=None):
        k, v, _ = self.tok
        return k == kind and (value is None or v == value)

    def take(self, kind, value=None, expected=None):
        if not self.at(kind, value):
            got = self.tok[1] or "end of input"
            self.fail(f"unexpected {got!r}", expected or (repr(value) if value else kind))
        tok = self.tok
        self.i += 1
        return tok

    def at_precision_marker(self):
        return self.at("name", "O") and self.tokens[self.i + 1][1] == "("

    def parse(self):
        if self.at_precision_marker():
            node = WithPrecision(None, self.precision_marker())
        else:
            body = self.sum()
            node = body
            if self.at("op", "+") and self.tokens[self.i + 1][1] == "O":
                self.i += 1
                node = WithPrecision(body, self.precision_marker())
        if not self.at("end"):
            self.fail(f"unexpected {self.tok[1]!r}", "operator or end of input")
        return node

    def precision_marker(self):
        self.take("name", "O")
        self.take("op", "(")
        self.take("name", "t")
        self.take("op", "^")
        prec = self.signed_int()
        self.take("op", ")")
        return prec

    def signed_int(self):
        sign = 1
        if self.at("op", "-"):
            self.i += 1
            sign = -1
        return sign * int(self.take("int", expected="integer exponent")[1])

    def sum(self):
        node = self.product()
        while self.at("op", "+") or self.at("op", "-"):
            if self.at("op", "+") and self.tokens[self.i + 1][1] == "O":
                break
            op = self.take("op")[1]
            right = self.product()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def product(self):
        node = self.unary()
        while self.at("op", "*") or self.at("op", "/"):
            op = self.take("op")[1]
            right = self.unary()
            node = Mul(node, right) if op == "*" else Div(node, right)
        return node

    def unary(self):
        if self.at("op", "-"):
            self.i += 1
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("op", "^"):
            self.i += 1
            return Pow(base, self.signed_int())
        return base

    def atom(self):
        kind, value, _ = self.tok
        if kind == "int":
            self.i += 1
            return Num(int(value))
        if kind == "name" and value in SYMBOLS:
            self.i += 1
            return Sym(value)
        if kind == "name" and value in FUNCTIONS:
            self.i += 1
            self.take("op", "(")
            first = self.sum()
            if value == "comm":
                self.take("op", ",")
                second = self.sum()
                self.take("op", ")")
                return Comm(first, second)
            self.take("op", ")")
            return Inv(first)
        if kind == "op" and value == "(":
            self.i += 1
            node = self.sum()
            self.take("op", ")")
            return node
        if kind == "name":
            self.fail(f"unknown name {value!r}", "u, w, t, comm or inv")
        self.fail(f"unexpected {value or 'end of input'!r}", "number, symbol or '('")


def parse_expr(text):
    """Parse ``text`` into an expression tree; raises ParseError with an offset."""
    return _Parser(text).parse()


_LEVEL = {Add: 1, Sub: 1, Mul: 2, Div: 2, Neg: 3, Pow: 4}


def unparse(node):
    """Render a tree so that ``parse_expr(unparse(e)) == e``."""
    if isinstance(node, WithPrecision):
        marker = f"O(t^{node.prec})"
        return marker if node.body is None else f"{unparse(node.body)} + {marker}"
    return _unparse(node)


def _wrap(node, level, strict=False):
    inner = _LEVEL.get(type(node), 5)
    text = _unparse(node)
    if inner < level or (strict and inner == level):
        return f"({text})"
    return text


def _unparse(node):
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, (Add, Sub)):
        op = " + " if isinstance(node, Add) else " - "
        return _wrap(node.left, 1) + op + _wrap(node.right, 1, strict=True)
    if isinstance(node, (Mul, Div)):
        op = "*" if isinstance(node, Mul) else "/"
        return _wrap(node.left, 2) + op + _wrap(node.right, 2, strict=True)
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, 3)
    if isinstance(node, Pow):
        return _wrap(node.base, 5) + f"^{node.exponent}"
    if isinstance(node, Comm):
        return f"comm({_unparse(node.left)}, {_unparse(node.right)})"
    if isinstance(node, Inv):
        return f"inv({_unparse(node.operand)})"
    raise TypeError(f"not an expression node: {node!r}")
