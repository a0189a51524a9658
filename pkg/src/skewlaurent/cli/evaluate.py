"""Evaluate parsed expressions to series in a given context.

Subexpressions free of ``t`` stay exact field scalars, and ``t^k`` is the
exact monomial, so a printed series parses back at its own precision.
"""

from ..errors import DomainError, UsageError
from ..exactfield import GaloisField, RationalFunctionField
from ..grouplab import commutator
from ..series import (
    DEFAULT_PRECISION,
    SkewLaurentSeries,
    add,
    constant,
    inverse,
    monomial,
    mul,
    negate,
    power,
    scale_left,
    scale_right,
    truncate,
    zero,
)
from .parser import Add, Comm, Div, Inv, Mul, Neg, Num, Pow, Sub, Sym, WithPrecision, parse_expr


def _is_series(v):
    return isinstance(v, SkewLaurentSeries)


def _series(v, ctx, prec):
    return v if _is_series(v) else constant(ctx, v, prec)


def _field_inverse(c):
    if not c:
        raise DomainError("division by zero")
    return c.inverse() if hasattr(c, "inverse") else 1 / c


class _Evaluator:
    def __init__(self, ctx, prec):
        self.ctx = ctx
        self.prec = prec

    def __call__(self, node):
        ctx, prec = self.ctx, self.prec
        if isinstance(node, Num):
            return ctx(node.value)
        if isinstance(node, Sym):
            return self.symbol(node.name)
        if isinstance(node, Neg):
            v = self(node.operand)
            return negate(v) if _is_series(v) else -v
        if isinstance(node, (Add, Sub)):
            a, b = self(node.left), self(node.right)
            if isinstance(node, Sub):
                b = negate(b) if _is_series(b) else -b
            if not _is_series(a) and not _is_series(b):
                return a + b
            return add(_series(a, ctx, prec), _series(b, ctx, prec))
        if isinstance(node, Mul):
            return self.product(self(node.left), self(node.right))
        if isinstance(node, Div):
            a, b = self(node.left), self(node.right)
            if _is_series(b):
                return self.product(a, inverse(b))
            return self.product(a, _field_inverse(b))
        if isinstance(node, Pow):
            if node.base == Sym("t"):
                return monomial(ctx, ctx.one(), node.exponent, prec)
            v = self(node.base)
            if _is_series(v):
                return power(v, node.exponent)
            if node.exponent < 0:
                return _field_inverse(v) ** (-node.exponent)
            return v ** node.exponent
        if isinstance(node, Inv):
            v = self(node.operand)
            return inverse(v) if _is_series(v) else _field_inverse(v)
        if isinstance(node, Comm):
            x = _series(self(node.left), ctx, prec)
            y = _series(self(node.right), ctx, prec)
            return commutator(x, y).value
        raise UsageError(f"cannot evaluate {node!r}")

    def symbol(self, name):
        fld = self.ctx.field
        if name == "t":
            return monomial(self.ctx, self.ctx.one(), 1, self.prec)
        if name == "u" and isinstance(fld, RationalFunctionField):
            return fld.gen()
        if name == "w" and isinstance(fld, GaloisField):
            return fld.gen()
        raise UsageError(f"symbol {name!r} is not available over {fld.name}")

    def product(self, a, b):
        if _is_series(a) and _is_series(b):
            return mul(a, b)
        if _is_series(a):
            return scale_right(a, b)
        if _is_series(b):
            return scale_left(a, b)
        return a * b


def evaluate(expr, ctx, prec=DEFAULT_PRECISION):
    """Series value of ``expr``; a trailing ``O(t^P)`` overrides ``prec``."""
    if isinstance(expr, WithPrecision):
        prec = expr.prec
        if expr.body is None:
            return zero(ctx, prec)
        expr = expr.body
    value = _Evaluator(ctx, prec)(expr)
    value = _series(value, ctx, prec)
    return truncate(value, prec) if value.prec > prec else value


def eval_text(text, ctx, prec=DEFAULT_PRECISION):
    return evaluate(parse_expr(text), ctx, prec)
