"""Exact coefficient fields L, their automorphisms, and skew contexts."""

from fractions import Fraction
from numbers import Rational

from ..errors import DomainError, FieldMismatchError
from .automorphism import INFINITE, Automorphism, Frobenius, Identity, Scale, Shift
from .context import SkewContext
from .galois import F4, GaloisField, GaloisFieldElement
from .ratfunc import QQ, QU, RationalField, RationalFunction, RationalFunctionField, sum_rational_functions

__all__ = [
    "INFINITE", "Automorphism", "Frobenius", "Identity", "Scale", "Shift",
    "SkewContext", "F4", "GaloisField", "GaloisFieldElement", "QQ", "QU",
    "RationalField", "RationalFunction", "RationalFunctionField",
    "field_of", "field_add", "field_sub", "field_neg", "field_mul", "field_inv",
    "aut_apply", "aut_apply_power", "aut_order", "is_fixed", "field_sum",
]


def field_of(a):
    if isinstance(a, (int, Rational)):
        return QQ
    if getattr(a, "_field_element", False):
        return a.field
    raise FieldMismatchError(f"{a!r} is not a field element")


def _common(a, b):
    fa, fb = field_of(a), field_of(b)
    if fa == fb or fa is QQ or fb is QQ:
        return
    raise FieldMismatchError(f"operands live in {fa.name} and {fb.name}")


def field_add(a, b):
    _common(a, b)
    return a + b


def field_sub(a, b):
    _common(a, b)
    return a - b


def field_neg(a):
    field_of(a)
    return -a


def field_mul(a, b):
    _common(a, b)
    return a * b


def field_inv(a):
    if isinstance(a, (int, Rational)):
        a = Fraction(a)
        if a == 0:
            raise DomainError("inverse of zero in Q")
        return 1 / a
    field_of(a)
    return a.inverse()


def aut_apply(sigma, a):
    return sigma.apply(a)


def aut_apply_power(sigma, i, a):
    return sigma.apply_power(i, a)


def aut_order(sigma, field=None):
    if isinstance(sigma, Frobenius):
        return sigma.order(field)
    return sigma.order()


def is_fixed(sigma, a):
    return sigma.apply(a) == a


def field_sum(terms, zero):
    """Exact sum of field elements; ``zero`` is returned for an empty list."""
    terms = list(terms)
    if not terms:
        return zero
    if isinstance(terms[0], RationalFunction):
        return sum_rational_functions(terms)
    acc = terms[0]
    for x in terms[1:]:
        acc = acc + x
    return acc
