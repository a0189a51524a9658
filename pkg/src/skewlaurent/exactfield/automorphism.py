"""Automorphisms of the coefficient field, with closed-form powers."""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import flint

from ..errors import FieldMismatchError, UsageError
from .galois import GaloisField, GaloisFieldElement
from .ratfunc import Poly, RationalFunction, RationalFunctionField, to_fmpq

INFINITE = math.inf


def _is_prime_field_scalar(a):
    return isinstance(a, (int, Rational, flint.fmpq))


class Automorphism:
    """Base class.  Subclasses implement ``apply_power`` and ``order``."""

    def apply(self, a):
        return self.apply_power(1, a)

    def apply_inverse(self, a):
        return self.apply_power(-1, a)

    def apply_power(self, i, a):
        raise NotImplementedError

    def order(self):
        raise NotImplementedError

    def check_field(self, field):
        raise NotImplementedError


@dataclass(frozen=True)
class Identity(Automorphism):
    def apply_power(self, i, a):
        return a

    def order(self):
        return 1

    def check_field(self, field):
        pass

    def __str__(self):
        return "identity"


def _require_qu(a, name):
    if isinstance(a, RationalFunction) or _is_prime_field_scalar(a):
        return
    raise FieldMismatchError(f"{name} acts on Q(u), not on {a!r}")


@dataclass(frozen=True)
class Shift(Automorphism):
    """u -> u + c on Q(u); infinite order."""

    c: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        if self.c == 0:
            raise UsageError("Shift(0) is the identity; use Identity")

    def apply_power(self, i, a):
        _require_qu(a, "Shift")
        if i == 0 or not isinstance(a, RationalFunction):
            return a
        return a.compose(Poly([to_fmpq(i * self.c), 1]))

    def order(self):
        return INFINITE

    def check_field(self, field):
        if not isinstance(field, RationalFunctionField):
            raise UsageError("Shift requires the field Q(u)")

    def __str__(self):
        return f"shift:{self.c}"


@dataclass(frozen=True)
class Scale(Automorphism):
    """u -> c*u on Q(u)."""

    c: Fraction = Fraction(-1)

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        if self.c == 0:
            raise UsageError("Scale(0) is not invertible")

    def apply_power(self, i, a):
        _require_qu(a, "Scale")
        if i == 0 or not isinstance(a, RationalFunction):
            return a
        return a.compose(Poly([0, to_fmpq(self.c ** i)]))

    def order(self):
        # the only roots of unity in Q are 1 and -1
        if self.c == 1:
            return 1
        if self.c == -1:
            return 2
        return INFINITE

    def check_field(self, field):
        if not isinstance(field, RationalFunctionField):
            raise UsageError("Scale requires the field Q(u)")

    def __str__(self):
        return f"scale:{self.c}"


@dataclass(frozen=True)
class Frobenius(Automorphism):
    """x -> x^p on F_{p^k}; order k."""

    def apply_power(self, i, a):
        if isinstance(a, GaloisFieldElement):
            return GaloisFieldElement(a.field, a.field.frobenius_power(a.value, i))
        if _is_prime_field_scalar(a):
            return a
        raise FieldMismatchError(f"Frobenius acts on finite fields, not on {a!r}")

    def order(self, field=None):
        if field is None:
            raise UsageError("the order of Frobenius depends on the field; pass it or use SkewContext.order")
        return field.k

    def check_field(self, field):
        if not isinstance(field, GaloisField):
            raise UsageError("Frobenius requires a finite field")

    def __str__(self):
        return "frobenius"
