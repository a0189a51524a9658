"""The rational field Q and the rational function field Q(u).

Elements of Q are plain :class:`fractions.Fraction` values.  Elements of
Q(u) are :class:`RationalFunction` instances kept in canonical form:
numerator and denominator coprime, denominator monic.  Polynomials are
``flint.fmpq_poly`` objects (lowest degree first).
"""

from fractions import Fraction
from numbers import Rational

import flint

from ..errors import DomainError, FieldMismatchError

Poly = flint.fmpq_poly

_ZERO = Poly([])
_ONE = Poly([1])


def to_fmpq(c):
    if isinstance(c, flint.fmpq):
        return c
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def to_fraction(c):
    return Fraction(int(c.p), int(c.q))


def poly_str(p, var="u"):
    """Render a polynomial highest degree first, e.g. ``u^2+2*u-1/2``."""
    if p.is_zero():
        return "0"
    parts = []
    for d in range(p.degree(), -1, -1):
        c = to_fraction(p[d])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if d == 0:
            body = str(c)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if c == 1 else f"{c}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def poly_lcm(a, b):
    return (a * b) // a.gcd(b)


class RationalField:
    """The prime field Q; elements are ``Fraction`` instances."""

    name = "Q"
    characteristic = 0

    def __call__(self, value):
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        if isinstance(value, flint.fmpq):
            return to_fraction(value)
        raise FieldMismatchError(f"cannot coerce {value!r} into Q")

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def gen(self):
        raise FieldMismatchError("Q has no generator symbol")

    def describe(self):
        return {"kind": "q"}

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class RationalFunctionField:
    """The field Q(u) of rational functions in one variable ``u``."""

    name = "Q(u)"
    characteristic = 0
    var = "u"

    def __call__(self, value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, Rational, flint.fmpq)):
            return RationalFunction.constant(value)
        if isinstance(value, flint.fmpq_poly):
            return RationalFunction._raw(value, _ONE)
        raise FieldMismatchError(f"cannot coerce {value!r} into Q(u)")

    def zero(self):
        return RationalFunction._raw(_ZERO, _ONE)

    def one(self):
        return RationalFunction._raw(_ONE, _ONE)

    def gen(self):
        return RationalFunction._raw(Poly([0, 1]), _ONE)

    def describe(self):
        return {"kind": "q-u"}

    def __repr__(self):
        return "QU"

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField)

    def __hash__(self):
        return hash("Q(u)")


QQ = RationalField()
QU = RationalFunctionField()


class RationalFunction:
    """An element ``num/den`` of Q(u) in canonical form."""

    __slots__ = ("num", "den")
    field = QU
    _field_element = True

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly(num)
        den = _ONE if den is None else (den if isinstance(den, Poly) else Poly(den))
        if den.is_zero():
            raise DomainError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = _ZERO, _ONE
            return
        g = num.gcd(den)
        if not g.is_one():
            num, den = num // g, den // g
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num / lc, den / lc
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        # caller guarantees coprime num/den with monic den
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def constant(cls, c):
        return cls._raw(Poly([to_fmpq(c)]) if c else _ZERO, _ONE)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Rational, flint.fmpq)):
            return RationalFunction.constant(other)
        if getattr(other, "_field_element", False):
            raise FieldMismatchError(f"cannot combine Q(u) element with {other.field!r} element")
        return NotImplemented

    def __reduce__(self):
        coeffs = lambda p: [str(c) for c in p.coeffs()]
        return (_rebuild, (coeffs(self.num), coeffs(self.den)))

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self):
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return to_fraction(self.num[0]) if not self.num.is_zero() else Fraction(0)

    def compose(self, q):
        """Substitute the polynomial ``q`` for ``u``."""
        if self.is_constant():
            return self
        num, den = self.num(q), self.den(q)
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num / lc, den / lc
        return RationalFunction._raw(num, den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            if self.den.is_one():
                return RationalFunction._raw(self.num + other.num, _ONE)
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return QU.zero()
        if self.den.is_one() and other.den.is_one():
            return RationalFunction._raw(self.num * other.num, _ONE)
        # cross-cancel keeps the operands of the final gcd small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        return RationalFunction._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DomainError("inverse of zero in Q(u)")
        num, den = self.den, self.num
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num / lc, den / lc
        return RationalFunction._raw(num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction._raw(self.num ** e, self.den ** e)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((str(self.num), str(self.den)))

    def __str__(self):
        if self.den.is_one():
            return poly_str(self.num)
        num = poly_str(self.num)
        if _needs_parens(num):
            num = f"({num})"
        den = poly_str(self.den)
        if _needs_parens(den) or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalFunction({self})"


def _rebuild(num, den):
    return RationalFunction._raw(Poly([to_fmpq(Fraction(c)) for c in num]), Poly([to_fmpq(Fraction(c)) for c in den]))


def _needs_parens(text):
    # a leading sign is harmless; any later +/- means several terms
    return "+" in text[1:] or "-" in text[1:] or "/" in text


def sum_rational_functions(terms):
    """Exact sum of many Q(u) elements over the lcm of their denominators.

    A single gcd at the end replaces the one-per-addition of a running sum.
    """
    terms = [t for t in terms if t]
    if not terms:
        return QU.zero()
    den = terms[0].den
    for t in terms[1:]:
        if t.den != den:
            den = poly_lcm(den, t.den)
    num = _ZERO
    for t in terms:
        num += t.num if t.den == den else t.num * (den // t.den)
    return RationalFunction(num, den)
