"""Finite fields F_{p^k} = F_p[w]/(modulus) with table-driven arithmetic.

An element is stored as an integer whose base-p digits are the
coefficients of its representative, lowest degree first; so in
F_4 = F_2[w]/(w^2+w+1) the element w+1 is stored as 3.
"""

from fractions import Fraction
from numbers import Rational

from ..errors import DomainError, FieldMismatchError, UsageError

MAX_ORDER = 1 << 20


def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _prime_factors(n):
    out, f = set(), 2
    while f * f <= n:
        while n % f == 0:
            out.add(f)
            n //= f
        f += 1
    if n > 1:
        out.add(n)
    return out


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, m, p):
    a = _trim(list(a))
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _is_irreducible(m, p):
    k = len(m) - 1
    # trial division by every monic polynomial of degree 1..k//2
    for d in range(1, k // 2 + 1):
        for idx in range(p ** d):
            cand = [(idx // p ** i) % p for i in range(d)] + [1]
            if not _polymod(m, cand, p):
                return False
    return True


class GaloisField:
    """F_{p^k} with an explicit irreducible modulus (coefficients low to high)."""

    def __init__(self, p, k, modulus):
        if not _is_prime(p):
            raise UsageError(f"characteristic {p} is not prime")
        modulus = tuple(int(c) % p for c in modulus)
        if k < 1 or len(modulus) != k + 1 or modulus[-1] == 0:
            raise UsageError(f"modulus {modulus} does not have degree {k}")
        if p ** k > MAX_ORDER:
            raise UsageError(f"field of order {p}^{k} exceeds the table limit {MAX_ORDER}")
        lead_inv = pow(modulus[-1], -1, p)
        modulus = tuple(c * lead_inv % p for c in modulus)
        if not _is_irreducible(list(modulus), p):
            raise UsageError(f"modulus {modulus} is reducible over F_{p}")
        self.p, self.k, self.modulus = p, k, modulus
        self.order = p ** k
        self._build_tables()

    def _digits(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds):
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def _slow_mul(self, a, b):
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        r = _polymod(prod, list(self.modulus), self.p)
        return self._undigits(r + [0] * (self.k - len(r)))

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        q1 = self.order - 1
        factors = _prime_factors(q1) if q1 > 1 else set()
        for g in range(1, self.order):
            if all(self._slow_pow(g, q1 // r) != 1 for r in factors):
                break
        exp = [0] * q1
        log = [0] * self.order
        x = 1
        for i in range(q1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        self._exp, self._log = exp, log
        self.primitive = g

    # raw integer arithmetic

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a):
        if self.p == 2:
            return a
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise DomainError(f"inverse of zero in {self.name}")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def power(self, a, e):
        if a == 0:
            if e < 0:
                raise DomainError(f"inverse of zero in {self.name}")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def frobenius_power(self, a, i):
        """x -> x^(p^(i mod k)); negative i gives the inverse automorphism."""
        return self.power(a, self.p ** (i % self.k))

    # element-level API

    @property
    def name(self):
        return f"F_{self.order}"

    def __call__(self, value):
        if isinstance(value, GaloisFieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value.field.name} element used in {self.name}")
            return value
        if isinstance(value, int):
            return GaloisFieldElement(self, value % self.p)
        if isinstance(value, Rational):
            value = Fraction(value)
            if value.denominator % self.p == 0:
                raise DomainError(f"{value} has no image in {self.name}")
            return GaloisFieldElement(self, value.numerator * pow(value.denominator, -1, self.p) % self.p)
        if isinstance(value, (list, tuple)):
            return GaloisFieldElement(self, self._undigits(_polymod(value, list(self.modulus), self.p) + [0] * self.k))
        raise FieldMismatchError(f"cannot coerce {value!r} into {self.name}")

    def element(self, index):
        return GaloisFieldElement(self, index)

    def elements(self):
        return [GaloisFieldElement(self, a) for a in range(self.order)]

    def zero(self):
        return GaloisFieldElement(self, 0)

    def one(self):
        return GaloisFieldElement(self, 1)

    def gen(self):
        """The class of w (or the constant itself when k = 1)."""
        return self([0, 1])

    @property
    def characteristic(self):
        return self.p

    def describe(self):
        return {"kind": "gf", "p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return isinstance(other, GaloisField) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GaloisField({self.p}, {self.k}, {list(self.modulus)})"


class GaloisFieldElement:
    __slots__ = ("field", "value")
    _field_element = True

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, GaloisFieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{self.field.name} and {other.field.name} elements do not mix")
            return other.value
        if isinstance(other, (int, Rational)):
            return self.field(other).value
        if getattr(other, "_field_element", False):
            raise FieldMismatchError(f"cannot combine {self.field.name} element with {other!r}")
        return NotImplemented

    def _new(self, v):
        return GaloisFieldElement(self.field, v)

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self.field.add(self.value, b))

    __radd__ = __add__

    def __neg__(self):
        return self._new(self.field.neg(self.value))

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self.field.add(self.value, self.field.neg(b)))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self.field.add(b, self.field.neg(self.value)))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def inverse(self):
        return self._new(self.field.inv(self.value))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self.field.mul(self.value, self.field.inv(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self.field.mul(b, self.field.inv(self.value)))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return self._new(self.field.power(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, GaloisFieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.value))

    def coefficients(self):
        return self.field._digits(self.value)

    def __str__(self):
        ds = self.coefficients()
        parts = []
        for d in range(len(ds) - 1, -1, -1):
            c = ds[d]
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                mono = "w" if d == 1 else f"w^{d}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"GaloisFieldElement({self}, {self.field.name})"


F4 = GaloisField(2, 2, (1, 1, 1))
