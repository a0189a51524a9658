"""Truncated twisted Laurent series, the elements of D = L((t, sigma)).

A series is stored with an absolute precision ``prec``: it is known modulo
``t^prec``.  Multiplication follows the twisted rule ``t * a = sigma(a) * t``,
so the coefficient of ``t^r`` in ``x*y`` is ``sum_{i+j=r} a_i sigma^i(b_j)``.
"""

from .errors import DomainError, FieldMismatchError, UsageError
from .exactfield import field_sum

DEFAULT_PRECISION = 32


class _ZeroMarker:
    """Valuation reported for a series that is zero at its precision."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __reduce__(self):
        return (_ZeroMarker, ())


ZERO = _ZeroMarker()


def _is_scalar(a):
    return getattr(a, "_field_element", False) or isinstance(a, int) or hasattr(a, "denominator")


class SkewLaurentSeries:
    """An element of L((t, sigma)) known modulo ``t^prec``.

    Build instances with :func:`from_terms`, :func:`monomial` or
    :func:`constant` rather than calling the constructor.
    """

    __slots__ = ("ctx", "lead", "coeffs", "prec")

    def __init__(self, ctx, lead, coeffs, prec):
        self.ctx = ctx
        self.lead = lead
        self.coeffs = coeffs
        self.prec = prec

    @classmethod
    def _normalized(cls, ctx, start, coeffs, prec):
        # coeffs[k] is the coefficient of t^(start+k); trailing entries past prec are dropped
        coeffs = list(coeffs[: max(prec - start, 0)])
        k = 0
        while k < len(coeffs) and not coeffs[k]:
            k += 1
        if k == len(coeffs):
            return cls(ctx, None, (), prec)
        return cls(ctx, start + k, tuple(coeffs[k:]), prec)

    @property
    def is_zero(self):
        return self.lead is None

    @property
    def valuation(self):
        return ZERO if self.lead is None else self.lead

    @property
    def _low(self):
        # lowest exponent that can be nonzero; a ZERO series is O(t^prec)
        return self.prec if self.lead is None else self.lead

    def coeff(self, n):
        if n >= self.prec:
            raise UsageError(f"coefficient of t^{n} is beyond precision {self.prec}")
        if self.lead is None or n < self.lead:
            return self.ctx.zero()
        return self.coeffs[n - self.lead]

    def terms(self):
        """Nonzero ``(exponent, coefficient)`` pairs in increasing order."""
        if self.lead is None:
            return []
        return [(self.lead + k, c) for k, c in enumerate(self.coeffs) if c]

    def _check(self, other):
        if not isinstance(other, SkewLaurentSeries):
            raise UsageError(f"expected a series, got {other!r}")
        if other.ctx != self.ctx:
            raise FieldMismatchError(f"series over {self.ctx} and {other.ctx} do not mix")

    def __add__(self, other):
        if _is_scalar(other):
            other = constant(self.ctx, other, self.prec)
        if not isinstance(other, SkewLaurentSeries):
            return NotImplemented
        return add(self, other)

    def __radd__(self, other):
        if _is_scalar(other):
            return add(constant(self.ctx, other, self.prec), self)
        return NotImplemented

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        if _is_scalar(other):
            other = constant(self.ctx, other, self.prec)
        if not isinstance(other, SkewLaurentSeries):
            return NotImplemented
        return add(self, negate(other))

    def __rsub__(self, other):
        if _is_scalar(other):
            return add(constant(self.ctx, other, self.prec), negate(self))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, SkewLaurentSeries):
            return mul_incremental(self, other)
        if _is_scalar(other):
            return scale_right(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return scale_left(other, self)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return power(self, k)

    def inverse(self):
        return inverse(self)

    def __eq__(self, other):
        if not isinstance(other, SkewLaurentSeries):
            return NotImplemented
        return (self.ctx == other.ctx and self.lead == other.lead
                and self.prec == other.prec and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.lead, self.prec, self.coeffs))

    def __repr__(self):
        return f"<SkewLaurentSeries {self}>"

    def __str__(self):
        return format_series(self)


def from_terms(ctx, terms, prec=DEFAULT_PRECISION):
    """Series from ``(exponent, coefficient)`` pairs, known modulo ``t^prec``."""
    terms = [(int(e), ctx(c)) for e, c in terms]
    exps = [e for e, _ in terms]
    if len(set(exps)) != len(exps):
        raise UsageError(f"repeated exponent in {exps}")
    for e in exps:
        if e >= prec:
            raise UsageError(f"exponent {e} is not below the precision {prec}")
    nonzero = [(e, c) for e, c in terms if c]
    if not nonzero:
        return SkewLaurentSeries(ctx, None, (), prec)
    start = min(e for e, _ in nonzero)
    coeffs = [ctx.zero()] * (prec - start)
    for e, c in nonzero:
        coeffs[e - start] = c
    return SkewLaurentSeries._normalized(ctx, start, coeffs, prec)


def zero(ctx, prec=DEFAULT_PRECISION):
    return SkewLaurentSeries(ctx, None, (), prec)


def monomial(ctx, coeff, exponent, prec=DEFAULT_PRECISION):
    """``coeff * t^exponent``; ZERO when the exponent is at or past ``prec``."""
    if exponent >= prec:
        return zero(ctx, prec)
    return from_terms(ctx, [(exponent, coeff)], prec)


def constant(ctx, c, prec=DEFAULT_PRECISION):
    return monomial(ctx, c, 0, prec)


def one(ctx, prec=DEFAULT_PRECISION):
    return constant(ctx, ctx.one(), prec)


def add(x, y):
    x._check(y)
    prec = min(x.prec, y.prec)
    if x.is_zero and y.is_zero:
        return zero(x.ctx, prec)
    start = min(x._low, y._low)
    if start >= prec:
        return zero(x.ctx, prec)
    z = x.ctx.zero()
    out = [z] * (prec - start)
    for s in (x, y):
        if s.is_zero:
            continue
        off = s.lead - start
        for k, c in enumerate(s.coeffs[: prec - s.lead]):
            out[off + k] = out[off + k] + c
    return SkewLaurentSeries._normalized(x.ctx, start, out, prec)


def negate(x):
    return SkewLaurentSeries(x.ctx, x.lead, tuple(-c for c in x.coeffs), x.prec)


def subtract(x, y):
    return add(x, negate(y))


def scale_left(c, x):
    """``c * x`` for a field scalar ``c``; precision is unchanged."""
    c = x.ctx(c)
    if not c:
        return zero(x.ctx, x.prec)
    return SkewLaurentSeries(x.ctx, x.lead, tuple(c * a for a in x.coeffs), x.prec)


def scale_right(x, c):
    """``x * c``: the coefficient of ``t^i`` picks up ``sigma^i(c)``."""
    c = x.ctx(c)
    if not c:
        return zero(x.ctx, x.prec)
    sigma = x.ctx.sigma
    return SkewLaurentSeries(
        x.ctx, x.lead,
        tuple(a * sigma.apply_power(x.lead + k, c) for k, a in enumerate(x.coeffs)),
        x.prec,
    )


def product_precision(x, y):
    return min(x.prec + y._low, y.prec + x._low)


def mul(x, y):
    """Twisted product, each ``sigma^i(b_j)`` evaluated by its closed form."""
    x._check(y)
    prec = product_precision(x, y)
    if x.is_zero or y.is_zero:
        return zero(x.ctx, prec)
    sigma = x.ctx.sigma
    ctx = x.ctx
    nx, ny = x.lead, y.lead
    start = nx + ny
    out = []
    for r in range(start, prec):
        cell = []
        for i in range(nx, r - ny + 1):
            a = x.coeffs[i - nx]
            if not a:
                continue
            b = y.coeffs[r - i - ny]
            if not b:
                continue
            cell.append(a * sigma.apply_power(i, b))
        out.append(field_sum(cell, ctx.zero()))
    return SkewLaurentSeries._normalized(ctx, start, out, prec)


def mul_incremental(x, y):
    """Same product as :func:`mul`, reusing twisted rows.

    Row ``i`` holds ``sigma^i(b_j)``; row ``i+1`` is obtained by applying
    sigma once to row ``i`` instead of evaluating ``sigma^(i+1)`` afresh.
    """
    x._check(y)
    prec = product_precision(x, y)
    if x.is_zero or y.is_zero:
        return zero(x.ctx, prec)
    sigma = x.ctx.sigma
    ctx = x.ctx
    nx, ny = x.lead, y.lead
    start = nx + ny
    width = prec - start
    cells = [[] for _ in range(width)]
    # only b_j with j - ny < width - (i - nx) contribute to row i
    row = [sigma.apply_power(nx, b) if b else b for b in y.coeffs[:width]]
    for di in range(width):
        a = x.coeffs[di]
        if a:
            for dj in range(width - di):
                b = row[dj]
                if b:
                    cells[di + dj].append(a * b)
        if di + 1 < width:
            row = [sigma.apply(b) if b else b for b in row[: width - di - 1]]
    z = ctx.zero()
    out = [field_sum(cell, z) for cell in cells]
    return SkewLaurentSeries._normalized(ctx, start, out, prec)


def valuation(x):
    return x.valuation


def leading_coeff(x):
    if x.is_zero:
        raise DomainError("the zero series has no leading coefficient")
    return x.coeffs[0]


def inverse(x):
    """Two-sided inverse by coefficient recursion.

    With ``n = v(x)`` the result has valuation ``-n`` and absolute
    precision ``x.prec - 2n``.
    """
    if x.is_zero:
        raise DomainError("inverse of a series that is zero at its precision")
    ctx, sigma = x.ctx, x.ctx.sigma
    n = x.lead
    count = x.prec - n
    # sigma^{-n} of the coefficients of x, so each step is a plain convolution
    a = [sigma.apply_power(-n, c) if c else c for c in x.coeffs[:count]]
    b0 = a[0].inverse() if hasattr(a[0], "inverse") else 1 / a[0]
    neg_b0 = -b0
    b = [b0]
    for m in range(1, count):
        cell = []
        for p in range(1, m + 1):
            ap = a[p]
            if not ap:
                continue
            bq = b[m - p]
            if not bq:
                continue
            cell.append(ap * sigma.apply_power(p, bq))
        acc = field_sum(cell, ctx.zero())
        b.append(neg_b0 * acc if acc else acc)
    return SkewLaurentSeries(ctx, -n, tuple(b), x.prec - 2 * n)


def power(x, k):
    if k < 0:
        if x.is_zero:
            raise DomainError("negative power of a zero series")
        return power(inverse(x), -k)
    if k == 0:
        return one(x.ctx, x.prec)
    result = x
    for _ in range(k - 1):
        result = mul_incremental(result, x)
    return result


def truncate(x, prec):
    if prec > x.prec:
        raise UsageError(f"cannot raise precision from {x.prec} to {prec}")
    if x.is_zero or x.lead >= prec:
        return zero(x.ctx, prec)
    return SkewLaurentSeries._normalized(x.ctx, x.lead, x.coeffs, prec)


def equals_to_precision(x, y):
    """True when ``x`` and ``y`` agree at every exponent below both precisions."""
    x._check(y)
    prec = min(x.prec, y.prec)
    return truncate(x, prec) == truncate(y, prec)


def _wrap_coeff(text):
    depth = 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and k > 0:
            return f"({text})"
    return text


def format_series(x):
    """Text form ``c*t^k + ... + O(t^P)``, accepted back by the CLI parser."""
    parts = []
    for e, c in x.terms():
        text = _wrap_coeff(str(c))
        if e == 0:
            body = text
        else:
            mono = "t" if e == 1 else f"t^{e}"
            if text == "1":
                body = mono
            elif text == "-1":
                body = "-" + mono
            else:
                body = f"{text}*{mono}"
        if parts and body.startswith("-"):
            parts.append(" - " + body[1:])
        else:
            parts.append((" + " if parts else "") + body)
    parts.append((" + " if parts else "") + f"O(t^{x.prec})")
    return "".join(parts)
