"""Multiplicative commutators, valuation-kernel checks and centre checks."""

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UsageError
from .exactfield import GaloisField, RationalField, RationalFunctionField
from .series import (
    DEFAULT_PRECISION,
    SkewLaurentSeries,
    equals_to_precision,
    inverse,
    mul,
    mul_incremental,
)


@dataclass(frozen=True)
class CommutatorRecord:
    x: SkewLaurentSeries
    y: SkewLaurentSeries
    value: SkewLaurentSeries
    valuation_of_value: int


def commutator(x, y):
    """``((x*y) * x^-1) * y^-1``, with the valuation of the result recorded."""
    if x.is_zero or y.is_zero:
        raise DomainError("commutator of a series that is zero at its precision")
    value = mul(mul(mul(x, y), inverse(x)), inverse(y))
    return CommutatorRecord(x, y, value, value.valuation)


def commutator_product(records):
    """Left-to-right product of commutator values: an element of D'."""
    records = list(records)
    if not records:
        raise UsageError("commutator_product needs at least one record")
    out = records[0].value
    for rec in records[1:]:
        out = mul_incremental(out, rec.value)
    return out


def kernel_check(s):
    """True iff ``s`` lies in the kernel of the valuation, i.e. v(s) = 0."""
    if s.is_zero:
        raise DomainError("valuation is undefined on a zero series")
    return s.lead == 0


class Centrality(enum.Enum):
    CENTRAL = "central-to-precision"
    NON_CENTRAL = "non-central"


@dataclass
class CentreReport:
    candidate: SkewLaurentSeries
    tested_against: list
    verdict: Centrality
    witness: SkewLaurentSeries = None
    precision: int = None

    @property
    def probe_count(self):
        return len(self.tested_against)

    @property
    def central(self):
        return self.verdict is Centrality.CENTRAL


def commutes(a, g):
    return equals_to_precision(mul_incremental(a, g), mul_incremental(g, a))


def centre_check(candidate, probes):
    """Test ``candidate`` against every probe; stop at the first that fails."""
    probes = list(probes)
    if not probes:
        raise UsageError("centre_check needs at least one probe")
    precision = min([candidate.prec] + [g.prec for g in probes])
    for g in probes:
        if not commutes(candidate, g):
            return CentreReport(candidate, probes, Centrality.NON_CENTRAL, g, precision)
    return CentreReport(candidate, probes, Centrality.CENTRAL, None, precision)


@dataclass(frozen=True)
class SeriesProfile:
    """How :func:`random_series` draws: lead range, density and precision."""

    lead_range: tuple = (-3, 3)
    density: float = 0.7
    prec: int = DEFAULT_PRECISION
    dense: bool = False


DEFAULT_PROFILE = SeriesProfile()


def coefficient_pool(ctx):
    """Nonzero coefficient atoms used by the random generators."""
    fld = ctx.field
    ints = [Fraction(n) for n in range(-5, 6) if n]
    if isinstance(fld, RationalFunctionField):
        u = fld.gen()
        return [fld(n) for n in ints] + [u, u + 1, u - 1, 1 / u, 1 / (u + 1)]
    if isinstance(fld, GaloisField):
        return [e for e in fld.elements() if e]
    if isinstance(fld, RationalField):
        return ints + [Fraction(1, 2), Fraction(-1, 3)]
    raise UsageError(f"no coefficient pool for {fld!r}")


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_series(ctx, seed, profile=DEFAULT_PROFILE):
    """Deterministic nonzero series for a seed (or a ``random.Random``).

    The lead is uniform in ``profile.lead_range`` and its coefficient is
    always nonzero; every later coefficient below ``profile.prec`` is
    nonzero with probability ``profile.density`` (always, if ``dense``).
    """
    rng = _rng(seed)
    pool = coefficient_pool(ctx)
    lo, hi = profile.lead_range
    lead = rng.randint(lo, min(hi, profile.prec - 1))
    coeffs = [rng.choice(pool)]
    for _ in range(lead + 1, profile.prec):
        if profile.dense or rng.random() < profile.density:
            coeffs.append(rng.choice(pool))
        else:
            coeffs.append(ctx.zero())
    return SkewLaurentSeries(ctx, lead, tuple(ctx(c) for c in coeffs), profile.prec)


def fixed_scalar_pool(ctx):
    """Nonzero scalars known to lie in the fixed field F."""
    fld = ctx.field
    if isinstance(fld, GaloisField):
        return [fld(n) for n in range(1, fld.p)]
    return [Fraction(n, d) for n in range(-4, 5) if n for d in (1, 2, 3)]


def random_fixed_scalar(ctx, seed):
    return ctx(_rng(seed).choice(fixed_scalar_pool(ctx)))
