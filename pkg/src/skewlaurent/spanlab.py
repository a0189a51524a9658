"""Membership of a series in the F-span of a set of generators.

Non-membership is only ever certified by the valuation obstruction: if
every generator has valuation >= 0, any F-linear combination has valuation
>= 0 (or vanishes), so a target of negative valuation is outside the span.
The constructive solver works only where F = Q, i.e. under a shift of Q(u).
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UsageError
from .exactfield import RationalFunctionField, Shift
from .exactfield.ratfunc import poly_lcm, to_fraction
from .grouplab import DEFAULT_PROFILE, commutator, commutator_product, random_series
from .linalg import solve_rational
from .series import add, monomial, negate, scale_left, truncate, zero


@dataclass(frozen=True)
class SpanProblem:
    ctx: object
    target: object
    generators: tuple
    prec: int = None

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise UsageError("a span problem needs at least one generator")
        for s in (self.target,) + gens:
            if s.ctx != self.ctx:
                raise UsageError("all series of a span problem must share its context")
        floor = min(s.prec for s in (self.target,) + gens)
        prec = floor if self.prec is None else min(self.prec, floor)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "prec", prec)


@dataclass(frozen=True)
class InSpan:
    coefficients: tuple
    kind = "IN_SPAN"

    def to_dict(self):
        return {"kind": self.kind, "coefficients": [str(c) for c in self.coefficients]}


@dataclass(frozen=True)
class Obstruction:
    min_generator_valuation: int
    target_valuation: int
    kind = "NOT_IN_SPAN_OBSTRUCTION"

    def to_dict(self):
        return {
            "kind": self.kind,
            "min_generator_valuation": self.min_generator_valuation,
            "target_valuation": self.target_valuation,
        }


@dataclass(frozen=True)
class Undecided:
    reason: str
    kind = "UNDECIDED"

    def to_dict(self):
        return {"kind": self.kind, "reason": self.reason}


def combination(ctx, coefficients, generators, prec):
    """``sum c_i * g_i`` truncated to ``prec``."""
    out = zero(ctx, prec)
    for c, g in zip(coefficients, generators):
        out = add(out, truncate(scale_left(c, g), min(prec, g.prec)))
    return truncate(out, min(prec, out.prec))


def residual(problem, coefficients):
    """``target - sum c_i g_i`` at the problem's working precision."""
    combo = combination(problem.ctx, coefficients, problem.generators, problem.prec)
    return truncate(add(problem.target, negate(combo)), problem.prec)


def valuation_obstruction(problem):
    target = problem.target
    if target.is_zero:
        raise DomainError("the target is zero at its precision")
    lows = [g.lead if not g.is_zero else g.prec for g in problem.generators]
    min_val = min(lows)
    if min_val >= 0 and target.lead < 0:
        nonzero = [g.lead for g in problem.generators if not g.is_zero]
        return Obstruction(min(nonzero) if nonzero else min_val, target.lead)
    return Undecided("no valuation obstruction")


def _require_shift(ctx):
    if not (isinstance(ctx.field, RationalFunctionField) and isinstance(ctx.sigma, Shift)):
        raise UsageError("the coefficient-matching solver only handles shifts of Q(u), where F = Q")


def linear_system(problem):
    """Equations over Q whose solutions are the rational coefficient vectors.

    For each exponent ``r`` below the working precision the identity
    ``sum c_i g_{i,r}(u) = target_r(u)`` is multiplied through by the lcm of
    the denominators, then matched coefficient by coefficient in ``u``.
    """
    ctx = problem.ctx
    _require_shift(ctx)
    series = (problem.target,) + problem.generators
    lows = [s.lead for s in series if not s.is_zero]
    rows, rhs = [], []
    if not lows:
        return rows, rhs
    for r in range(min(lows), problem.prec):
        cells = [ctx(s.coeff(r)) for s in series]
        if not any(cells):
            continue
        den = cells[0].den
        for c in cells[1:]:
            den = poly_lcm(den, c.den)
        cleared = [c.num * (den // c.den) for c in cells]
        top = max(p.degree() for p in cleared)
        for d in range(top + 1):
            rows.append([to_fraction(p[d]) for p in cleared[1:]])
            rhs.append(to_fraction(cleared[0][d]))
    return rows, rhs


def coefficient_matching_solve(problem):
    rows, rhs = linear_system(problem)
    n = len(problem.generators)
    if not rows:
        sol = [Fraction(0)] * n
    else:
        sol = solve_rational(rows, rhs)
    if sol is None:
        return Undecided("no solution at this precision")
    if not residual(problem, sol).is_zero:
        raise AssertionError("linear solution failed to reproduce the target")
    return InSpan(tuple(sol))


def witness_generators(ctx, budget, seed=0, profile=DEFAULT_PROFILE):
    """Random commutators, with every fourth entry a product of 2-4 of them."""
    rng = random.Random(f"witness:{seed}")
    out = []
    for i in range(budget):
        n = rng.randint(2, 4) if i % 4 == 3 else 1
        records = []
        for _ in range(n):
            x = random_series(ctx, rng, profile)
            y = random_series(ctx, rng, profile)
            records.append(commutator(x, y))
        out.append(commutator_product(records))
    return out


def codimension_witness_suite(ctx, k_max, generator_budget, seed=0, profile=DEFAULT_PROFILE, generators=None):
    """Obstruction verdicts for the targets ``t^-1, ..., t^-k_max``."""
    if k_max < 1:
        raise UsageError("k_max must be at least 1")
    if generators is None:
        if generator_budget < 1:
            raise UsageError("generator_budget must be at least 1")
        generators = witness_generators(ctx, generator_budget, seed, profile)
    verdicts = []
    for k in range(1, k_max + 1):
        target = monomial(ctx, ctx.one(), -k, profile.prec)
        verdicts.append(valuation_obstruction(SpanProblem(ctx, target, generators)))
    return verdicts
