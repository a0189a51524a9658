import random

import pytest

from skewlaurent import DomainError, FieldMismatchError, UsageError
from skewlaurent.grouplab import SeriesProfile, random_series
from skewlaurent.series import (
    ZERO, add, constant, equals_to_precision, from_terms, inverse, leading_coeff,
    monomial, mul, mul_incremental, negate, one, power, product_precision,
    scale_left, scale_right, truncate, valuation,
)

from oracles import naive_product

P = 32


def t(ctx, k=1, prec=P):
    return monomial(ctx, ctx.one(), k, prec)


def test_from_terms(qu):
    s = from_terms(qu, [(0, 1)], P)
    assert s.lead == 0 and s == one(qu, P)
    assert from_terms(qu, [(-2, 3), (1, 1)], P).lead == -2
    z = from_terms(qu, [(5, 0)], P)
    assert z.is_zero and z.prec == P and valuation(z) is ZERO
    with pytest.raises(UsageError):
        from_terms(qu, [(32, 1)], P)


def test_add_examples(qu):
    x = from_terms(qu, [(0, 1), (1, 1)])
    assert add(x, constant(qu, -1)) == t(qu)
    assert add(x, negate(x)).is_zero
    s = add(from_terms(qu, [(-2, 3)]), t(qu))
    assert s.lead == -2 and s.terms() == [(-2, qu(3)), (1, qu(1))]


def test_mul_examples(qu, u):
    assert mul(t(qu), constant(qu, u)) == monomial(qu, u + 1, 1)
    ut = monomial(qu, u, 1)
    assert mul(ut, ut) == monomial(qu, u * (u + 1), 2, P + 1)
    y = random_series(qu, 3)
    assert equals_to_precision(mul(one(qu, P), y), y)
    assert mul(one(qu, P), y).prec == P + y.lead
    assert mul_incremental(t(qu), constant(qu, u)) == monomial(qu, u + 1, 1)


def test_noncommutative(qu, f4, u, w):
    assert mul(constant(qu, u), t(qu)) != mul(t(qu), constant(qu, u))
    assert mul(t(f4), constant(f4, w)) == monomial(f4, w + 1, 1)


def test_valuation_and_leading(qu):
    x = from_terms(qu, [(-2, 3), (1, 1)])
    assert valuation(x) == -2 and leading_coeff(x) == 3
    assert valuation(one(qu)) == 0
    with pytest.raises(DomainError):
        leading_coeff(from_terms(qu, []))


def test_inverse_examples(qu, u):
    geo = inverse(from_terms(qu, [(0, 1), (1, -1)]))
    assert geo.terms() == [(k, qu(1)) for k in range(P)]
    assert inverse(monomial(qu, u, 1)) == monomial(qu, 1 / (u - 1), -1, P - 2)
    assert inverse(t(qu)) == t(qu, -1, P - 2)
    with pytest.raises(DomainError):
        inverse(from_terms(qu, []))


def test_power_examples(qu):
    assert power(t(qu), 3) == t(qu, 3, P + 2)
    assert power(t(qu), -1) == t(qu, -1, P - 2)
    assert power(from_terms(qu, [(0, 1), (1, 1)]), 2) == from_terms(qu, [(0, 1), (1, 2), (2, 1)])
    with pytest.raises(DomainError):
        power(from_terms(qu, []), -1)


def test_truncate_and_equality(qu):
    assert truncate(from_terms(qu, [(0, 1), (1, 1), (2, 1)]), 2) == from_terms(qu, [(0, 1), (1, 1)], 2)
    big = from_terms(qu, [(0, 1), (40, 1)], 64)
    assert equals_to_precision(big, one(qu, P))
    with pytest.raises(UsageError):
        truncate(one(qu, 8), 9)


def test_precision_model(qu):
    x = random_series(qu, 1, SeriesProfile(lead_range=(-2, -2), prec=20))
    y = random_series(qu, 2, SeriesProfile(lead_range=(3, 3), prec=30))
    assert product_precision(x, y) == min(20 + 3, 30 - 2)
    assert mul(x, y).prec == 23
    assert add(x, y).prec == 20
    assert inverse(y).prec == 30 - 6
    # ZERO operand: low(ZERO) is its precision
    z = from_terms(qu, [], 10)
    assert mul(x, z).prec == min(20 + 10, 10 - 2)


def test_context_mismatch(qu, f4):
    with pytest.raises(FieldMismatchError):
        add(one(qu), one(f4))


def test_scalar_sides(qu, u):
    x = t(qu)
    assert scale_left(u, x) == mul(constant(qu, u), x)
    assert scale_right(x, u) == mul(x, constant(qu, u))
    assert u * x != x * u


def test_format(qu, u):
    s = from_terms(qu, [(-2, 3), (0, (u + 1) / u), (1, -1)])
    assert str(s) == "3*t^-2 + (u+1)/u - t + O(t^32)"
    assert str(from_terms(qu, [], 5)) == "O(t^5)"


def _pairs(ctx, n, seed, prec=P):
    rng = random.Random(seed)
    prof = SeriesProfile(prec=prec)
    return [(random_series(ctx, rng, prof), random_series(ctx, rng, prof)) for _ in range(n)]


@pytest.mark.parametrize("which", ["qu", "f4"])
def test_mul_matches_naive_oracle(which, request):
    ctx = request.getfixturevalue(which)
    for x, y in _pairs(ctx, 25, f"oracle:{which}", prec=12):
        expected, prec = naive_product(x, y)
        got = mul(x, y)
        assert got.prec == prec
        assert dict(got.terms()) == expected
        assert mul_incremental(x, y) == got


@pytest.mark.parametrize("which", ["qu", "f4"])
def test_ring_and_valuation_laws(which, request):
    ctx = request.getfixturevalue(which)
    rng = random.Random(f"laws:{which}")
    prof = SeriesProfile(prec=16)
    for _ in range(20):
        x, y, z = (random_series(ctx, rng, prof) for _ in range(3))
        assert equals_to_precision(mul(mul(x, y), z), mul(x, mul(y, z)))
        assert equals_to_precision(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))
        assert equals_to_precision(mul(add(x, y), z), add(mul(x, z), mul(y, z)))
        assert mul(x, y).lead == x.lead + y.lead
        s = add(x, y)
        assert s.is_zero or s.lead >= min(x.lead, y.lead)


@pytest.mark.parametrize("which", ["qu", "f4"])
def test_inverse_two_sided(which, request):
    ctx = request.getfixturevalue(which)
    for x, _ in _pairs(ctx, 15, f"inv:{which}", prec=16):
        xi = inverse(x)
        g = 16 - 2 * abs(x.lead)
        assert xi.lead == -x.lead
        for prod in (mul(x, xi), mul(xi, x)):
            assert truncate(prod, g) == one(ctx, g)
