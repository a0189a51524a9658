import random

import pytest

from skewlaurent.cli.evaluate import eval_text
from skewlaurent.cli.parser import (
    Add, Comm, Div, Inv, Mul, Neg, Num, ParseError, Pow, Sub, Sym, WithPrecision,
    parse_expr, unparse,
)
from skewlaurent.grouplab import random_series
from skewlaurent.series import monomial


def test_spec_examples():
    assert parse_expr("t*u") == Mul(Sym("t"), Sym("u"))
    assert parse_expr("comm(t, u)") == Comm(Sym("t"), Sym("u"))
    assert parse_expr("3*t^-2 + t") == Add(Mul(Num(3), Pow(Sym("t"), -2)), Sym("t"))


@pytest.mark.parametrize("text,tree", [
    ("-t^2", Neg(Pow(Sym("t"), 2))),
    ("u*t^2", Mul(Sym("u"), Pow(Sym("t"), 2))),
    ("1 - 2 - 3", Sub(Sub(Num(1), Num(2)), Num(3))),
    ("1/u/t", Div(Div(Num(1), Sym("u")), Sym("t"))),
    ("inv(1 - t)", Inv(Sub(Num(1), Sym("t")))),
    ("t + O(t^5)", WithPrecision(Sym("t"), 5)),
    ("O(t^3)", WithPrecision(None, 3)),
    ("(u+1)/u*t^0", Mul(Div(Add(Sym("u"), Num(1)), Sym("u")), Pow(Sym("t"), 0))),
])
def test_precedence(text, tree):
    assert parse_expr(text) == tree


@pytest.mark.parametrize("text,offset", [
    ("t*", 2),
    ("t + + u", 4),
    ("foo", 0),
    ("comm(t u)", 7),
    ("(t", 2),
    ("t^u", 2),
    ("t )", 2),
    ("\u00a0t*", 4),  # offsets count UTF-8 bytes
])
def test_error_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.offset == offset
    assert "expected" in str(info.value)


def random_expr(rng, depth=0):
    if depth > 3 or rng.random() < 0.3:
        return Num(rng.randint(0, 9)) if rng.random() < 0.4 else Sym(rng.choice("ut"))
    kind = rng.choice(["add", "sub", "mul", "div", "neg", "pow", "comm", "inv"])
    sub = lambda: random_expr(rng, depth + 1)  # noqa: E731
    if kind == "neg":
        return Neg(sub())
    if kind == "pow":
        return Pow(sub(), rng.randint(-3, 3))
    if kind == "inv":
        return Inv(sub())
    cls = {"add": Add, "sub": Sub, "mul": Mul, "div": Div, "comm": Comm}[kind]
    return cls(sub(), sub())


def generated_expressions(n=100, seed=0):
    rng = random.Random(f"roundtrip:{seed}")
    out = []
    for i in range(n):
        e = random_expr(rng)
        if i % 5 == 0:
            e = WithPrecision(e, rng.randint(1, 40))
        out.append(e)
    return out


def test_round_trip_generated():
    for e in generated_expressions():
        text = unparse(e)
        assert parse_expr(text) == e, text


def test_printed_series_parse_back(qu, f4):
    for ctx in (qu, f4):
        for seed in range(15):
            s = random_series(ctx, seed)
            assert eval_text(str(s), ctx) == s


def test_eval_exact_literals(qu, u):
    assert eval_text("t*u", qu) == monomial(qu, u + 1, 1)
    assert eval_text("u*t^2 + O(t^5)", qu) == monomial(qu, u, 2, 5)
    assert eval_text("1/2*t", qu).coeff(1) == qu(1) / 2
