import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equilines.exact import (
    MixedRadicandError,
    QuadraticSurd,
    binomial,
    format_exact,
    integer_sqrt,
    parse_exact,
    simplify,
    sqrt_of_rational,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=60)
radicands = st.sampled_from([2, 3, 5, 6, 7, 10, 13, 17])


@st.composite
def surds(draw, d=None):
    return QuadraticSurd(draw(fractions), draw(fractions), d if d is not None else draw(radicands))


def test_integer_sqrt():
    assert integer_sqrt(49) == (7, True)
    assert integer_sqrt(50) == (7, False)
    assert integer_sqrt(10**40) == (10**20, True)
    with pytest.raises(ValueError):
        integer_sqrt(-1)


def test_binomial():
    assert binomial(47, 2) == 1081
    assert binomial(5, 7) == 0


def test_normalization_pulls_squares():
    x = QuadraticSurd(0, 1, 12)
    assert (x.coefficient, x.radicand) == (2, 3)
    assert QuadraticSurd(3, 5, 49) == 38
    assert QuadraticSurd(1, 0, 7).is_rational
    assert QuadraticSurd(0, 1, 2 * 3**6 * 11**2).radicand == 2


def test_sqrt_of_rational():
    r = sqrt_of_rational(Fraction(1, 5))
    assert r * r == Fraction(1, 5)
    assert simplify(sqrt_of_rational(Fraction(9, 4))) == Fraction(3, 2)
    assert isinstance(simplify(sqrt_of_rational(Fraction(9, 4))), Fraction)
    with pytest.raises(ValueError):
        sqrt_of_rational(-1)


def test_mixed_radicands_raise():
    with pytest.raises(MixedRadicandError):
        QuadraticSurd(0, 1, 2) + QuadraticSurd(0, 1, 3)


def test_sign_of_near_cancellation():
    # 99/70 is a close rational approximation of sqrt(2) from above
    x = QuadraticSurd(Fraction(-99, 70), 1, 2)
    assert x < 0
    y = QuadraticSurd(Fraction(-577, 408), 1, 2)
    assert y < 0 and QuadraticSurd(Fraction(-1393, 985), 1, 2) > 0


@given(surds(d=5), surds(d=5))
def test_field_axioms(x, y):
    assert x + y - y == x
    assert (x + y) * (x - y) == x * x - y * y
    if y:
        assert (x / y) * y == x


@given(surds())
def test_float_and_norm_agree(x):
    assert math.isclose(float(x) * float(x.conjugate()), float(x.norm()), rel_tol=1e-9, abs_tol=1e-9)
    assert x.sign() == (float(x) > 0) - (float(x) < 0) or abs(float(x)) < 1e-12


@given(surds(d=3), surds(d=3))
def test_ordering_matches_floats(x, y):
    if abs(float(x) - float(y)) > 1e-9:
        assert (x < y) == (float(x) < float(y))


@given(st.one_of(fractions, surds()))
def test_format_parse_round_trip(x):
    assert parse_exact(format_exact(x)) == x


@given(fractions)
def test_rational_surds_hash_like_fractions(q):
    assert hash(QuadraticSurd(q)) == hash(q)
    assert {QuadraticSurd(q): 1}[q] == 1


@pytest.mark.parametrize(
    "text, value",
    [
        ("1/5", Fraction(1, 5)),
        ("-3/35", Fraction(-3, 35)),
        ("7", Fraction(7)),
        ("sqrt(5)", QuadraticSurd(0, 1, 5)),
        ("1/5*sqrt(5)", QuadraticSurd(0, Fraction(1, 5), 5)),
        ("-1/8 - 1/8*sqrt(5)", QuadraticSurd(Fraction(-1, 8), Fraction(-1, 8), 5)),
    ],
)
def test_parse(text, value):
    assert parse_exact(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1/0", "sqrt(-2)", "1/2 + "])
def test_parse_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_exact(text)
