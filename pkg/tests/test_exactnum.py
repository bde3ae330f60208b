import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wfusion.errors import ArithmeticDomainError, GenericWeight, ParseError
from wfusion.exactnum import (
    HalfInt,
    QAlpha,
    WeightValue,
    alpha_rs,
    decompose_alpha,
    format_rational,
    parse_rational,
    parse_weight,
)

from strategies import ps, qalphas, rationals


def am(p):
    return QAlpha.alpha_minus(p)


def approx(q: QAlpha) -> float:
    return float(q.u) + float(q.v) * -math.sqrt(2 / q.p)


# worked examples


def test_am_squared_p3():
    assert am(3) * am(3) == Fraction(2, 3)


def test_alpha_plus_times_alpha_minus_p5():
    assert QAlpha.alpha_plus(5) * am(5) == -2


def test_one_plus_am_squared_p2_folds_to_zero():
    assert (1 + am(2)) ** 2 == 0
    assert am(2).v == 0 and am(2).u == -1


def test_sign_examples():
    assert am(3).sign() == -1
    assert (1 + am(2)).sign() == 0
    assert (2 + am(2)).sign() == 1


def test_decompose_examples():
    for p in range(2, 8):
        assert decompose_alpha(WeightValue.zero(p)) == (1, 1)
        assert decompose_alpha(am(p) * Fraction(-1, 2)) == (1, 2)
        assert decompose_alpha(WeightValue(1, am(p))) is None


def test_alpha_zero():
    for p in range(2, 8):
        assert QAlpha.alpha_zero(p) == QAlpha.alpha_plus(p) + am(p)
        assert QAlpha.alpha_zero(p) == alpha_rs(-1, -1, p)


@pytest.mark.parametrize("p", [2, 8, 18])
def test_folded_square_p_keeps_lattice_data(p):
    k = math.isqrt(p // 2)
    assert am(p) == Fraction(-1, k)
    for r in range(-4, 5):
        for s in range(1, p + 1):
            assert decompose_alpha(alpha_rs(r, s, p)) == (r, s)


def test_division_by_zero():
    with pytest.raises(ArithmeticDomainError):
        QAlpha(1, 1, 3) / QAlpha(0, 0, 3)


def test_mixed_p_rejected():
    with pytest.raises(ArithmeticDomainError):
        QAlpha(1, 0, 3) + QAlpha(1, 0, 5)


def test_generic_numeric_raises():
    with pytest.raises(GenericWeight):
        WeightValue(1, QAlpha(0, 0, 3)).numeric()


# parsing and rendering


@pytest.mark.parametrize("text,value", [("3", Fraction(3)), ("-2/4", Fraction(-1, 2)), (" 7/3 ", Fraction(7, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "a", "1.5", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_halfint_render_and_parse():
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(-4)) == "-2"
    assert HalfInt.parse("-5/2") == HalfInt(-5)
    with pytest.raises(ParseError):
        HalfInt.parse("1/3")


@pytest.mark.parametrize(
    "text,g,u,v",
    [
        ("e + 1/3 - 2*am", 1, Fraction(1, 3), -2),
        ("am", 0, 0, 1),
        ("-1/2*am", 0, 0, Fraction(-1, 2)),
        ("2*e", 2, 0, 0),
        ("0", 0, 0, 0),
    ],
)
def test_parse_weight(text, g, u, v):
    assert parse_weight(text, 3) == WeightValue(g, QAlpha(u, v, 3))


@pytest.mark.parametrize("text", ["x", "1 + + am", "am*am", ""])
def test_parse_weight_rejects(text):
    with pytest.raises(ParseError):
        parse_weight(text, 3)


@given(st.integers(0, 3), rationals, rationals, ps)
def test_weight_render_round_trip(g, u, v, p):
    w = WeightValue(g, QAlpha(u, v, p))
    assert parse_weight(str(w), p) == w


@given(rationals)
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


# properties


@given(ps.flatmap(lambda p: st.tuples(qalphas(p), qalphas(p), qalphas(p))))
def test_ring_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(ps.flatmap(lambda p: st.tuples(qalphas(p), qalphas(p))))
def test_division_inverts_multiplication(t):
    a, b = t
    if not b.is_zero():
        assert (a / b) * b == a


@given(qalphas())
def test_sign_matches_float(a):
    x = approx(a)
    if abs(x) > 1e-9:
        assert a.sign() == (1 if x > 0 else -1)
    else:
        assert a.sign() == 0 or abs(x) < 1e-9


@given(ps.flatmap(lambda p: st.tuples(qalphas(p), qalphas(p), qalphas(p))))
def test_order_total_and_transitive(t):
    a, b, c = t
    assert (a < b) + (a == b) + (a > b) == 1
    assert (a - b).sign() == -(b - a).sign()
    if a <= b and b <= c:
        assert a <= c
    assert (a + c < b + c) == (a < b)


@given(qalphas())
def test_floor_is_exact(a):
    n = a.floor()
    assert QAlpha(n, 0, a.p) <= a < QAlpha(n + 1, 0, a.p)


@given(st.integers(-10, 10), st.integers(2, 7).flatmap(lambda p: st.tuples(st.just(p), st.integers(1, p))))
def test_decompose_inverts_alpha_rs(r, ps_):
    p, s = ps_
    assert decompose_alpha(alpha_rs(r, s, p)) == (r, s)


@given(qalphas())
def test_lattice_split_round_trip(a):
    rest, c = a.lattice_split()
    assert QAlpha.from_lattice(rest, c, a.p) == a
