from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wfusion import singlet
from wfusion.errors import GenericWeight, InvalidLabel, NotProjectiveClass
from wfusion.exactnum import QAlpha, WeightValue, alpha_rs, decompose_alpha
from wfusion.formal import FormalSum
from wfusion.singlet import F, M, P

from strategies import typical_weights

M11 = M(1, 1)


def fock_class(p, w):
    """Composition factors of the Fock module at w: two atypicals on the lattice."""
    d = decompose_alpha(w)
    if d is None:
        return FormalSum.of(F(WeightValue.of(w)))
    r, s = d
    if s == p:
        return FormalSum.of(M(r, p))
    return FormalSum.of(M(r, s), M(r + 1, p - s))


# conformal weights


def test_h_examples():
    assert singlet.singlet_h(3, M11) == 0
    assert singlet.singlet_h(2, M(1, 2)) == Fraction(-1, 8)
    lam = QAlpha(Fraction(-1, 3), 0, 2)
    assert singlet.singlet_h(2, F(WeightValue.of(lam))) == Fraction(2, 9)


def test_h_generic_raises():
    with pytest.raises(GenericWeight):
        singlet.singlet_h(3, F(WeightValue(1, QAlpha(0, 0, 3))))


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_h_rs_is_top_of_fock_module(p):
    # M(r,s) with r >= 1 is the head of the Fock module at alpha_{r,s}
    for r in range(1, 5):
        for s in range(1, p + 1):
            assert singlet.h_rs(r, s, p) == singlet.h_fock(alpha_rs(r, s, p))


# fusion


def test_fusion_examples():
    assert singlet.singlet_fuse(2, M(1, 2), M(1, 2)) == FormalSum.of(P(1, 1))
    assert singlet.singlet_fuse(3, M(1, 2), M(1, 2)) == FormalSum.of(M(1, 1), M(1, 3))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_unit(p):
    for x in [M(2, 1), M(-1, p), F(WeightValue.make(p, Fraction(1, 3)))]:
        assert singlet.singlet_fuse(p, M11, x) == FormalSum.of(x)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_collision_class_matches_fock_classes(p):
    # the class of F_lam x F_mu varies continuously: sum of the p Fock classes
    lam = WeightValue.of(QAlpha(Fraction(1, 3), Fraction(1, 7), p))
    am = QAlpha.alpha_minus(p)
    for r in range(-2, 4):
        for s in range(1, p + 1):
            mu = WeightValue.of(QAlpha.alpha_zero(p) + alpha_rs(r, s, p)) - lam
            got = singlet.singlet_class(p, singlet.singlet_fuse(p, F(lam), F(mu)))
            want = FormalSum()
            for k in range(p):
                want = want + fock_class(p, (lam + mu).body + am * k)
            assert got == want


@pytest.mark.parametrize("p", [2, 3, 4])
def test_atypical_products_seen_by_typical_probe(p):
    # pair with a Fock module: only the M x F formula is used on the right
    probe = F(WeightValue.of(QAlpha(Fraction(2, 7), Fraction(1, 5), p)))
    for s in range(1, p + 1):
        for t in range(1, p + 1):
            prod = singlet.singlet_class(p, singlet.singlet_fuse(p, M(1, s), M(2, t)))
            left = FormalSum()
            for lab, c in prod.items():
                left = left + singlet.singlet_fuse(p, lab, probe).scale(c)
            inner = singlet.singlet_fuse(p, M(2, t), probe)
            right = FormalSum()
            for lab, c in inner.items():
                right = right + singlet.singlet_fuse(p, M(1, s), lab).scale(c)
            assert left == right


# duals, classes, peel


def test_dual_examples():
    assert singlet.singlet_dual(3, M11) == M11
    assert singlet.singlet_dual(3, M(3, 2)) == M(-1, 2)
    assert singlet.singlet_dual(3, P(1, 1)) == P(1, 1)


def test_class_examples():
    assert singlet.singlet_class(2, P(1, 1)) == FormalSum([(M11, 2), (M(0, 1), 1), (M(2, 1), 1)])
    lam = F(WeightValue.make(3, Fraction(1, 3)))
    assert singlet.singlet_class(3, FormalSum([(lam, 2)])) == FormalSum([(lam, 2)])


def test_peel_examples():
    assert singlet.singlet_peel(2, singlet.singlet_class(2, P(1, 1))) == FormalSum.of(P(1, 1))
    lam = F(WeightValue.make(3, Fraction(1, 3)))
    assert singlet.singlet_peel(3, FormalSum.of(lam)) == FormalSum.of(lam)
    with pytest.raises(NotProjectiveClass):
        singlet.singlet_peel(2, FormalSum.of(M11))


def test_reducible_fock_rejected():
    with pytest.raises(InvalidLabel):
        singlet.fock(3, WeightValue.of(alpha_rs(1, 2, 3)))
    assert singlet.fock(3, WeightValue.of(alpha_rs(2, 3, 3))) == M(2, 3)


@st.composite
def projective_sums(draw):
    p = draw(st.integers(2, 5))
    terms = []
    for _ in range(draw(st.integers(1, 4))):
        s = draw(st.integers(1, p))
        r = draw(st.integers(-3, 3))
        terms.append((singlet.projective(p, r, s), draw(st.integers(1, 3))))
    if draw(st.booleans()):
        terms.append((F(draw(typical_weights(p, generic=False))), 1))
    return p, FormalSum(terms)


@given(projective_sums())
def test_peel_round_trip(data):
    p, obj = data
    assert singlet.singlet_peel(p, singlet.singlet_class(p, obj)) == obj


@given(st.integers(2, 5).flatmap(lambda p: st.tuples(st.just(p), st.integers(-4, 4), st.integers(1, p))))
def test_dual_involution(data):
    p, r, s = data
    for x in (M(r, s), singlet.projective(p, r, s)):
        assert singlet.singlet_dual(p, singlet.singlet_dual(p, x)) == x


@given(st.integers(2, 5).flatmap(lambda p: st.tuples(st.just(p), typical_weights(p), typical_weights(p))))
def test_typical_commutativity(data):
    p, a, b = data
    x, y = singlet.fock(p, a), singlet.fock(p, b)
    assert singlet.singlet_fuse(p, x, y) == singlet.singlet_fuse(p, y, x)
