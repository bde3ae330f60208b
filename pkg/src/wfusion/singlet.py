"""Modules of the singlet algebra M(p): labels, conformal weights, duals,
fusion, Grothendieck classes and Krull-Schmidt recovery of projectives.

Simple modules are the atypical ``M(r, s)`` with 1 <= s <= p and the Fock
modules ``F(w)`` with w off the lattice (Z/2)*am. ``M(r, p)`` is itself a Fock
module and is projective. For s < p the projective cover of ``M(r, s)`` is
``P(r, s)`` with composition factors 2M(r,s) + M(r-1,p-s) + M(r+1,p-s).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import GenericWeight, InvalidLabel, NotProjectiveClass
from .exactnum import QAlpha, WeightValue, alpha_rs, decompose_alpha
from .formal import FormalSum


@dataclass(frozen=True)
class M:
    r: int
    s: int

    def sort_key(self) -> tuple:
        return ("M", self.s, self.r)

    def __str__(self) -> str:
        return f"M[{self.r},{self.s}]"


@dataclass(frozen=True)
class F:
    w: WeightValue

    def sort_key(self) -> tuple:
        return ("F", 0, 0, self.w.sort_key())

    def __str__(self) -> str:
        return f"F[{self.w}]"


@dataclass(frozen=True)
class P:
    r: int
    s: int

    def sort_key(self) -> tuple:
        return ("P", self.s, self.r)

    def __str__(self) -> str:
        return f"P[{self.r},{self.s}]"


SingletSimple = Union[M, F]
SingletLabel = Union[M, F, P]
SingletObject = FormalSum


def atypical(p: int, r: int, s: int) -> M:
    if not 1 <= s <= p:
        raise InvalidLabel(f"s={s} outside 1..{p}")
    return M(r, s)


def fock(p: int, w: WeightValue | QAlpha) -> M | F:
    """The simple Fock module with lowest weight w, as a canonical label."""
    w = WeightValue.of(w)
    if w.p != p:
        raise InvalidLabel(f"weight built for p={w.p}, expected p={p}")
    d = decompose_alpha(w)
    if d is None:
        return F(w)
    r, s = d
    if s == p:
        return M(r, p)
    raise InvalidLabel(f"F[{w}] is the reducible Fock module at alpha_({r},{s})")


def projective(p: int, r: int, s: int) -> M | P:
    """P(r, s), read as the simple projective M(r, p) when s = p."""
    if s == p:
        return M(r, p)
    if not 1 <= s < p:
        raise InvalidLabel(f"s={s} outside 1..{p}")
    return P(r, s)


def h_rs(r: int, s: int, p: int) -> Fraction:
    """Lowest conformal weight of M(r, s), using h_{2-r,s} for r <= 1."""
    if r < 1:
        r = 2 - r
    return Fraction((r * r - 1) * p, 4) - Fraction(r * s - 1, 2) + Fraction(s * s - 1, 4 * p)


def h_fock(lam: QAlpha) -> QAlpha:
    return lam * (lam - QAlpha.alpha_zero(lam.p)) * Fraction(1, 2)


def singlet_h(p: int, label: SingletSimple) -> QAlpha:
    if isinstance(label, M):
        return QAlpha(h_rs(label.r, label.s, p), 0, p)
    if isinstance(label, F):
        if label.w.is_generic():
            raise GenericWeight(f"conformal weight of {label} is not a number")
        return h_fock(label.w.body)
    raise InvalidLabel(f"no conformal weight for {label}")


def singlet_fuse(p: int, x: SingletSimple, y: SingletSimple) -> FormalSum:
    if isinstance(x, F) and isinstance(y, M):
        x, y = y, x
    if isinstance(x, M) and isinstance(y, M):
        return _fuse_atyp(p, x, y)
    if isinstance(x, M) and isinstance(y, F):
        base = y.w + alpha_rs(x.r, x.s, p)
        am = QAlpha.alpha_minus(p)
        return FormalSum((fock(p, base + am * k), 1) for k in range(x.s))
    if isinstance(x, F) and isinstance(y, F):
        return _fuse_typ(p, x.w, y.w)
    raise InvalidLabel(f"cannot fuse {x} and {y}")


def _fuse_atyp(p: int, x: M, y: M) -> FormalSum:
    s, t = x.s, y.s
    R = x.r + y.r - 1
    terms: list = []
    for k in range(abs(s - t) + 1, min(s + t - 1, 2 * p - 1 - s - t) + 1, 2):
        terms.append(M(R, k))
    for k in range(2 * p + 1 - s - t, p + 1, 2):
        terms.append(projective(p, R, k))
    return FormalSum((lab, 1) for lab in terms)


def _fuse_typ(p: int, lam: WeightValue, mu: WeightValue) -> FormalSum:
    total = lam + mu
    d = decompose_alpha(total - QAlpha.alpha_zero(p))
    if d is not None:
        r, s = d
        terms = [projective(p, r, t) for t in range(s, p + 1, 2)]
        terms += [projective(p, r - 1, t) for t in range(p + 2 - s, p + 1, 2)]
        return FormalSum((lab, 1) for lab in terms)
    am = QAlpha.alpha_minus(p)
    return FormalSum((fock(p, total + am * k), 1) for k in range(p))


def singlet_class(p: int, x) -> FormalSum:
    """Grothendieck class of a label or direct sum, over simple labels."""
    if isinstance(x, FormalSum):
        return x.map(lambda lab: singlet_class(p, lab))
    if isinstance(x, P):
        q = p - x.s
        return FormalSum([(M(x.r, x.s), 2), (M(x.r - 1, q), 1), (M(x.r + 1, q), 1)])
    return FormalSum.of(x)


def singlet_peel(p: int, vec: FormalSum) -> FormalSum:
    """Recover the unique direct sum of projectives with the given class."""
    rest: dict = {}
    out: dict = {}
    for lab, mult in vec.items():
        if mult < 0:
            raise NotProjectiveClass(f"negative coefficient at {lab}")
        if isinstance(lab, F) or (isinstance(lab, M) and lab.s == p):
            out[lab] = out.get(lab, 0) + mult
        elif isinstance(lab, M):
            rest[lab] = mult
        else:
            raise NotProjectiveClass(f"{lab} is not a simple label")
    while rest:
        low = min(rest, key=lambda m: (m.r, m.s))
        mult = rest[low]
        cover = P(low.r + 1, p - low.s)
        out[cover] = out.get(cover, 0) + mult
        for lab, c in singlet_class(p, cover).items():
            left = rest.get(lab, 0) - c * mult
            if left < 0:
                raise NotProjectiveClass(f"class does not come from projectives (at {lab})")
            if left:
                rest[lab] = left
            else:
                rest.pop(lab, None)
    return FormalSum(out)


def singlet_dual(p: int, x: SingletLabel) -> SingletLabel:
    if isinstance(x, M):
        return M(2 - x.r, x.s)
    if isinstance(x, F):
        return fock(p, QAlpha.alpha_zero(p) - x.w)
    if isinstance(x, P):
        dual_class = singlet_class(p, x).map(lambda lab: singlet_dual(p, lab))
        peeled = singlet_peel(p, dual_class)
        (lab, mult), = peeled.items()
        assert mult == 1
        return lab
    raise InvalidLabel(f"cannot dualize {x}")
