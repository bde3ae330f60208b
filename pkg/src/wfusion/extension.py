"""The module category of a simple current extension A of H (x) M(p).

A is the direct sum of powers of J = F^H(lambda_J) (x) M(r_J + 1, 1). It is
fixed by three integers: p, r_J >= 0 and kappa = lambda_J^2 + p*r_J^2/2.
lambda_J itself never appears; Heisenberg data enter only through
g = gamma*lambda_J and lambda_J^2.

Simple A-modules are ``W(r, s, l)`` (induced from M(r, s)) and ``E(w, l)``
(induced from the Fock module at a typical weight w), with l in (1/2)Z.
``Q(r, s, l)`` for s < p is the projective cover of ``W(r, s, l)``; for
s = p it is the simple projective ``W(r, p, l)`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Union

from . import singlet
from .errors import GenericWeight, InvalidLabel, NotInSector, NotProjectiveClass
from .exactnum import HalfInt, QAlpha, WeightValue, alpha_rs, decompose_alpha
from .formal import FormalSum


@dataclass(frozen=True)
class ExtensionData:
    p: int
    r_J: int
    kappa: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise InvalidLabel(f"p must be at least 2, got {self.p}")
        if self.r_J < 0:
            raise InvalidLabel("r_J must be nonnegative")
        if self.kappa < 0:
            raise InvalidLabel("kappa must be nonnegative")
        if self.lambdaJ_sq == 0:
            raise InvalidLabel("lambda_J must be nonzero")

    @property
    def lambdaJ_sq(self) -> Fraction:
        return self.kappa - Fraction(self.p * self.r_J * self.r_J, 2)

    @property
    def half_integer_graded(self) -> bool:
        return (self.kappa + self.r_J * (self.p - 1)) % 2 == 1

    @property
    def flow_step(self) -> HalfInt:
        """The l-offset r_J*p/2 between the middle and outer Loewy layers."""
        return HalfInt(self.r_J * self.p)

    def __str__(self) -> str:
        return f"(p={self.p}, r_J={self.r_J}, kappa={self.kappa})"


def _cached_hash(label) -> int:
    d = label.__dict__
    h = d.get("_h")
    if h is None:
        h = d["_h"] = hash(tuple(d[f] for f in label.__dataclass_fields__))
    return h


@dataclass(frozen=True)
class W:
    r: int
    s: int
    ell: HalfInt

    def __post_init__(self) -> None:
        if self.s < 1:
            raise InvalidLabel(f"s={self.s} must be positive")

    def __hash__(self) -> int:
        return _cached_hash(self)

    def sort_key(self) -> tuple:
        return ("W", self.s, self.r, self.ell.doubled, ())

    def __str__(self) -> str:
        return f"W[{self.r},{self.s},{self.ell}]"


@dataclass(frozen=True)
class E:
    w: WeightValue
    ell: HalfInt

    def __hash__(self) -> int:
        return _cached_hash(self)

    def sort_key(self) -> tuple:
        return ("E", 0, 0, self.ell.doubled, self.w.sort_key())

    def __str__(self) -> str:
        return f"E[{self.w},{self.ell}]"


@dataclass(frozen=True)
class Q:
    r: int
    s: int
    ell: HalfInt

    def __post_init__(self) -> None:
        if self.s < 1:
            raise InvalidLabel(f"s={self.s} must be positive")

    def __hash__(self) -> int:
        return _cached_hash(self)

    def sort_key(self) -> tuple:
        return ("Q", self.s, self.r, self.ell.doubled, ())

    def __str__(self) -> str:
        return f"Q[{self.r},{self.s},{self.ell}]"


ASimpleLabel = Union[W, E]
AProjectiveLabel = Union[Q, W, E]
ALabel = Union[W, E, Q]
FormalObject = FormalSum
GrothendieckVector = FormalSum


class Sector(str, Enum):
    LOCAL = "local"
    TWISTED = "twisted"


# constructors


def _hi(x) -> HalfInt:
    return x if isinstance(x, HalfInt) else HalfInt.of(x)


def w_label(ext: ExtensionData, r: int, s: int, ell) -> W:
    if not 1 <= s <= ext.p:
        raise InvalidLabel(f"s={s} outside 1..{ext.p}")
    return W(r, s, _hi(ell))


def q_label(ext: ExtensionData, r: int, s: int, ell) -> W | Q:
    """Q(r, s, l), read as the simple projective W(r, p, l) when s = p."""
    if not 1 <= s <= ext.p:
        raise InvalidLabel(f"s={s} outside 1..{ext.p}")
    if s == ext.p:
        return W(r, s, _hi(ell))
    return Q(r, s, _hi(ell))


def e_label(ext: ExtensionData, w: WeightValue | QAlpha, ell) -> W | E:
    """E(w, l); a weight of the form alpha_{r,p} gives the equal W(r, p, l)."""
    w = WeightValue.of(w)
    if w.p != ext.p:
        raise InvalidLabel(f"weight built for p={w.p}, expected p={ext.p}")
    d = decompose_alpha(w)
    if d is None:
        return E(w, _hi(ell))
    r, s = d
    if s == ext.p:
        return W(r, s, _hi(ell))
    raise InvalidLabel(f"weight {w} is alpha_({r},{s}) with s < p; no simple E-module")


def validate(ext: ExtensionData, label: ALabel) -> ALabel:
    if isinstance(label, (W, Q)):
        if not 1 <= label.s <= ext.p:
            raise InvalidLabel(f"s={label.s} outside 1..{ext.p}")
        if isinstance(label, Q) and label.s == ext.p:
            return W(label.r, label.s, label.ell)
        return label
    if isinstance(label, E):
        return e_label(ext, label.w, label.ell)
    raise InvalidLabel(f"not an A-module label: {label!r}")


# canonical forms and sectors


def _shift_ell_mod_kappa(ext: ExtensionData, ell: HalfInt) -> HalfInt:
    if ext.kappa == 0:
        return ell
    return HalfInt(ell.doubled % (2 * ext.kappa))


def canonicalize(ext: ExtensionData, label: ALabel) -> ALabel:
    return _canonicalize_cached(ext, label)


@lru_cache(maxsize=1 << 18)
def _canonicalize_cached(ext: ExtensionData, label: ALabel) -> ALabel:
    label = validate(ext, label)
    if isinstance(label, (W, Q)):
        if ext.r_J == 0:
            return type(label)(label.r, label.s, _shift_ell_mod_kappa(ext, label.ell))
        r_c = (label.r - 1) % ext.r_J + 1
        n = (r_c - label.r) // ext.r_J
        return type(label)(r_c, label.s, label.ell + HalfInt(2 * n * ext.kappa))
    if ext.r_J == 0:
        return E(label.w, _shift_ell_mod_kappa(ext, label.ell))
    rest, c = label.w.body.lattice_split()
    period = Fraction(ext.r_J * ext.p, 2)
    n = -((c / period).__floor__())
    if n == 0:
        return label
    body = QAlpha.from_lattice(rest, c + n * period, ext.p)
    return E(WeightValue(label.w.g, body), label.ell + HalfInt(2 * n * ext.kappa))


def sector(ext: ExtensionData, label: ALabel) -> Sector:
    if isinstance(label, (W, Q)):
        offset = ext.r_J * (label.s - 1)
    else:
        offset = ext.r_J * (ext.p - 1)
    return Sector.LOCAL if (label.ell.doubled - offset) % 2 == 0 else Sector.TWISTED


def shift(ext: ExtensionData, label: ALabel, a) -> ALabel:
    """Spectral flow: fusion with the simple current W(1, 1, a)."""
    a = _hi(a)
    if isinstance(label, E):
        return canonicalize(ext, E(label.w, label.ell + a))
    return canonicalize(ext, type(label)(label.r, label.s, label.ell + a))


def shift_object(ext: ExtensionData, obj: FormalSum, a) -> FormalSum:
    return obj.map(lambda lab: shift(ext, lab, a))


# Heisenberg data and induction


def alpha_plus_times(lam: QAlpha) -> QAlpha:
    return QAlpha.alpha_plus(lam.p) * lam


def heisenberg_datum(ext: ExtensionData, label: ALabel) -> QAlpha:
    """g = gamma*lambda_J of the Heisenberg Fock factor that induces ``label``."""
    p = ext.p
    if isinstance(label, (W, Q)):
        return QAlpha(Fraction(ext.r_J * (1 - label.r) * p, 2) + label.ell.value, 0, p)
    lam = label.w.numeric()
    return (alpha_plus_times(lam) - (p - 1)) * Fraction(ext.r_J, 2) + label.ell.value


def _ell_from(value: QAlpha) -> HalfInt:
    if not value.is_rational() or (2 * value.u).denominator != 1:
        raise NotInSector(f"spectral index {value} is not in (1/2)Z")
    return HalfInt((2 * value.u).numerator)


def induce(ext: ExtensionData, g: WeightValue | QAlpha, m: singlet.SingletLabel) -> ALabel:
    """Label of the A-module induced from F^H(gamma) (x) m, where g = gamma*lambda_J.

    For Fock modules the generic symbol is dropped from both g and the
    weight: it contributes nothing to the spectral index.
    """
    g = WeightValue.of(g)
    p = ext.p
    if isinstance(m, (singlet.M, singlet.P)):
        if g.is_generic():
            raise NotInSector("generic Heisenberg weight over an atypical module")
        ell = _ell_from(g.body - Fraction(ext.r_J * (1 - m.r) * p, 2))
        if isinstance(m, singlet.M):
            return canonicalize(ext, w_label(ext, m.r, m.s, ell))
        return canonicalize(ext, q_label(ext, m.r, m.s, ell))
    if isinstance(m, singlet.F):
        lam = m.w.body
        ell = _ell_from(g.body - (alpha_plus_times(lam) - (p - 1)) * Fraction(ext.r_J, 2))
        return canonicalize(ext, E(m.w, ell))
    raise InvalidLabel(f"cannot induce from {m!r}")


def restrict_top(ext: ExtensionData, label: ALabel) -> tuple[QAlpha | None, singlet.SingletLabel]:
    """The (g, singlet label) pair of the n = 0 summand; g is None if generic."""
    if isinstance(label, W):
        return heisenberg_datum(ext, label), singlet.M(label.r, label.s)
    if isinstance(label, Q):
        return heisenberg_datum(ext, label), singlet.projective(ext.p, label.r, label.s)
    g = None if label.w.is_generic() else heisenberg_datum(ext, label)
    return g, singlet.F(label.w)


# fusion of simples


def fuse_simple(ext: ExtensionData, x: ASimpleLabel, y: ASimpleLabel) -> FormalSum:
    x = canonicalize(ext, x)
    y = canonicalize(ext, y)
    if isinstance(x, Q) or isinstance(y, Q):
        raise InvalidLabel("fuse_simple takes simple labels; use fuse for projectives")
    if x.sort_key() > y.sort_key():
        x, y = y, x
    return _fuse_simple_cached(ext, x, y)


@lru_cache(maxsize=1 << 17)
def _fuse_simple_cached(ext: ExtensionData, x: ASimpleLabel, y: ASimpleLabel) -> FormalSum:
    p, rJ = ext.p, ext.r_J
    if isinstance(x, E) and isinstance(y, W):
        x, y = y, x
    terms: list[ALabel] = []
    if isinstance(x, W) and isinstance(y, W):
        s, t = x.s, y.s
        R = x.r + y.r - 1
        L = x.ell + y.ell
        for k in range(abs(s - t) + 1, min(s + t - 1, 2 * p - 1 - s - t) + 1, 2):
            terms.append(W(R, k, L))
        for k in range(2 * p + 1 - s - t, p + 1, 2):
            terms.append(q_label(ext, R, k, L))
    elif isinstance(x, W) and isinstance(y, E):
        base = y.w + alpha_rs(x.r, x.s, p)
        am = QAlpha.alpha_minus(p)
        L = x.ell + y.ell
        for k in range(x.s):
            terms.append(e_label(ext, base + am * k, L + HalfInt(rJ * (2 * k - x.s + 1))))
    else:
        total = x.w + y.w
        L = x.ell + y.ell
        d = decompose_alpha(total - QAlpha.alpha_zero(p))
        if d is not None:
            r, s = d
            up = L + HalfInt(rJ * (s - 1))
            down = L - HalfInt(rJ * (p - s + 1))
            terms += [q_label(ext, r, t, up) for t in range(s, p + 1, 2)]
            terms += [q_label(ext, r - 1, t, down) for t in range(p + 2 - s, p + 1, 2)]
        else:
            am = QAlpha.alpha_minus(p)
            for k in range(p):
                terms.append(e_label(ext, total + am * k, L + HalfInt(rJ * (2 * k - p + 1))))
    return FormalSum((canonicalize(ext, t), 1) for t in terms)


# Grothendieck classes, peeling and general fusion


def is_simple(label: ALabel) -> bool:
    return not isinstance(label, Q)


def a_class(ext: ExtensionData, x) -> FormalSum:
    if isinstance(x, FormalSum):
        return x.map(lambda lab: a_class(ext, lab))
    lab = canonicalize(ext, x)
    if isinstance(lab, Q):
        q = ext.p - lab.s
        step = ext.flow_step
        return FormalSum(
            [
                (lab_w, c)
                for lab_w, c in (
                    (canonicalize(ext, W(lab.r, lab.s, lab.ell)), 2),
                    (canonicalize(ext, W(lab.r - 1, q, lab.ell - step)), 1),
                    (canonicalize(ext, W(lab.r + 1, q, lab.ell + step)), 1),
                )
            ]
        )
    return FormalSum.of(lab)


def _peel_key(ext: ExtensionData, lab: W) -> int:
    # ell*r_J - r*kappa is constant along isomorphism classes; doubled to stay integral.
    return lab.ell.doubled * ext.r_J - 2 * lab.r * ext.kappa


def a_peel(ext: ExtensionData, vec: FormalSum) -> FormalSum:
    """The unique direct sum of projectives whose class is ``vec``.

    Within a projective cover Q(r, s, l) the invariant key of the factor
    W(r-1, p-s, l - r_J p/2) sits lambda_J^2 away from the top, and that of
    W(r+1, p-s, l + r_J p/2) sits -lambda_J^2 away. So the globally extreme
    key always belongs to the lowest factor of some cover.
    """
    p = ext.p
    out: dict = {}
    rest: dict = {}
    for lab, mult in vec.items():
        if mult < 0:
            raise NotProjectiveClass(f"negative coefficient at {lab}")
        if isinstance(lab, Q):
            raise NotProjectiveClass(f"{lab} is not a simple label")
        lab = canonicalize(ext, lab)
        if isinstance(lab, E) or lab.s == p:
            out[lab] = out.get(lab, 0) + mult
        else:
            rest[lab] = rest.get(lab, 0) + mult
    below = ext.lambdaJ_sq < 0
    step = ext.flow_step
    while rest:
        low = min(rest, key=lambda lab: (_peel_key(ext, lab), lab.sort_key()))
        mult = rest[low]
        if below:
            cover = Q(low.r + 1, p - low.s, low.ell + step)
        else:
            cover = Q(low.r - 1, p - low.s, low.ell - step)
        cover = canonicalize(ext, cover)
        out[cover] = out.get(cover, 0) + mult
        for lab, c in a_class(ext, cover).items():
            left = rest.get(lab, 0) - c * mult
            if left < 0:
                raise NotProjectiveClass(f"class does not come from projectives (at {lab})")
            if left:
                rest[lab] = left
            else:
                rest.pop(lab, None)
    return FormalSum(out)


def _as_object(ext: ExtensionData, x) -> FormalSum:
    if isinstance(x, FormalSum):
        return x.map(lambda lab: canonicalize(ext, lab))
    return FormalSum.of(canonicalize(ext, x))


def fuse_classes(ext: ExtensionData, a: FormalSum, b: FormalSum) -> FormalSum:
    """Product of Grothendieck classes, bilinear in simple labels."""
    out: dict = {}
    for la, ma in a.items():
        for lb, mb in b.items():
            for lab, c in a_class(ext, fuse_simple(ext, la, lb)).items():
                out[lab] = out.get(lab, 0) + ma * mb * c
    return FormalSum(out)


def fuse(ext: ExtensionData, x, y) -> FormalSum:
    """Fusion of labels or direct sums of simple and projective labels."""
    X = _as_object(ext, x)
    Y = _as_object(ext, y)
    out = FormalSum()
    for la, ma in X.items():
        for lb, mb in Y.items():
            out = out + _fuse_pair(ext, la, lb).scale(ma * mb)
    return out


def _fuse_pair(ext: ExtensionData, a: ALabel, b: ALabel) -> FormalSum:
    if is_simple(a) and is_simple(b):
        return fuse_simple(ext, a, b)
    if a.sort_key() > b.sort_key():
        a, b = b, a
    return _fuse_projective_cached(ext, a, b)


@lru_cache(maxsize=1 << 15)
def _fuse_projective_cached(ext: ExtensionData, a: ALabel, b: ALabel) -> FormalSum:
    return a_peel(ext, fuse_classes(ext, a_class(ext, a), a_class(ext, b)))


# duals and Loewy layers


def a_dual(ext: ExtensionData, label: ALabel) -> ALabel:
    label = canonicalize(ext, label)
    if isinstance(label, W):
        return canonicalize(ext, W(2 - label.r, label.s, -label.ell))
    if isinstance(label, E):
        return canonicalize(ext, E(QAlpha.alpha_zero(ext.p) - label.w, -label.ell))
    dual_class = a_class(ext, label).map(lambda lab: a_dual(ext, lab))
    (lab, mult), = a_peel(ext, dual_class).items()
    assert mult == 1
    return lab


def dual_object(ext: ExtensionData, obj: FormalSum) -> FormalSum:
    return obj.map(lambda lab: a_dual(ext, lab))


def loewy(ext: ExtensionData, label: AProjectiveLabel) -> list[FormalSum]:
    """Socle layers, bottom first."""
    label = canonicalize(ext, label)
    if not isinstance(label, Q):
        return [FormalSum.of(label)]
    q = ext.p - label.s
    step = ext.flow_step
    top = FormalSum.of(canonicalize(ext, W(label.r, label.s, label.ell)))
    middle = FormalSum.of(
        canonicalize(ext, W(label.r - 1, q, label.ell - step)),
        canonicalize(ext, W(label.r + 1, q, label.ell + step)),
    )
    return [top, middle, top]


def clear_caches() -> None:
    """Drop memoized canonical forms and products."""
    _canonicalize_cached.cache_clear()
    _fuse_simple_cached.cache_clear()
    _fuse_projective_cached.cache_clear()


def unit(ext: ExtensionData) -> W:
    return canonicalize(ext, W(1, 1, HalfInt(0)))


def require_numeric(label: ALabel) -> None:
    if isinstance(label, E) and label.w.is_generic():
        raise GenericWeight(f"{label} has a generic weight")
