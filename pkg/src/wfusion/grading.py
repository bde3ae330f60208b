"""Conformal weights of simple A-modules and the grading classification.

A simple A-module restricts to the sum over n of J^n (x) X, where X is the
H (x) M(p)-module it is induced from. The n-th summand has lowest weight

    (g + n*lambda_J^2)^2 / (2*lambda_J^2) + h(singlet part of J^n (x) X),

which is quadratic in n with leading coefficient kappa/2 on each branch
where the singlet index keeps its sign. For kappa = 0 the branches are
linear and may decrease without bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import singlet
from .errors import GenericWeight, Infinite, InvalidLabel, NonRationalExponent
from .exactnum import HalfInt, QAlpha
from .extension import (
    E,
    ExtensionData,
    Q,
    W,
    canonicalize,
    heisenberg_datum,
    restrict_top,
)


class _Unbounded:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNBOUNDED"

    def __str__(self) -> str:
        return "unbounded"


UNBOUNDED = _Unbounded()


class Predicate(str, Enum):
    HIGHEST_WEIGHT = "hw"
    GRADING_RESTRICTED = "gr"
    C1 = "c1"


@dataclass(frozen=True)
class GradingReport:
    lower_bounded: bool
    grading_restricted: bool
    highest_weight: bool
    c1_cofinite: bool
    lowest_weight: QAlpha | _Unbounded | None  # None: weight carries the generic symbol

    def __post_init__(self) -> None:
        assert not self.grading_restricted or self.lower_bounded
        assert not self.highest_weight or self.lower_bounded
        assert not self.c1_cofinite or self.grading_restricted

    def to_dict(self) -> dict:
        lw = self.lowest_weight
        return {
            "lower_bounded": self.lower_bounded,
            "grading_restricted": self.grading_restricted,
            "highest_weight": self.highest_weight,
            "c1_cofinite": self.c1_cofinite,
            "lowest_weight": "generic" if lw is None else str(lw),
        }


def _simple(ext: ExtensionData, label) -> W | E:
    if isinstance(label, Q):
        label = W(label.r, label.s, label.ell)
    return label


def summand_weight(ext: ExtensionData, label, n: int) -> QAlpha:
    """Lowest conformal weight of the n-th H (x) M(p) summand of ``label``."""
    label = _simple(ext, label)
    lj2 = ext.lambdaJ_sq
    g = heisenberg_datum(ext, label)
    heis = (g + n * lj2) ** 2 / (2 * lj2)
    if isinstance(label, W):
        return heis + singlet.h_rs(label.r + n * ext.r_J, label.s, ext.p)
    lam = label.w.body - QAlpha.alpha_plus(ext.p) * Fraction(n * ext.r_J, 2)
    return heis + singlet.h_fock(lam)


def _branch_min(f, start: int, direction: int) -> QAlpha:
    """Minimum over n = start, start+d, ... of the convex quadratic f."""
    f0, f1, f2 = f(start), f(start + direction), f(start + 2 * direction)
    a = (f2 - 2 * f1 + f0) * Fraction(1, 2)
    b = f1 - f0 - a  # f(start + d*t) = a t^2 + b t + f0
    assert a.is_rational() and a.to_rational() > 0
    vertex = -b / (2 * a.to_rational())
    t = max(vertex.floor(), 0)
    best = f(start)
    for cand in (t, t + 1):
        val = f(start + direction * cand)
        if val < best:
            best = val
    return best


def lowest_weight(ext: ExtensionData, label) -> QAlpha | _Unbounded:
    label = canonicalize(ext, _simple(ext, label))
    if isinstance(label, E) and label.w.is_generic():
        raise GenericWeight(f"{label} has a generic weight")
    if ext.kappa == 0:
        if not _lower_bounded_kappa0(ext, label):
            return UNBOUNDED
        if isinstance(label, E):
            return summand_weight(ext, label, 0)
        a, b = summand_weight(ext, label, 0), summand_weight(ext, label, -1)
        return a if a <= b else b

    def f(n: int) -> QAlpha:
        return summand_weight(ext, label, n)

    if isinstance(label, E) or ext.r_J == 0:
        up = _branch_min(f, 0, 1)
        down = _branch_min(f, 0, -1)
    else:
        up = _branch_min(f, 0, 1)
        down = _branch_min(f, -1, -1)
    return up if up <= down else down


def _lower_bounded_kappa0(ext: ExtensionData, label: W | E) -> bool:
    if isinstance(label, E):
        return label.ell.doubled == 0
    return abs(label.ell.doubled) <= ext.r_J * (ext.p - label.s)


def classify(ext: ExtensionData, label) -> GradingReport:
    label = canonicalize(ext, _simple(ext, label))
    generic = isinstance(label, E) and label.w.is_generic()
    lw = None if generic else lowest_weight(ext, label)
    if ext.kappa > 0:
        return GradingReport(True, True, True, True, lw)
    lb = _lower_bounded_kappa0(ext, label)
    if isinstance(label, E):
        return GradingReport(lb, False, False, False, lw)
    width = ext.r_J * (ext.p - label.s)
    d = label.ell.doubled
    proper = label.s <= ext.p - 1
    hw = proper and -width < d <= width
    gr = proper and abs(d) < width
    c1 = label.s == 1 and d == 0
    return GradingReport(lb, gr, hw, c1, lw)


def enumerate_simples(ext: ExtensionData, predicate: Predicate | str) -> list[W]:
    predicate = Predicate(predicate)
    if ext.kappa > 0:
        raise Infinite(f"every simple module is {predicate.name.lower()} when kappa > 0")
    if predicate is Predicate.C1:
        return [W(r, 1, HalfInt(0)) for r in range(1, ext.r_J + 1)]
    out: list[W] = []
    for r in range(1, ext.r_J + 1):
        for s in range(1, ext.p):
            width = ext.r_J * (ext.p - s)
            for d in range(-width, width + 1):
                if predicate is Predicate.HIGHEST_WEIGHT and d == -width:
                    continue
                if predicate is Predicate.GRADING_RESTRICTED and abs(d) == width:
                    continue
                out.append(W(r, s, HalfInt(d)))
    return sorted(out, key=lambda lab: lab.sort_key())


def h_current(ext: ExtensionData) -> Fraction:
    return Fraction(ext.kappa, 2) + Fraction(ext.r_J * (ext.p - 1), 2)


def monodromy_exponent(ext: ExtensionData, label) -> Fraction:
    """h(J (x) X) - h(J) - h(X) mod 1 for the top summand X of ``label``."""
    label = canonicalize(ext, _simple(ext, label))
    g, m = restrict_top(ext, label)
    if g is None:
        raise GenericWeight(f"{label} has a generic weight")
    lj2 = ext.lambdaJ_sq
    h_x = g * g / (2 * lj2) + singlet.singlet_h(ext.p, m)
    prod = singlet.singlet_fuse(ext.p, singlet.M(ext.r_J + 1, 1), m)
    if len(prod) != 1 or prod.total() != 1:
        raise InvalidLabel(f"J times {m} is not simple: {prod}")
    (m2, _), = prod.items()
    g2 = g + lj2
    h_jx = g2 * g2 / (2 * lj2) + singlet.singlet_h(ext.p, m2)
    diff = h_jx - h_current(ext) - h_x
    if not diff.is_rational():
        raise NonRationalExponent(f"exponent {diff} for {label}")
    q = diff.to_rational()
    return q - (q.__floor__())
