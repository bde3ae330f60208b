"""Exact scalars: rationals, half-integers and the ring Q[am] with am^2 = 2/p.

``am`` stands for the real number -sqrt(2/p). The companion constant
sqrt(2p) is never stored; it equals ``-p * am``. When 2p is a perfect square
(p = 2k^2) the ring collapses to Q and every value is folded to a plain
rational using am = -1/k.

Weights may also carry a formal symbol ``e`` standing for a generic complex
number, transcendental over Q(am). Only additive operations see it.
"""

from __future__ import annotations

import functools
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import ArithmeticDomainError, GenericWeight, ParseError

Rational = Fraction
RationalLike = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ParseError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class HalfInt:
    """An element of (1/2)Z stored as its double."""

    __slots__ = ("doubled",)

    def __init__(self, doubled: int) -> None:
        object.__setattr__(self, "doubled", int(doubled))

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def of(cls, value: RationalLike | HalfInt) -> HalfInt:
        if isinstance(value, HalfInt):
            return value
        q = Fraction(value) * 2
        if q.denominator != 1:
            raise ArithmeticDomainError(f"{value} is not a half-integer")
        return cls(q.numerator)

    @classmethod
    def parse(cls, text: str) -> HalfInt:
        q = parse_rational(text)
        if (2 * q).denominator != 1:
            raise ParseError(f"not a half-integer: {text!r}")
        return cls((2 * q).numerator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __add__(self, other: HalfInt) -> HalfInt:
        return HalfInt(self.doubled + other.doubled)

    def __sub__(self, other: HalfInt) -> HalfInt:
        return HalfInt(self.doubled - other.doubled)

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.doubled)

    def __mul__(self, n: int) -> HalfInt:
        return HalfInt(self.doubled * n)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HalfInt) and other.doubled == self.doubled

    def __lt__(self, other: HalfInt) -> bool:
        return self.doubled < other.doubled

    def __le__(self, other: HalfInt) -> bool:
        return self.doubled <= other.doubled

    def __hash__(self) -> int:
        return hash(("HalfInt", self.doubled))

    def __repr__(self) -> str:
        return f"HalfInt({self})"

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


@lru_cache(maxsize=None)
@functools.lru_cache(maxsize=None)
def fold_k(p: int) -> int:
    """Return k when p = 2k^2 (am is then the rational -1/k), else 0."""
    root = math.isqrt(2 * p)
    if root * root == 2 * p:
        return root // 2
    return 0


class QAlpha:
    """The real number u + v*am in Q[am]/(am^2 - 2/p)."""

    __slots__ = ("u", "v", "p", "_h")

    def __init__(self, u: RationalLike = 0, v: RationalLike = 0, p: int = 2) -> None:
        if p < 2:
            raise ArithmeticDomainError(f"p must be at least 2, got {p}")
        if type(u) is not Fraction:
            u = Fraction(u)
        if type(v) is not Fraction:
            v = Fraction(v)
        k = fold_k(p)
        if k and v:
            u = u - v / k
            v = _ZERO
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "p", p)

    @classmethod
    def _raw(cls, u: Fraction, v: Fraction, p: int) -> QAlpha:
        obj = object.__new__(cls)
        object.__setattr__(obj, "u", u)
        object.__setattr__(obj, "v", v)
        object.__setattr__(obj, "p", p)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QAlpha is immutable")

    # constants

    @classmethod
    def alpha_minus(cls, p: int) -> QAlpha:
        return cls(0, 1, p)

    @classmethod
    def alpha_plus(cls, p: int) -> QAlpha:
        return cls(0, -p, p)

    @classmethod
    def alpha_zero(cls, p: int) -> QAlpha:
        return cls(0, 1 - p, p)

    # lattice coordinates

    def lattice_split(self) -> tuple[Fraction, Fraction]:
        """Split into (rest, c) with value = rest + c*am.

        In the field case this is just (u, v). In the folded case every
        rational is a multiple of am, so the whole value is moved into c.
        """
        k = fold_k(self.p)
        if k:
            return _ZERO, -k * self.u
        return self.u, self.v

    @classmethod
    def from_lattice(cls, rest: RationalLike, c: RationalLike, p: int) -> QAlpha:
        return cls(rest, c, p)

    # arithmetic

    def _check(self, other: QAlpha) -> None:
        if other.p != self.p:
            raise ArithmeticDomainError(f"mixing p={self.p} with p={other.p}")

    def _coerce(self, other) -> QAlpha:
        if isinstance(other, QAlpha):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return QAlpha._raw(Fraction(other), _ZERO, self.p)
        return NotImplemented

    def __add__(self, other) -> QAlpha:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QAlpha._raw(self.u + o.u, self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other) -> QAlpha:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QAlpha._raw(self.u - o.u, self.v - o.v, self.p)

    def __rsub__(self, other) -> QAlpha:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self) -> QAlpha:
        return QAlpha._raw(-self.u, -self.v, self.p)

    def __mul__(self, other) -> QAlpha:
        if isinstance(other, (int, Fraction)):
            return QAlpha._raw(self.u * other, self.v * other, self.p)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        u = self.u * o.u + Fraction(2, self.p) * self.v * o.v
        v = self.u * o.v + self.v * o.u
        return QAlpha._raw(u, v, self.p)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Product with the conjugate u - v*am."""
        return self.u * self.u - Fraction(2, self.p) * self.v * self.v

    def __truediv__(self, other) -> QAlpha:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ArithmeticDomainError("division by zero")
            return QAlpha._raw(self.u / other, self.v / other, self.p)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ArithmeticDomainError("division by zero")
        n = o.norm()
        conj = QAlpha._raw(o.u, -o.v, self.p)
        return (self * conj) * (1 / n)

    def __pow__(self, n: int) -> QAlpha:
        if n < 0:
            return QAlpha(1, 0, self.p) / (self ** (-n))
        out = QAlpha._raw(_ONE, _ZERO, self.p)
        for _ in range(n):
            out = out * self
        return out

    # predicates

    def is_zero(self) -> bool:
        return not self.u and not self.v

    def is_rational(self) -> bool:
        return not self.v

    def to_rational(self) -> Fraction:
        if self.v:
            raise ArithmeticDomainError(f"{self} is irrational")
        return self.u

    def sign(self) -> int:
        """Exact sign of u - v*sqrt(2/p)."""
        a = self.u
        b = -self.v  # coefficient of +sqrt(2/p)
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        lhs = a * a
        rhs = b * b * Fraction(2, self.p)
        if lhs > rhs:
            return sa
        if lhs < rhs:
            return sb
        return 0

    def __float__(self) -> float:
        return float(self.u) - float(self.v) * math.sqrt(2 / self.p)

    def floor(self) -> int:
        guess = math.floor(float(self))
        while (self - guess).sign() < 0:
            guess -= 1
        while (self - (guess + 1)).sign() >= 0:
            guess += 1
        return guess

    def compare(self, other) -> int:
        return (self - other).sign()

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QAlpha):
            return self.p == other.p and self.u == other.u and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return not self.v and self.u == other
        return NotImplemented

    def __hash__(self) -> int:
        try:
            return self._h
        except AttributeError:
            h = hash(self.u) if not self.v else hash((self.u, self.v, self.p))
            object.__setattr__(self, "_h", h)
            return h

    def __repr__(self) -> str:
        return f"QAlpha({format_rational(self.u)}, {format_rational(self.v)}, p={self.p})"

    def __str__(self) -> str:
        return _render_terms([(self.u, ""), (self.v, "am")])


def _render_terms(terms: list[tuple[Fraction, str]]) -> str:
    parts: list[str] = []
    for coeff, sym in terms:
        if not coeff:
            continue
        if sym:
            mag = abs(coeff)
            body = sym if mag == 1 else f"{format_rational(mag)}*{sym}"
        else:
            body = format_rational(abs(coeff))
        neg = coeff < 0
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts) if parts else "0"


class WeightValue:
    """g*e + body where e is a formal generic symbol and body lies in Q[am]."""

    __slots__ = ("g", "body", "_h")

    def __init__(self, g: RationalLike, body: QAlpha) -> None:
        object.__setattr__(self, "g", g if type(g) is Fraction else Fraction(g))
        object.__setattr__(self, "body", body)

    def __setattr__(self, name, value):
        raise AttributeError("WeightValue is immutable")

    @classmethod
    def of(cls, value: QAlpha | WeightValue) -> WeightValue:
        if isinstance(value, WeightValue):
            return value
        return cls(0, value)

    @classmethod
    def zero(cls, p: int) -> WeightValue:
        return cls(0, QAlpha(0, 0, p))

    @classmethod
    def make(cls, p: int, u: RationalLike = 0, v: RationalLike = 0, g: RationalLike = 0) -> WeightValue:
        return cls(g, QAlpha(u, v, p))

    @classmethod
    def parse(cls, text: str, p: int) -> WeightValue:
        return parse_weight(text, p)

    @property
    def p(self) -> int:
        return self.body.p

    def is_generic(self) -> bool:
        return self.g != 0

    def numeric(self) -> QAlpha:
        if self.g:
            raise GenericWeight(f"weight {self} carries the generic symbol")
        return self.body

    def __add__(self, other) -> WeightValue:
        if isinstance(other, WeightValue):
            return WeightValue(self.g + other.g, self.body + other.body)
        if isinstance(other, (QAlpha, int, Fraction)):
            return WeightValue(self.g, self.body + other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> WeightValue:
        if isinstance(other, WeightValue):
            return WeightValue(self.g - other.g, self.body - other.body)
        if isinstance(other, (QAlpha, int, Fraction)):
            return WeightValue(self.g, self.body - other)
        return NotImplemented

    def __rsub__(self, other) -> WeightValue:
        return (-self) + other

    def __neg__(self) -> WeightValue:
        return WeightValue(-self.g, -self.body)

    def scale(self, q: RationalLike) -> WeightValue:
        return WeightValue(self.g * q, self.body * Fraction(q))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeightValue):
            return self.g == other.g and self.body == other.body
        if isinstance(other, QAlpha):
            return not self.g and self.body == other
        return NotImplemented

    def __hash__(self) -> int:
        try:
            return self._h
        except AttributeError:
            h = hash(self.body) if not self.g else hash((self.g, self.body))
            object.__setattr__(self, "_h", h)
            return h

    def sort_key(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.g, self.body.u, self.body.v)

    def __repr__(self) -> str:
        return f"WeightValue({self}, p={self.p})"

    def __str__(self) -> str:
        return _render_terms([(self.g, "e"), (self.body.u, ""), (self.body.v, "am")])


_TERM_RE = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<sym1>e|am))?|(?P<sym2>e|am)(?:\s*/\s*(?P<den>\d+))?)$"
)


def parse_weight(text: str, p: int) -> WeightValue:
    """Parse the grammar ``g*e + u + v*am`` where every term is optional."""
    s = text.strip()
    if not s:
        raise ParseError("empty weight")
    coeffs = {"e": _ZERO, "": _ZERO, "am": _ZERO}
    pos = 0
    first = True
    for m in re.finditer(r"\s*([+-]?)\s*([^+-]+)", s):
        if m.start() != pos:
            raise ParseError(f"cannot parse weight {text!r}")
        pos = m.end()
        sign, body = m.group(1), m.group(2).strip()
        if not sign and not first:
            raise ParseError(f"missing operator in weight {text!r}")
        first = False
        t = _TERM_RE.match(body)
        if not t:
            raise ParseError(f"bad term {body!r} in weight {text!r}")
        if t.group("coef") is not None:
            c = parse_rational(t.group("coef"))
            sym = t.group("sym1") or ""
        else:
            c = _ONE
            sym = t.group("sym2")
            if t.group("den"):
                den = int(t.group("den"))
                if den == 0:
                    raise ParseError(f"zero denominator in {text!r}")
                c = Fraction(1, den)
        if sign == "-":
            c = -c
        coeffs[sym] += c
    if pos != len(s):
        raise ParseError(f"cannot parse weight {text!r}")
    return WeightValue(coeffs["e"], QAlpha(coeffs[""], coeffs["am"], p))


def alpha_rs(r: int, s: int, p: int) -> QAlpha:
    """The lattice point ((1-r)/2)*sqrt(2p) + ((1-s)/2)*am."""
    c = Fraction((1 - s) - p * (1 - r), 2)
    return QAlpha.from_lattice(0, c, p)


def decompose_alpha(w: WeightValue | QAlpha) -> tuple[int, int] | None:
    """Return (r, s) with w = alpha_{r,s} and 1 <= s <= p, or None if typical."""
    w = WeightValue.of(w)
    if w.g:
        return None
    p = w.p
    rest, c = w.body.lattice_split()
    if rest:
        return None
    two_c = 2 * c
    if two_c.denominator != 1:
        return None
    tc = two_c.numerator
    s = (-tc) % p + 1
    r_num = tc - (1 - s)
    assert r_num % p == 0
    return 1 + r_num // p, s
