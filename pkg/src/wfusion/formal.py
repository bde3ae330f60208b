"""Finitely supported integer combinations of hashable labels.

Used both for direct sums (nonnegative multiplicities) and for Grothendieck
classes (arbitrary integer coefficients). Zero coefficients are dropped, and
iteration follows each label's ``sort_key`` so output is deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from typing import Generic, Hashable, TypeVar

L = TypeVar("L", bound=Hashable)


class FormalSum(Generic[L]):
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[L, int] | Iterable[tuple[L, int]] = ()) -> None:
        acc: dict[L, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for label, mult in items:
            acc[label] = acc.get(label, 0) + mult
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def of(cls, *labels: L) -> FormalSum[L]:
        return cls((lab, 1) for lab in labels)

    def items(self) -> list[tuple[L, int]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def labels(self) -> list[L]:
        return [k for k, _ in self.items()]

    def __iter__(self) -> Iterator[tuple[L, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, label: L) -> int:
        return self._terms.get(label, 0)

    def __contains__(self, label: object) -> bool:
        return label in self._terms

    def total(self) -> int:
        return sum(self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._terms.values())

    def __add__(self, other: FormalSum[L]) -> FormalSum[L]:
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return FormalSum(out)

    def __sub__(self, other: FormalSum[L]) -> FormalSum[L]:
        return self + other.scale(-1)

    def scale(self, n: int) -> FormalSum[L]:
        return FormalSum({k: v * n for k, v in self._terms.items()})

    def map(self, fn) -> FormalSum:
        """Apply ``fn`` to each label; a result may itself be a FormalSum."""
        out: dict = {}
        for k, v in self._terms.items():
            img = fn(k)
            if isinstance(img, FormalSum):
                for k2, v2 in img._terms.items():
                    out[k2] = out.get(k2, 0) + v * v2
            else:
                out[img] = out.get(img, 0) + v
        return FormalSum(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormalSum) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"FormalSum({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " (+) ".join(f"{m}*{lab}" for lab, m in self.items())
