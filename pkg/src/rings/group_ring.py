"""Integral group ring Z[F] of the free group: finite Z-combinations of words."""

from types import MappingProxyType
from typing import Mapping, Union

from src.groups.words import EMPTY, Word, exponent_sums, multiply
from src.rings.laurent import Exponent, LaurentPoly


class GroupRingElement:
    """Immutable sum of c * w with reduced words w and nonzero integers c."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        self._terms = {w: int(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, word: Word, coefficient: int = 1) -> "GroupRingElement":
        return cls({word: coefficient})

    @classmethod
    def _from_accumulator(cls, acc: dict[Word, int]) -> "GroupRingElement":
        element = object.__new__(cls)
        element._terms = {w: c for w, c in acc.items() if c}
        return element

    @classmethod
    def coerce(cls, value: Union["GroupRingElement", Word, int]) -> "GroupRingElement":
        if isinstance(value, GroupRingElement):
            return value
        if isinstance(value, Word):
            return cls.of(value)
        if isinstance(value, int):
            return cls.of(EMPTY, value)
        raise TypeError(f"Cannot use {type(value).__name__} as a group ring element")

    @property
    def terms(self) -> Mapping[Word, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (Word, int)):
            other = GroupRingElement.coerce(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "GroupRingElement":
        other = GroupRingElement.coerce(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return GroupRingElement._from_accumulator(acc)

    __radd__ = __add__

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement._from_accumulator({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "GroupRingElement":
        return self + (-GroupRingElement.coerce(other))

    def __rsub__(self, other) -> "GroupRingElement":
        return GroupRingElement.coerce(other) + (-self)

    def __mul__(self, other) -> "GroupRingElement":
        other = GroupRingElement.coerce(other)
        acc: dict[Word, int] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = multiply(u, v)
                acc[w] = acc.get(w, 0) + a * b
        return GroupRingElement._from_accumulator(acc)

    def __rmul__(self, other) -> "GroupRingElement":
        return GroupRingElement.coerce(other) * self

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for n, (w, c) in enumerate(sorted(self._terms.items())):
            body = str(w) if abs(c) == 1 else f"{abs(c)}*{w}"
            if n == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"GroupRingElement({str(self)!r})"


def abelianize(e: GroupRingElement) -> LaurentPoly:
    """Send each word to X^k Y^l, (k, l) its exponent sums, and collect."""
    acc: dict[Exponent, int] = {}
    for w, c in e.terms.items():
        key = exponent_sums(w)
        acc[key] = acc.get(key, 0) + c
    return LaurentPoly(acc)
