"""Freely reduced words in the free group on x, y (and extra generators).

A word is stored as a tuple of nonzero integer codes: +1 is x, -1 is x^-1,
+2 is y, -2 is y^-1, and +3, +4, ... are the generators added by
stabilization. Words are reduced as soon as they are built.
"""

import logging
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, NamedTuple

from src.errors import NotInCommutatorSubgroupError, RankError

logger = logging.getLogger(__name__)

GENERATOR_NAMES = ("x", "y", "z", "t", "u", "v", "w")


def generator_name(index: int) -> str:
    """Printable name of the 1-based generator `index`."""
    if 1 <= index <= len(GENERATOR_NAMES):
        return GENERATOR_NAMES[index - 1]
    return f"x{index}"


class Letter(NamedTuple):
    """A generator (1-based index) raised to the power +1 or -1."""

    generator: int
    sign: int

    @property
    def code(self) -> int:
        return self.generator * self.sign

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(abs(code), 1 if code > 0 else -1)

    def __str__(self) -> str:
        name = generator_name(self.generator)
        return name if self.sign > 0 else f"{name}^-1"


def free_reduce(codes: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs with a single stack pass."""
    stack: list[int] = []
    for code in codes:
        if not isinstance(code, int) or code == 0:
            raise ValueError(f"Invalid letter code: {code!r}")
        if stack and stack[-1] == -code:
            stack.pop()
        else:
            stack.append(code)
    return tuple(stack)


def _letter_key(code: int) -> tuple[int, int]:
    # x < x^-1 < y < y^-1 < z ...
    return (abs(code), 0 if code > 0 else 1)


@total_ordering
@dataclass(frozen=True, eq=True)
class Word:
    """Immutable freely reduced word."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def _trusted(cls, letters: tuple[int, ...]) -> "Word":
        """Wrap a tuple already known to be reduced."""
        word = object.__new__(cls)
        object.__setattr__(word, "letters", letters)
        return word

    @classmethod
    def generator(cls, index: int, sign: int = 1) -> "Word":
        return cls._trusted((index * sign,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter.from_code(c) for c in self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else invert(self)
        # base = c * core * c^-1 with core cyclically reduced, so core^n needs no cancellation
        core, c = cyclic_reduce(base)
        if not core.letters or exponent == 0:
            return EMPTY
        return Word._trusted(c.letters + core.letters * abs(exponent) + invert(c).letters)

    def __lt__(self, other: "Word") -> bool:
        return sort_key(self) < sort_key(other)

    def __str__(self) -> str:
        return to_string(self)

    def __repr__(self) -> str:
        return f"Word({to_string(self)!r})"

    def prefix(self, n: int) -> "Word":
        return Word._trusted(self.letters[:n])

    @property
    def rank(self) -> int:
        """Largest generator index used (0 for the empty word)."""
        return max((abs(c) for c in self.letters), default=0)


EMPTY = Word()
X = Word.generator(1)
Y = Word.generator(2)


@dataclass(frozen=True)
class PathTrace:
    """Lattice path traced by a word, starting at the origin."""

    points: tuple[tuple[int, int], ...]

    @property
    def end(self) -> tuple[int, int]:
        return self.points[-1]

    def translate(self, dk: int, dl: int) -> "PathTrace":
        return PathTrace(tuple((k + dk, l + dl) for k, l in self.points))

    def bounding_box(self) -> tuple[int, int, int, int]:
        """(k_min, k_max, l_min, l_max) of the visited points."""
        ks = [p[0] for p in self.points]
        ls = [p[1] for p in self.points]
        return min(ks), max(ks), min(ls), max(ls)


def sort_key(w: Word) -> tuple:
    """Length-lexicographic key."""
    return (len(w.letters), tuple(_letter_key(c) for c in w.letters))


def multiply(u: Word, v: Word) -> Word:
    """Reduced concatenation uv."""
    a, b = u.letters, v.letters
    i = 0
    n = min(len(a), len(b))
    while i < n and a[len(a) - 1 - i] == -b[i]:
        i += 1
    return Word._trusted(a[: len(a) - i] + b[i:])


def invert(u: Word) -> Word:
    return Word._trusted(tuple(-c for c in reversed(u.letters)))


def conjugate(g: Word, w: Word) -> Word:
    """g w g^-1, reduced."""
    return multiply(multiply(g, w), invert(g))


def commutator(u: Word, v: Word) -> Word:
    """[u,v] = u v u^-1 v^-1, reduced."""
    return multiply(multiply(u, v), multiply(invert(u), invert(v)))


def exponent_vector(w: Word, rank: int) -> tuple[int, ...]:
    """Signed letter counts for generators 1..rank."""
    sums = [0] * rank
    for code in w.letters:
        if abs(code) > rank:
            raise RankError(f"Letter {Letter.from_code(code)} outside rank {rank}")
        sums[abs(code) - 1] += 1 if code > 0 else -1
    return tuple(sums)


def exponent_sums(w: Word) -> tuple[int, int]:
    """Total exponents (k, l) of x and y."""
    k, l = exponent_vector(w, 2)
    return k, l


def is_commutator_element(w: Word) -> bool:
    """True iff w lies in [F,F], i.e. both exponent sums vanish."""
    return exponent_vector(w, max(w.rank, 2)) == (0,) * max(w.rank, 2)


def require_commutator_element(w: Word) -> None:
    if not is_commutator_element(w):
        raise NotInCommutatorSubgroupError(
            f"{w} has exponent sums {exponent_vector(w, max(w.rank, 2))}, not in [F,F]"
        )


def trace_path(w: Word) -> PathTrace:
    """Lift of w to the lattice Z x R u R x Z, starting at (0, 0)."""
    k = l = 0
    points = [(0, 0)]
    for code in w.letters:
        if abs(code) == 1:
            k += 1 if code > 0 else -1
        elif abs(code) == 2:
            l += 1 if code > 0 else -1
        else:
            raise RankError(f"Cannot trace {Letter.from_code(code)} in the plane")
        points.append((k, l))
    return PathTrace(tuple(points))


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split w as conjugator * core * conjugator^-1 with core cyclically reduced."""
    letters = w.letters
    n = len(letters)
    i = 0
    while n - 2 * i >= 2 and letters[i] == -letters[n - 1 - i]:
        i += 1
    return Word._trusted(letters[i : n - i]), Word._trusted(letters[:i])


def cyclic_rotations(w: Word) -> list[Word]:
    """All rotations of a cyclically reduced word (each is reduced)."""
    letters = w.letters
    if not letters:
        return [EMPTY]
    return [Word._trusted(letters[r:] + letters[:r]) for r in range(len(letters))]


def cyclic_canonical(w: Word) -> Word:
    """Least rotation of the cyclic core: a conjugacy-class representative."""
    core, _ = cyclic_reduce(w)
    return min(cyclic_rotations(core), key=sort_key)


def conjugator_between(source: Word, target: Word) -> Word | None:
    """Some h with h * source * h^-1 == target, or None if not conjugate."""
    core_s, c_s = cyclic_reduce(source)
    core_t, c_t = cyclic_reduce(target)
    if len(core_s) != len(core_t):
        return None
    letters = core_s.letters
    for r in range(max(len(letters), 1)):
        if letters[r:] + letters[:r] == core_t.letters:
            # core_t = u^-1 core_s u with u = core_s[:r]
            u = Word._trusted(letters[:r])
            return multiply(multiply(c_t, invert(u)), invert(c_s))
    return None


def enumerate_words(max_length: int, rank: int = 2, min_length: int = 0) -> Iterator[Word]:
    """Every reduced word of length min_length..max_length, in length-lex order."""
    alphabet = sorted((s * g for g in range(1, rank + 1) for s in (1, -1)), key=_letter_key)
    layer: list[tuple[int, ...]] = [()]
    for length in range(max_length + 1):
        if length >= min_length:
            for letters in layer:
                yield Word._trusted(letters)
        layer = [
            letters + (c,)
            for letters in layer
            for c in alphabet
            if not letters or letters[-1] != -c
        ]


def to_string(w: Word) -> str:
    """Concatenated letters, inverses as `x^-1`; the empty word prints as `1`."""
    if not w.letters:
        return "1"
    return "".join(str(Letter.from_code(c)) for c in w.letters)
