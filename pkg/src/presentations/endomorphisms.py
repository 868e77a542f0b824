"""Endomorphisms of F_2, the Nielsen generators of Aut(F_2) and the
automorphism test by conjugacy of the image of [x,y]."""

import logging
from dataclasses import dataclass
from typing import Callable

from src.errors import RankError
from src.groups.words import (
    EMPTY,
    X,
    Y,
    Word,
    commutator,
    cyclic_reduce,
    cyclic_rotations,
    exponent_sums,
    invert,
    multiply,
)
from src.rings.laurent import LaurentPoly, substitute_monomials

logger = logging.getLogger(__name__)

NIELSEN_KINDS = ("swap", "invert_x", "shear", "shear_inverse")

_XY = commutator(X, Y)
_YX = commutator(Y, X)


@dataclass(frozen=True)
class Endomorphism:
    """x -> image_of_x, y -> image_of_y."""

    image_of_x: Word
    image_of_y: Word

    def __post_init__(self):
        for name, w in (("x", self.image_of_x), ("y", self.image_of_y)):
            if w.rank > 2:
                raise RankError(f"Image of {name} ({w}) leaves F(x, y)")

    def __call__(self, w: Word) -> Word:
        return apply_endomorphism(self, w)

    def __str__(self) -> str:
        return f"x -> {self.image_of_x}, y -> {self.image_of_y}"


IDENTITY = Endomorphism(X, Y)


def identity() -> Endomorphism:
    return IDENTITY


def apply_endomorphism(phi: Endomorphism, w: Word) -> Word:
    """Substitute the images of x and y into w and reduce.

    Raises:
        RankError: If w uses a generator other than x and y.
    """
    if w.rank > 2:
        raise RankError(f"{w} is not a word in x, y")
    images = {1: phi.image_of_x, 2: phi.image_of_y}
    result = EMPTY
    for code in w.letters:
        image = images[abs(code)]
        result = multiply(result, image if code > 0 else invert(image))
    return result


def compose(phi: Endomorphism, psi: Endomorphism) -> Endomorphism:
    """phi after psi: g -> phi(psi(g))."""
    return Endomorphism(apply_endomorphism(phi, psi.image_of_x), apply_endomorphism(phi, psi.image_of_y))


def nielsen(kind: str) -> Endomorphism:
    """One of the standard generators of Aut(F_2).

    Args:
        kind: "swap" (x <-> y), "invert_x" (x -> x^-1), "shear" (x -> xy)
            or "shear_inverse" (x -> xy^-1).
    """
    if kind == "swap":
        return Endomorphism(Y, X)
    if kind == "invert_x":
        return Endomorphism(invert(X), Y)
    if kind == "shear":
        return Endomorphism(multiply(X, Y), Y)
    if kind == "shear_inverse":
        return Endomorphism(multiply(X, invert(Y)), Y)
    raise ValueError(f"Unknown Nielsen generator {kind!r}; expected one of {NIELSEN_KINDS}")


def is_automorphism_rank2(phi: Endomorphism) -> bool:
    """phi is an automorphism iff phi([x,y]) is conjugate to [x,y] or [y,x]."""
    core, _ = cyclic_reduce(apply_endomorphism(phi, _XY))
    if len(core) != 4:
        return False
    rotations = cyclic_rotations(core)
    return _XY in rotations or _YX in rotations


def induced_ring_map(phi: Endomorphism) -> Callable[[LaurentPoly], LaurentPoly]:
    """The ring map of R induced by phi on the abelianization Z^2.

    X -> X^a Y^c and Y -> X^b Y^d, where (a, c) and (b, d) are the exponent
    sums of phi(x) and phi(y).
    """
    x_image = exponent_sums(phi.image_of_x)
    y_image = exponent_sums(phi.image_of_y)

    def ring_map(p: LaurentPoly) -> LaurentPoly:
        return substitute_monomials(p, x_image, y_image)

    return ring_map
