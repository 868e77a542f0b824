"""Q, Q* and Q** moves on presentations and their effect on Lambda.

Q-moves multiply, invert or conjugate a relator; Q* adds automorphisms of
F_2; Q** adds stabilization by a fresh generator and its inverse.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from src.errors import InvalidMoveError
from src.groups.words import Word, conjugate, exponent_sums, invert, multiply
from src.invariants.winding import winding_invariant
from src.presentations.endomorphisms import (
    Endomorphism,
    apply_endomorphism,
    induced_ring_map,
    is_automorphism_rank2,
)
from src.presentations.presentation import Presentation
from src.rings.ge import GEFactor, automorphism_lambda_certificate as _diagonal_certificate
from src.rings.laurent import LaurentPoly, monomial
from src.rings.matrices import LaurentMatrix, diagonal, elementary, identity, mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mult:
    """r_j <- r_j r_i."""

    j: int
    i: int

    def __str__(self) -> str:
        return f"mult {self.j} {self.i}"


@dataclass(frozen=True)
class Invert:
    """r_j <- r_j^-1."""

    j: int

    def __str__(self) -> str:
        return f"invert {self.j}"


@dataclass(frozen=True)
class Conjugate:
    """r_j <- g r_j g^-1."""

    j: int
    g: Word

    def __str__(self) -> str:
        return f"conj {self.j} {self.g}"


@dataclass(frozen=True)
class Automorph:
    """Every relator r -> phi(r)."""

    phi: Endomorphism

    def __str__(self) -> str:
        return f"auto {self.phi.image_of_x} ; {self.phi.image_of_y}"


@dataclass(frozen=True)
class Stabilize:
    """Add a generator z and the relator z."""

    def __str__(self) -> str:
        return "stab"


@dataclass(frozen=True)
class Destabilize:
    """Remove the last generator together with the relator that is exactly that generator or its inverse."""

    def __str__(self) -> str:
        return "destab"


Move = Union[Mult, Invert, Conjugate, Automorph, Stabilize, Destabilize]
Q_MOVES = (Mult, Invert, Conjugate)


def _check_index(P: Presentation, j: int) -> None:
    if not 1 <= j <= P.relator_count:
        raise InvalidMoveError(f"Relator index {j} outside 1..{P.relator_count}")


def _destabilizing_index(P: Presentation) -> int:
    n = P.generator_count
    if n < 2:
        raise InvalidMoveError("Nothing to destabilize: only one generator left")
    own = [
        j for j, r in enumerate(P.relators, start=1)
        if r.letters in ((n,), (-n,))
    ]
    if not own:
        raise InvalidMoveError(f"No relator equals the last generator x_{n}")
    j = own[0]
    for k, r in enumerate(P.relators, start=1):
        if k != j and any(abs(c) == n for c in r.letters):
            raise InvalidMoveError(f"Last generator x_{n} also occurs in r_{k} = {r}")
    return j


def apply_move(P: Presentation, m: Move) -> Presentation:
    """The presentation obtained from P by the move m.

    Raises:
        InvalidMoveError: On an out-of-range index, a non-automorphism, an
            Automorph on a stabilized presentation or an illegal Destabilize.
    """
    if isinstance(m, Mult):
        _check_index(P, m.j)
        _check_index(P, m.i)
        if m.i == m.j:
            raise InvalidMoveError(f"mult needs two different relators, got {m.j} twice")
        return P.with_relator(m.j, multiply(P.relator(m.j), P.relator(m.i)))
    if isinstance(m, Invert):
        _check_index(P, m.j)
        return P.with_relator(m.j, invert(P.relator(m.j)))
    if isinstance(m, Conjugate):
        _check_index(P, m.j)
        if m.g.rank > P.generator_count:
            raise InvalidMoveError(f"Conjugator {m.g} uses a generator outside the presentation")
        return P.with_relator(m.j, conjugate(m.g, P.relator(m.j)))
    if isinstance(m, Automorph):
        if P.generator_count != 2:
            raise InvalidMoveError("Automorphisms act on presentations over x, y only")
        if not is_automorphism_rank2(m.phi):
            raise InvalidMoveError(f"({m.phi}) is not an automorphism of F_2")
        return Presentation(2, tuple(apply_endomorphism(m.phi, r) for r in P.relators))
    if isinstance(m, Stabilize):
        n = P.generator_count + 1
        return Presentation(n, P.relators + (Word.generator(n),))
    if isinstance(m, Destabilize):
        j = _destabilizing_index(P)
        relators = P.relators[: j - 1] + P.relators[j:]
        return Presentation(P.generator_count - 1, relators)
    raise InvalidMoveError(f"Unknown move {m!r}")


def apply_script(P: Presentation, script: Iterable[Move]) -> Presentation:
    for step, m in enumerate(script, start=1):
        try:
            P = apply_move(P, m)
        except InvalidMoveError as e:
            raise InvalidMoveError(f"Step {step} ({m}): {e}") from e
    return P


def automorphism_unit(phi: Endomorphism) -> LaurentPoly:
    """u = P_{phi([x,y])}, a unit of R when phi is an automorphism."""
    return winding_invariant(apply_endomorphism(phi, Word((1, 2, -1, -2))))


def move_lambda_action(m: Move, size: int) -> LaurentMatrix:
    """The size x size matrix by which a move acts on the column Lambda^t.

    Mult(j, i) gives the elementary matrix with 1 at (j, i), Invert(j) the
    diagonal matrix with -1 at j, Conjugate(j, g) the diagonal matrix with
    X^k Y^l at j, and Automorph(phi) the scalar matrix u * I.

    Raises:
        InvalidMoveError: For Stabilize and Destabilize, or an index outside 1..size.
    """
    if isinstance(m, (Stabilize, Destabilize)):
        raise InvalidMoveError(f"{m} changes the rank; it has no action on Lambda")
    for index in (getattr(m, "j", None), getattr(m, "i", None)):
        if index is not None and not 1 <= index <= size:
            raise InvalidMoveError(f"Relator index {index} outside 1..{size}")
    if isinstance(m, Mult):
        if m.i == m.j:
            raise InvalidMoveError(f"mult needs two different relators, got {m.j} twice")
        return elementary(size, m.j, m.i, 1)
    if isinstance(m, Invert):
        return diagonal([-1 if k == m.j else 1 for k in range(1, size + 1)])
    if isinstance(m, Conjugate):
        k, l = exponent_sums(m.g)
        return diagonal([monomial(k, l) if r == m.j else 1 for r in range(1, size + 1)])
    if isinstance(m, Automorph):
        if not is_automorphism_rank2(m.phi):
            raise InvalidMoveError(f"({m.phi}) is not an automorphism of F_2")
        return identity(size).scale(automorphism_unit(m.phi))
    raise InvalidMoveError(f"Unknown move {m!r}")


def transform_lambda(m: Move, lam: Sequence[LaurentPoly]) -> tuple[LaurentPoly, ...]:
    """Lambda after the move m.

    Q-moves act linearly through `move_lambda_action`. An automorphism acts
    semilinearly: P_{phi(r)} = u * phi_ab(P_r), with u = P_{phi([x,y])} and
    phi_ab the induced ring map.
    """
    lam = tuple(LaurentPoly.coerce(p) for p in lam)
    if isinstance(m, Automorph):
        if not is_automorphism_rank2(m.phi):
            raise InvalidMoveError(f"({m.phi}) is not an automorphism of F_2")
        u = automorphism_unit(m.phi)
        ring_map = induced_ring_map(m.phi)
        return tuple(u * ring_map(p) for p in lam)
    column = LaurentMatrix.from_rows([[p] for p in lam], cols=1)
    return mul(move_lambda_action(m, len(lam)), column).column(0)


def script_lambda_action(script: Sequence[Move], size: int) -> LaurentMatrix:
    """Product of the actions of a Q-move script, last move leftmost."""
    result = identity(size)
    for m in script:
        result = mul(move_lambda_action(m, size), result)
    return result


def automorphism_lambda_certificate(phi: Endomorphism) -> list[GEFactor]:
    """GE factors carrying Lambda(<x,y | [x,y], 1>) = (1, 0) to Lambda of its image under phi.

    Raises:
        InvalidMoveError: If phi is not an automorphism.
    """
    if not is_automorphism_rank2(phi):
        raise InvalidMoveError(f"({phi}) is not an automorphism of F_2")
    return _diagonal_certificate(automorphism_unit(phi))
