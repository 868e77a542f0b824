"""Fox derivatives and the boundary matrix d_2 of a presentation complex."""

import logging

from src.errors import DimensionError, PreconditionError, RankError
from src.groups.words import Word, exponent_sums
from src.presentations.presentation import Presentation, require_rank2
from src.rings.group_ring import GroupRingElement, abelianize
from src.rings.laurent import LaurentPoly, X, Y, monomial
from src.rings.matrices import LaurentMatrix, evans_matrix, format_matrix, outer_product

logger = logging.getLogger(__name__)

_GENERATOR_INDEX = {"x": 1, "y": 2}

__all__ = ["abelianize", "boundary_d2", "corrected_chain_map", "fox_derivative", "fundamental_identity_check"]


def _generator_index(g) -> int:
    if isinstance(g, str):
        if g not in _GENERATOR_INDEX:
            raise RankError(f"Unknown generator {g!r}; expected 'x' or 'y'")
        return _GENERATOR_INDEX[g]
    return int(g)


def fox_derivative(w: Word, g) -> GroupRingElement:
    """dw/dg in Z[F_2].

    One left-to-right scan: a letter g at prefix p contributes +p, a letter
    g^-1 contributes -(p g^-1).

    Args:
        w: Word to differentiate.
        g: "x", "y" or a 1-based generator index.
    """
    index = _generator_index(g)
    acc: dict[Word, int] = {}
    letters = w.letters
    for n, code in enumerate(letters):
        if code == index:
            term = w.prefix(n)
            acc[term] = acc.get(term, 0) + 1
        elif code == -index:
            term = w.prefix(n + 1)
            acc[term] = acc.get(term, 0) - 1
    return GroupRingElement(acc)


def boundary_d2(P: Presentation) -> LaurentMatrix:
    """2 x m matrix of abelianized Fox derivatives; rows x, y and columns r_j."""
    require_rank2(P)
    rows = [
        [abelianize(fox_derivative(r, g)) for r in P.relators]
        for g in (1, 2)
    ]
    return LaurentMatrix.from_rows(rows, cols=P.relator_count)


def fundamental_identity_check(w: Word) -> bool:
    """Fox's identity (dw/dx)(X - 1) + (dw/dy)(Y - 1) = X^k Y^l - 1 after abelianizing."""
    k, l = exponent_sums(w)
    left = abelianize(fox_derivative(w, 1)) * (X - 1) + abelianize(fox_derivative(w, 2)) * (Y - 1)
    right: LaurentPoly = monomial(k, l) - 1
    return left == right


def corrected_chain_map(f2: LaurentMatrix) -> LaurentMatrix:
    """Correct the second row of a 2 x 2 chain map whose first row is Lambda(Q).

    Adding (0, 1)^t (4Y^-1 - c, 1 + 2(X-1)Y^-1 - d), with (c, d) the second
    row of f2, leaves d'_2 f2 unchanged (d'_2 has zero second column) and
    turns f2 into the transpose of the Evans matrix, which is invertible.

    Raises:
        DimensionError: If f2 is not 2 x 2.
        PreconditionError: If the first row of f2 is not Lambda(Q).
    """
    if f2.shape != (2, 2):
        raise DimensionError(f"Expected a 2x2 chain map, got {f2.shape}")
    target = evans_matrix().transpose()
    if f2.row(0) != target.row(0):
        raise PreconditionError(f"First row {format_matrix(f2)} is not Lambda(Q)")
    correction = outer_product([0, 1], [t - c for t, c in zip(target.row(1), f2.row(1))])
    return f2 + correction
