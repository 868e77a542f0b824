"""GE_n(R) certificates: products of elementary and unit-diagonal matrices.

Membership in GE_n(R) is never decided here. A certificate is an explicit
factor list, and checking it is a matter of multiplying out.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Union

from src.errors import DimensionError, InvalidFactorError, PreconditionError
from src.rings.laurent import ONE, LaurentPoly, inverse_unit, is_unit
from src.rings.matrices import LaurentMatrix, det, diagonal, elementary, identity, mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Elementary:
    """Identity plus `a` at the 1-based off-diagonal position (i, j)."""

    i: int
    j: int
    a: LaurentPoly

    def __post_init__(self):
        if self.i == self.j:
            raise InvalidFactorError(f"Elementary factor needs i != j, got ({self.i}, {self.j})")
        object.__setattr__(self, "a", LaurentPoly.coerce(self.a))


@dataclass(frozen=True)
class Diagonal:
    """Diagonal matrix whose entries are units of R."""

    units: tuple[LaurentPoly, ...]

    def __post_init__(self):
        units = tuple(LaurentPoly.coerce(u) for u in self.units)
        for u in units:
            if not is_unit(u):
                raise InvalidFactorError(f"Diagonal entry {u} is not a unit of R")
        object.__setattr__(self, "units", units)


GEFactor = Union[Elementary, Diagonal]


def realize(f: GEFactor, n: int) -> LaurentMatrix:
    """The n x n matrix of a factor."""
    if isinstance(f, Elementary):
        if not (1 <= f.i <= n and 1 <= f.j <= n):
            raise InvalidFactorError(f"Position ({f.i}, {f.j}) outside size {n}")
        return elementary(n, f.i, f.j, f.a)
    if isinstance(f, Diagonal):
        if len(f.units) != n:
            raise InvalidFactorError(f"Diagonal factor of size {len(f.units)} used at size {n}")
        return diagonal(f.units)
    raise InvalidFactorError(f"Not a GE factor: {f!r}")


def product(factors: Sequence[GEFactor], n: int) -> LaurentMatrix:
    result = identity(n)
    for f in factors:
        result = mul(result, realize(f, n))
    return result


def check_ge_product(factors: Sequence[GEFactor], target: LaurentMatrix) -> bool:
    """True iff the ordered product of `factors` equals `target`."""
    if not target.is_square():
        return False
    return product(factors, target.rows) == target


def invert_factor(f: GEFactor) -> GEFactor:
    if isinstance(f, Elementary):
        return Elementary(f.i, f.j, -f.a)
    return Diagonal(tuple(inverse_unit(u) for u in f.units))


def invert_factors(factors: Sequence[GEFactor]) -> list[GEFactor]:
    """Factors of the inverse product, (F_1 ... F_k)^-1 = F_k^-1 ... F_1^-1."""
    return [invert_factor(f) for f in reversed(factors)]


def is_elementary_matrix(A: LaurentMatrix) -> bool:
    """Identity except for at most one off-diagonal entry."""
    if not A.is_square():
        return False
    off = 0
    for i in range(A.rows):
        for j in range(A.cols):
            if i == j and A[i, j] != ONE:
                return False
            if i != j and not A[i, j].is_zero():
                off += 1
    return off <= 1


def is_unit_diagonal_matrix(A: LaurentMatrix) -> bool:
    if not A.is_square():
        return False
    return all(
        is_unit(A[i, j]) if i == j else A[i, j].is_zero()
        for i in range(A.rows)
        for j in range(A.cols)
    )


def reduce_e1_fixed(N: LaurentMatrix) -> Elementary:
    """Clear the corner of a determinant-one matrix that fixes e_1.

    A 2 x 2 matrix with first column (1, 0) and determinant 1 is forced to be
    [[1, A], [0, 1]]; the returned Elementary(1, 2, -A) satisfies
    realize(result) * N = I.

    Raises:
        PreconditionError: If N is not 2 x 2, its first column is not e_1, or det(N) != 1.
    """
    if N.shape != (2, 2):
        raise PreconditionError(f"Expected a 2x2 matrix, got {N.shape}")
    if N[0, 0] != ONE or not N[1, 0].is_zero():
        raise PreconditionError(f"First column ({N[0, 0]}, {N[1, 0]}) is not e_1")
    if det(N) != ONE:
        raise PreconditionError(f"det = {det(N)}; the corner is forced to 1 only in SL_2")
    return Elementary(1, 2, -N[0, 1])


def lift_column_certificate(factors: Sequence[GEFactor], target: LaurentMatrix) -> list[GEFactor]:
    """Extend a certificate for the first column of `target` to all of `target`.

    If E = product(factors) has the same first column as the 2 x 2 `target`
    and det(target) / det(E) is a unit v, then E^-1 target = diag(1, v) [[1, A], [0, 1]]
    and `target` = E diag(1, v) Elementary(1, 2, A).

    Raises:
        DimensionError: If `target` is not 2 x 2.
        PreconditionError: If the first columns differ or the determinant ratio is not a unit.
    """
    if target.shape != (2, 2):
        raise DimensionError(f"Expected a 2x2 target, got {target.shape}")
    E = product(factors, 2)
    if E.column(0) != target.column(0):
        raise PreconditionError("The certificate does not carry e_1 to the first column of the target")
    rest = mul(product(invert_factors(factors), 2), target)
    v = rest[1, 1]
    if not is_unit(v):
        raise PreconditionError(f"Corner {v} is not a unit; the target is not in GL_2(R)")
    scaled = mul(realize(Diagonal((ONE, inverse_unit(v))), 2), rest)
    corner = reduce_e1_fixed(scaled)
    lifted = list(factors) + [Diagonal((ONE, v)), Elementary(1, 2, -corner.a)]
    logger.debug(f"Lifted a {len(factors)}-factor column certificate to {len(lifted)} factors")
    return lifted


def automorphism_lambda_certificate(unit: LaurentPoly) -> list[GEFactor]:
    """diag(u, 1), which carries (1, 0) to (u, 0)."""
    if not is_unit(unit):
        raise InvalidFactorError(f"{unit} is not a unit of R")
    return [Diagonal((unit, ONE))]


__all__ = [
    "Diagonal",
    "Elementary",
    "GEFactor",
    "automorphism_lambda_certificate",
    "check_ge_product",
    "invert_factors",
    "is_elementary_matrix",
    "is_unit_diagonal_matrix",
    "lift_column_certificate",
    "product",
    "realize",
    "reduce_e1_fixed",
]
