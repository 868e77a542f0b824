"""Dense matrices over R = Z[X, X^-1, Y, Y^-1]."""

import logging
from dataclasses import dataclass
from typing import Sequence, Union

from src.errors import DimensionError, NonUnitError
from src.rings.laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    X,
    Y,
    format_laurent,
    inverse_unit,
    is_unit,
    parse_laurent,
    poly_sum,
)

logger = logging.getLogger(__name__)

MAX_DET_SIZE = 4

Entry = Union[LaurentPoly, int]


@dataclass(frozen=True)
class LaurentMatrix:
    """rows x cols matrix stored row-major; Python indexing is 0-based."""

    rows: int
    cols: int
    entries: tuple[LaurentPoly, ...]

    def __post_init__(self):
        entries = tuple(LaurentPoly.coerce(e) for e in self.entries)
        if self.rows < 0 or self.cols < 0 or len(entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]], cols: int | None = None) -> "LaurentMatrix":
        rows = [list(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != width for r in rows):
            raise DimensionError("Rows of unequal length")
        return cls(len(rows), width, tuple(e for r in rows for e in r))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: tuple[int, int]) -> LaurentPoly:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[LaurentPoly, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], cols=self.rows
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return mul(self, other)

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"Cannot add {self.shape} and {other.shape}")
        return LaurentMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return self + other.scale(-1)

    def scale(self, c: Entry) -> "LaurentMatrix":
        c = LaurentPoly.coerce(c)
        return LaurentMatrix(self.rows, self.cols, tuple(c * e for e in self.entries))

    def __str__(self) -> str:
        return format_matrix(self)


def identity(n: int) -> LaurentMatrix:
    return LaurentMatrix(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))


def zeros(rows: int, cols: int) -> LaurentMatrix:
    return LaurentMatrix(rows, cols, (ZERO,) * (rows * cols))


def diagonal(values: Sequence[Entry]) -> LaurentMatrix:
    n = len(values)
    return LaurentMatrix(
        n, n, tuple(LaurentPoly.coerce(values[i]) if i == j else ZERO for i in range(n) for j in range(n))
    )


def elementary(n: int, i: int, j: int, a: Entry) -> LaurentMatrix:
    """Identity plus `a` at the 1-based position (i, j), i != j."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise DimensionError(f"No off-diagonal position ({i}, {j}) in size {n}")
    rows = identity(n).to_rows()
    rows[i - 1][j - 1] = LaurentPoly.coerce(a)
    return LaurentMatrix.from_rows(rows)


def mul(A: LaurentMatrix, B: LaurentMatrix) -> LaurentMatrix:
    """Exact product AB."""
    if A.cols != B.rows:
        raise DimensionError(f"Cannot multiply {A.shape} by {B.shape}")
    entries = tuple(
        poly_sum(A[i, k] * B[k, j] for k in range(A.cols))
        for i in range(A.rows)
        for j in range(B.cols)
    )
    return LaurentMatrix(A.rows, B.cols, entries)


def _minor(rows: list[list[LaurentPoly]], j: int) -> list[list[LaurentPoly]]:
    return [r[:j] + r[j + 1 :] for r in rows[1:]]


def _laplace(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = ZERO
    for j in range(n):
        element = rows[0][j]
        if element.is_zero():
            continue
        term = element * _laplace(_minor(rows, j))
        total = total + term if j % 2 == 0 else total - term
    return total


def det(A: LaurentMatrix) -> LaurentPoly:
    """Determinant of a square matrix of size at most 4, by cofactor expansion
    along the first row."""
    if not A.is_square():
        raise DimensionError(f"Determinant of a non-square {A.shape} matrix")
    if A.rows > MAX_DET_SIZE:
        raise DimensionError(f"Determinants are limited to size {MAX_DET_SIZE}, got {A.rows}")
    return _laplace(A.to_rows())


def adjugate_inverse_2x2(A: LaurentMatrix) -> LaurentMatrix:
    """A^-1 = det(A)^-1 adj(A) for a 2 x 2 matrix with unit determinant.

    Raises:
        NonUnitError: If det(A) is not a unit, i.e. A is not in GL_2(R).
    """
    if A.shape != (2, 2):
        raise DimensionError(f"Expected a 2x2 matrix, got {A.shape}")
    d = det(A)
    if not is_unit(d):
        raise NonUnitError(f"det = {d} is not a unit; the matrix is not invertible over R")
    inv = inverse_unit(d)
    a, b, c, e = A.entries
    return LaurentMatrix.from_rows([[inv * e, -(inv * b)], [-(inv * c), inv * a]])


def outer_product(col: Sequence[Entry], row: Sequence[Entry]) -> LaurentMatrix:
    """Entry (i, j) = col_i * row_j."""
    col = [LaurentPoly.coerce(c) for c in col]
    row = [LaurentPoly.coerce(r) for r in row]
    return LaurentMatrix.from_rows([[c * r for r in row] for c in col], cols=len(row))


def evans_matrix() -> LaurentMatrix:
    """The 2 x 2 matrix over R that is invertible but not a product of
    elementary and diagonal matrices."""
    y_inv = Y ** -1
    t = (X - 1) * y_inv
    return LaurentMatrix.from_rows([
        [1 - 2 * t, 4 * y_inv],
        [-((X - 1) * t), 1 + 2 * t],
    ])


def format_matrix(A: LaurentMatrix) -> str:
    """Rows separated by `;`, entries by `,`."""
    return "; ".join(", ".join(format_laurent(e) for e in A.row(i)) for i in range(A.rows))


def parse_matrix(text: str) -> LaurentMatrix:
    rows = [[parse_laurent(e) for e in r.split(",")] for r in text.split(";") if r.strip()]
    return LaurentMatrix.from_rows(rows)
