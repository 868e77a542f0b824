"""The winding invariant P_w of a word in [F,F].

The loop traced by w on the integer lattice winds a_{i,j} times around the
cell centre (i + 1/2, j + 1/2); P_w is the sum of a_{i,j} X^i Y^j.
Counterclockwise winding counts positively, so P_{[x,y]} = 1.

Two independent computations are provided. `winding_invariant` walks the
letters once and adds, for every vertical step, the column of cells to its
left; `winding_grid_oracle` casts a ray from every cell centre and counts
signed crossings. Tests hold them equal.
"""

import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

import numpy as np

from src.errors import NotInCommutatorSubgroupError
from src.groups.words import (
    Word,
    exponent_sums,
    invert,
    multiply,
    require_commutator_element,
    trace_path,
)
from src.presentations.presentation import Presentation, require_rank2
from src.rings.laurent import Exponent, LaurentPoly, geometric_column

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WindingGrid:
    """Nonzero winding numbers keyed by cell index (i, j)."""

    cells: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "cells", MappingProxyType({k: int(v) for k, v in self.cells.items() if v}))

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly(dict(self.cells))

    def total(self) -> int:
        return sum(self.cells.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, WindingGrid):
            return dict(self.cells) == dict(other.cells)
        if isinstance(other, dict):
            return dict(self.cells) == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.cells.items()))


def _vertical_steps(w: Word) -> list[tuple[int, int, int]]:
    """(k, j, sign) for every y-step: column k, lower height j, +1 up / -1 down."""
    steps = []
    points = trace_path(w).points
    for (k0, l0), (k1, l1) in zip(points, points[1:]):
        if k0 == k1:
            steps.append((k0, min(l0, l1), l1 - l0))
    return steps


def winding_invariant(w: Word) -> LaurentPoly:
    """P_w by one left-to-right pass.

    A y-step of sign e at column k between heights j and j+1 contributes
    e * q_k * Y^j, where q_k is `geometric_column(k)`.

    Raises:
        NotInCommutatorSubgroupError: If w is not in [F,F].
    """
    require_commutator_element(w)
    acc: dict[Exponent, int] = {}
    for k, j, sign in _vertical_steps(w):
        for (i, _), c in geometric_column(k).terms.items():
            acc[(i, j)] = acc.get((i, j), 0) + sign * c
    return LaurentPoly(acc)


def winding_grid_oracle(w: Word) -> WindingGrid:
    """Winding numbers by ray casting from every cell centre in the bounding box.

    The ray from (i + 1/2, j + 1/2) in the +x direction meets the vertical
    segment at column k between heights j and j+1 exactly when k > i, and
    never touches a vertex or a horizontal segment.
    """
    require_commutator_element(w)
    steps = _vertical_steps(w)
    if not steps:
        return WindingGrid({})
    k_min, k_max, l_min, l_max = trace_path(w).bounding_box()
    seg = np.array(steps, dtype=np.int64)
    seg_k, seg_j, seg_sign = seg[:, 0], seg[:, 1], seg[:, 2]
    # crossings[r, c]: signed segments at column k_min + c + 1, height l_min + r
    crossings = np.zeros((l_max - l_min, k_max - k_min), dtype=np.int64)
    inside = seg_k > k_min
    np.add.at(crossings, (seg_j[inside] - l_min, seg_k[inside] - k_min - 1), seg_sign[inside])
    # the ray from cell c meets every segment with column index >= c
    grid = np.cumsum(crossings[:, ::-1], axis=1)[:, ::-1]
    cells = {
        (k_min + int(c), l_min + int(r)): int(grid[r, c])
        for r, c in zip(*np.nonzero(grid))
    }
    return WindingGrid(cells)


def lambda_vector(P: Presentation) -> tuple[LaurentPoly, ...]:
    """Lambda(P) = (P_{r_1}, ..., P_{r_m}) of a cocommutative presentation."""
    require_rank2(P)
    for j, r in enumerate(P.relators, start=1):
        try:
            require_commutator_element(r)
        except NotInCommutatorSubgroupError as e:
            raise NotInCommutatorSubgroupError(f"Presentation is not cocommutative: r_{j}: {e}") from e
    return tuple(winding_invariant(r) for r in P.relators)


def equal_mod_second_derived(u: Word, v: Word) -> bool:
    """Equality of u and v in the free metabelian group F_2 / F_2''."""
    if exponent_sums(u) != exponent_sums(v):
        return False
    return winding_invariant(multiply(u, invert(v))).is_zero()
