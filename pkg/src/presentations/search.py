"""Bounded breadth-first search for Q*-move scripts between presentations.

States are deduplicated on a canonical key: each relator freely and
cyclically reduced, then the relators sorted. The key is a pruning device,
not an invariant of Q*-equivalence. A state whose relators are conjugate,
one by one, to the goal's is finished with one aligning conjugation per
relator, and every returned script is replayed before it is handed out.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

import pandas as pd

from src.groups.words import Word, conjugator_between, cyclic_canonical, enumerate_words
from src.presentations.endomorphisms import nielsen
from src.presentations.moves import (
    Automorph,
    Conjugate,
    Invert,
    Move,
    Mult,
    apply_move,
    apply_script,
)
from src.presentations.presentation import Presentation, require_rank2

logger = logging.getLogger(__name__)

DEFAULT_MAX_MOVES = 6
DEFAULT_MAX_CONJUGATOR_LEN = 2
DEFAULT_MAX_RELATOR_LEN = 24
SEARCH_AUTOMORPHISMS = ("swap", "invert_x", "shear", "shear_inverse")

_canonical = lru_cache(maxsize=1 << 16)(cyclic_canonical)


@lru_cache(maxsize=None)
def _conjugators(max_length: int) -> tuple[Word, ...]:
    return tuple(enumerate_words(max_length, min_length=1))


@dataclass(frozen=True)
class SearchBounds:
    max_moves: int = DEFAULT_MAX_MOVES
    max_conjugator_len: int = DEFAULT_MAX_CONJUGATOR_LEN
    max_relator_len: int = DEFAULT_MAX_RELATOR_LEN
    automorphisms: bool = True


@dataclass
class SearchReport:
    """Outcome of one search: the script (or None) and per-depth statistics."""

    script: Optional[list[Move]]
    exhausted: bool
    depth_rows: list[dict] = field(default_factory=list)

    @property
    def states_seen(self) -> int:
        return sum(row["new_states"] for row in self.depth_rows) + 1

    def stats(self) -> pd.DataFrame:
        return pd.DataFrame(self.depth_rows, columns=["depth", "frontier", "new_states", "pruned"])


def candidate_moves(P: Presentation, bounds: SearchBounds) -> Iterator[Move]:
    """Moves in the fixed order mult, invert, conj, auto."""
    m = P.relator_count
    for j in range(1, m + 1):
        for i in range(1, m + 1):
            if i != j:
                yield Mult(j, i)
    for j in range(1, m + 1):
        yield Invert(j)
    conjugators = _conjugators(bounds.max_conjugator_len)
    for j in range(1, m + 1):
        if not P.relator(j).letters:
            continue
        for g in conjugators:
            yield Conjugate(j, g)
    if bounds.automorphisms:
        for kind in SEARCH_AUTOMORPHISMS:
            yield Automorph(nielsen(kind))


def canonical_key(P: Presentation) -> tuple[Word, ...]:
    """Sorted cyclic canonical forms of the relators."""
    return tuple(sorted(_canonical(r) for r in P.relators))


def finish_script(state: Presentation, goal: Presentation) -> Optional[list[Move]]:
    """Conjugations turning `state` into `goal`, or None if some relator pair is not conjugate."""
    if state.relator_count != goal.relator_count:
        return None
    tail: list[Move] = []
    for j, (r, s) in enumerate(zip(state.relators, goal.relators), start=1):
        if r == s:
            continue
        if len(r) % 2 != len(s) % 2 or _canonical(r) != _canonical(s):
            return None
        h = conjugator_between(r, s)
        if h is None:
            return None
        if h.letters:
            tail.append(Conjugate(j, h))
    return tail


def explore(start: Presentation, goal: Presentation, bounds: SearchBounds = SearchBounds()) -> SearchReport:
    """Breadth-first search from `start` towards `goal` within `bounds`."""
    require_rank2(start)
    require_rank2(goal)

    if start.relator_count != goal.relator_count:
        logger.warning(f"Relator counts differ ({start.relator_count} vs {goal.relator_count}); no Q*-script exists")
        return SearchReport(script=None, exhausted=True)

    tail = finish_script(start, goal)
    if tail is not None and apply_script(start, tail) == goal:
        return SearchReport(script=tail, exhausted=False)

    visited: set[tuple[Word, ...]] = {canonical_key(start)}
    frontier: list[tuple[Presentation, list[Move]]] = [(start, [])]
    report = SearchReport(script=None, exhausted=True)

    for depth in range(1, bounds.max_moves + 1):
        next_frontier: list[tuple[Presentation, list[Move]]] = []
        pruned = 0
        for state, script in frontier:
            for move in candidate_moves(state, bounds):
                # a conjugation keeps the key of its parent, which is already visited
                if isinstance(move, Conjugate):
                    continue
                nxt = apply_move(state, move)
                key = canonical_key(nxt)
                if key in visited:
                    continue
                visited.add(key)
                if any(len(r) > bounds.max_relator_len for r in nxt.relators):
                    pruned += 1
                    continue
                path = script + [move]
                tail = finish_script(nxt, goal)
                if tail is not None:
                    found = path + tail
                    if apply_script(start, found) == goal:
                        report.depth_rows.append(
                            {"depth": depth, "frontier": len(frontier), "new_states": len(next_frontier) + 1, "pruned": pruned}
                        )
                        report.script = found
                        report.exhausted = False
                        logger.info(f"Found a {len(found)}-move script at depth {depth}")
                        return report
                next_frontier.append((nxt, path))
        report.depth_rows.append(
            {"depth": depth, "frontier": len(frontier), "new_states": len(next_frontier), "pruned": pruned}
        )
        logger.info(f"Depth {depth}: {len(next_frontier)} new states, {pruned} pruned, {len(visited)} seen")
        frontier = next_frontier
        if not frontier:
            break

    logger.info(f"Search space exhausted after {len(visited)} states without reaching the goal")
    return report


def bounded_search(
    start: Presentation, goal: Presentation, bounds: SearchBounds = SearchBounds()
) -> Optional[list[Move]]:
    """A verified move script from `start` to `goal`, or None when none exists within `bounds`.

    Absence says nothing beyond the bounds.
    """
    return explore(start, goal, bounds).script
