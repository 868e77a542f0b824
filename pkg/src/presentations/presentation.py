"""Finite presentations <x_1, ..., x_n | r_1, ..., r_m>."""

from dataclasses import dataclass
from typing import Iterable

from src.errors import RankError
from src.groups.words import Word, generator_name, is_commutator_element


@dataclass(frozen=True)
class Presentation:
    """Generator count plus an ordered tuple of relators."""

    generator_count: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        if self.generator_count < 1:
            raise RankError(f"A presentation needs at least one generator, got {self.generator_count}")
        relators = tuple(self.relators)
        object.__setattr__(self, "relators", relators)
        for j, r in enumerate(relators, start=1):
            if r.rank > self.generator_count:
                raise RankError(f"Relator r_{j} = {r} uses a generator beyond x_{self.generator_count}")

    @classmethod
    def rank2(cls, relators: Iterable[Word]) -> "Presentation":
        return cls(2, tuple(relators))

    @property
    def relator_count(self) -> int:
        return len(self.relators)

    def relator(self, j: int) -> Word:
        """The 1-based relator r_j."""
        return self.relators[j - 1]

    def with_relator(self, j: int, word: Word) -> "Presentation":
        relators = list(self.relators)
        relators[j - 1] = word
        return Presentation(self.generator_count, tuple(relators))

    def __str__(self) -> str:
        gens = ", ".join(generator_name(i) for i in range(1, self.generator_count + 1))
        rels = ", ".join(str(r) for r in self.relators)
        return f"<{gens} | {rels}>"


def require_rank2(P: Presentation) -> None:
    if P.generator_count != 2:
        raise RankError(f"Expected a presentation on x, y; got {P.generator_count} generators")


def is_cocommutative(P: Presentation) -> bool:
    """True iff P is on x, y and every relator lies in [F,F]."""
    require_rank2(P)
    return all(is_commutator_element(r) for r in P.relators)
