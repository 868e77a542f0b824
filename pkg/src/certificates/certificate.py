"""Conjugate-product certificates for membership in the normal closure of relators.

A certificate lists steps (u, j, e) and stands for the product of
u r_j^e u^-1 in step order. Checking one is a matter of multiplying out.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

from src.errors import CertificateIndexError, InvalidFactorError, PreconditionError
from src.groups.words import EMPTY, Word, conjugate, exponent_sums, multiply, require_commutator_element
from src.invariants.winding import lambda_vector, winding_invariant
from src.presentations.presentation import Presentation, is_cocommutative
from src.rings.laurent import ZERO, LaurentPoly, monomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CertificateStep:
    conjugator: Word
    relator_index: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidFactorError(f"Step sign must be +1 or -1, got {self.sign}")
        if self.relator_index < 1:
            raise CertificateIndexError(f"Relator indices are 1-based, got {self.relator_index}")

    def inverse(self) -> "CertificateStep":
        return CertificateStep(self.conjugator, self.relator_index, -self.sign)

    def conjugated(self, g: Word) -> "CertificateStep":
        return CertificateStep(multiply(g, self.conjugator), self.relator_index, self.sign)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'} {self.relator_index} {self.conjugator}"


@dataclass(frozen=True)
class Certificate:
    """Ordered steps; the empty certificate stands for the identity."""

    steps: tuple[CertificateStep, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    @classmethod
    def of(cls, triples: Iterable[tuple[Word, int, int]]) -> "Certificate":
        return cls(tuple(CertificateStep(u, j, e) for u, j, e in triples))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[CertificateStep]:
        return iter(self.steps)

    def __add__(self, other: "Certificate") -> "Certificate":
        """Certificate of the product of the two certified words."""
        return Certificate(self.steps + other.steps)

    def inverse(self) -> "Certificate":
        """Certificate of the inverse word: steps reversed, signs flipped."""
        return Certificate(tuple(s.inverse() for s in reversed(self.steps)))

    def conjugated(self, g: Word) -> "Certificate":
        """Certificate of g w g^-1."""
        return Certificate(tuple(s.conjugated(g) for s in self.steps))

    def max_index(self) -> int:
        return max((s.relator_index for s in self.steps), default=0)


def _check_indices(c: Certificate, P: Presentation) -> None:
    for n, step in enumerate(c.steps, start=1):
        if step.relator_index > P.relator_count:
            raise CertificateIndexError(
                f"Step {n} uses r_{step.relator_index}; the presentation has {P.relator_count} relators"
            )


def expand(c: Certificate, P: Presentation) -> Word:
    """The reduced product of u r_j^e u^-1 over the steps.

    Raises:
        CertificateIndexError: If a step refers to a relator P lacks.
    """
    _check_indices(c, P)
    result = EMPTY
    for step in c.steps:
        r = P.relator(step.relator_index)
        result = multiply(result, conjugate(step.conjugator, r if step.sign > 0 else ~r))
    return result


def verify(c: Certificate, P: Presentation, target: Word) -> bool:
    """True iff `c` expands to `target` over P, which proves target lies in the normal closure."""
    try:
        word = expand(c, P)
    except CertificateIndexError as e:
        logger.warning(f"Certificate rejected: {e}")
        return False
    if word != target:
        logger.debug(f"Certificate expands to {word}, not {target}")
        return False
    return True


def lambda_combination(c: Certificate, P: Presentation) -> LaurentPoly:
    """Sum of e * X^k Y^l * P_{r_j} over the steps, (k, l) the exponent sums of u."""
    _check_indices(c, P)
    lam = lambda_vector(P)
    total = ZERO
    for step in c.steps:
        k, l = exponent_sums(step.conjugator)
        total = total + monomial(k, l, step.sign) * lam[step.relator_index - 1]
    return total


def lambda_consistency(c: Certificate, P: Presentation, target: Word) -> bool:
    """The winding-invariant shadow of `verify`: P_target against the combination of the P_{r_j}.

    Every valid certificate passes; failing proves the certificate wrong.

    Raises:
        PreconditionError: If P is not cocommutative.
        NotInCommutatorSubgroupError: If target is not in [F,F].
    """
    if not is_cocommutative(P):
        raise PreconditionError("lambda_consistency needs a cocommutative presentation")
    require_commutator_element(target)
    return winding_invariant(target) == lambda_combination(c, P)
