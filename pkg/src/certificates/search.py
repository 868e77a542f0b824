"""Iterative-deepening search for normal-closure certificates."""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Optional

from src.certificates.certificate import Certificate, CertificateStep, verify
from src.groups.words import EMPTY, Word, conjugate, conjugator_between, enumerate_words, exponent_vector, invert, multiply
from src.presentations.presentation import Presentation

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 3
DEFAULT_MAX_CONJUGATOR_LEN = 2


@dataclass(frozen=True)
class CertificateBounds:
    max_steps: int = DEFAULT_MAX_STEPS
    max_conjugator_len: int = DEFAULT_MAX_CONJUGATOR_LEN


def _exponent_reachable(P: Presentation, target: Word) -> bool:
    """False when every relator lies in [F,F] but the target does not."""
    rank = max(P.generator_count, target.rank)
    zero = (0,) * rank
    if all(exponent_vector(r, rank) == zero for r in P.relators):
        return exponent_vector(target, rank) == zero
    return True


def _closing_step(
    P: Presentation, remainder: Word, bounds: CertificateBounds
) -> Optional[CertificateStep]:
    """A single step u r_j^e u^-1 equal to `remainder`, if one is within bounds."""
    for j, r in enumerate(P.relators, start=1):
        if not r.letters:
            continue
        for sign, rel in ((1, r), (-1, invert(r))):
            h = conjugator_between(rel, remainder)
            if h is not None and len(h) <= bounds.max_conjugator_len:
                return CertificateStep(h, j, sign)
    return None


def search_certificate(
    P: Presentation, target: Word, bounds: CertificateBounds = CertificateBounds()
) -> Optional[Certificate]:
    """A certificate proving target lies in the normal closure of P's relators, or None.

    Certificates with fewer steps are tried first; within one length, steps
    run through conjugators in length-lex order, then relator index, then
    sign (+ before -). The last step of every candidate is solved directly by
    a conjugacy test instead of being enumerated; its conjugator obeys the
    same length bound as the others.
    """
    if not _exponent_reachable(P, target):
        logger.info(f"{target} has nonzero exponent sums; it cannot lie in the normal closure")
        return None
    if not target.letters:
        return Certificate()

    conjugators = list(enumerate_words(bounds.max_conjugator_len, rank=P.generator_count))
    steps = [
        CertificateStep(u, j, sign)
        for u in conjugators
        for j, r in enumerate(P.relators, start=1)
        if r.letters
        for sign in (1, -1)
    ]
    factors = {
        s: conjugate(s.conjugator, P.relator(s.relator_index) if s.sign > 0 else invert(P.relator(s.relator_index)))
        for s in steps
    }

    for length in range(1, bounds.max_steps + 1):
        tried = 0
        for prefix in product(steps, repeat=length - 1):
            word = EMPTY
            for s in prefix:
                word = multiply(word, factors[s])
            last = _closing_step(P, multiply(invert(word), target), bounds)
            tried += 1
            if last is None:
                continue
            cert = Certificate(prefix + (last,))
            if verify(cert, P, target):
                logger.info(f"Certificate with {length} steps found after {tried} candidates")
                return cert
        logger.debug(f"No certificate with {length} steps ({tried} prefixes)")
    logger.info(f"No certificate within {bounds}")
    return None
