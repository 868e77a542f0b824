"""Seeded random words, polynomials, presentations and move scripts."""

import logging
from typing import Optional

import numpy as np

from src.certificates.certificate import Certificate, CertificateStep
from src.groups.words import EMPTY, X, Y, Word, commutator, conjugate, multiply
from src.presentations.endomorphisms import IDENTITY, NIELSEN_KINDS, Endomorphism, compose, nielsen
from src.presentations.moves import Conjugate, Invert, Move, Mult
from src.presentations.presentation import Presentation
from src.rings.laurent import LaurentPoly
from src.rings.matrices import LaurentMatrix

logger = logging.getLogger(__name__)

MAX_CONJUGATES = 6
MAX_CONJUGATOR_LEN = 6
MAX_POLY_TERMS = 6
EXPONENT_RANGE = 3
COEFFICIENT_RANGE = 5

_ALPHABET = np.array([1, -1, 2, -2])
_XY = commutator(X, Y)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_word(rng: np.random.Generator, max_length: int) -> Word:
    """A reduced word of length at most `max_length`, built letter by letter without cancellation."""
    length = int(rng.integers(0, max_length + 1))
    letters: list[int] = []
    for _ in range(length):
        code = int(rng.choice(_ALPHABET))
        while letters and letters[-1] == -code:
            code = int(rng.choice(_ALPHABET))
        letters.append(code)
    return Word(tuple(letters))


def random_commutator_word(
    rng: np.random.Generator,
    max_conjugates: int = MAX_CONJUGATES,
    max_conjugator_len: int = MAX_CONJUGATOR_LEN,
) -> Word:
    """A product of conjugates of [x,y]^(+-1); always in [F,F]."""
    result = EMPTY
    for _ in range(int(rng.integers(0, max_conjugates + 1))):
        base = _XY if rng.integers(0, 2) else ~_XY
        result = multiply(result, conjugate(random_word(rng, max_conjugator_len), base))
    return result


def random_laurent(
    rng: np.random.Generator,
    max_terms: int = MAX_POLY_TERMS,
    exponent_range: int = EXPONENT_RANGE,
    coefficient_range: int = COEFFICIENT_RANGE,
) -> LaurentPoly:
    n = int(rng.integers(0, max_terms + 1))
    exps = rng.integers(-exponent_range, exponent_range + 1, size=(n, 2))
    coeffs = rng.integers(-coefficient_range, coefficient_range + 1, size=n)
    acc: dict[tuple[int, int], int] = {}
    for (i, j), c in zip(exps.tolist(), coeffs.tolist()):
        acc[(i, j)] = acc.get((i, j), 0) + c
    return LaurentPoly(acc)


def random_matrix(rng: np.random.Generator, n: int, max_terms: int = 2) -> LaurentMatrix:
    return LaurentMatrix(n, n, tuple(random_laurent(rng, max_terms, 1, 2) for _ in range(n * n)))


def random_cocommutative(rng: np.random.Generator, relators: int = 2) -> Presentation:
    return Presentation.rank2(random_commutator_word(rng, 3, 3) for _ in range(relators))


def random_q_script(rng: np.random.Generator, length: int, relators: int, max_conjugator_len: int = 3) -> list[Move]:
    """Random Q-moves (mult, invert, conj) on a presentation with `relators` relators."""
    script: list[Move] = []
    for _ in range(length):
        kind = int(rng.integers(0, 3 if relators > 1 else 2))
        j = int(rng.integers(1, relators + 1))
        if kind == 0:
            script.append(Invert(j))
        elif kind == 1:
            script.append(Conjugate(j, random_word(rng, max_conjugator_len)))
        else:
            i = int(rng.choice([k for k in range(1, relators + 1) if k != j]))
            script.append(Mult(j, i))
    return script


def random_nielsen_composition(rng: np.random.Generator, max_length: int = 10) -> Endomorphism:
    phi = IDENTITY
    for _ in range(int(rng.integers(0, max_length + 1))):
        phi = compose(nielsen(str(rng.choice(NIELSEN_KINDS))), phi)
    return phi


def random_certificate(
    rng: np.random.Generator, relators: int, max_steps: int = 6, max_conjugator_len: int = 4
) -> Certificate:
    steps = [
        CertificateStep(
            random_word(rng, max_conjugator_len),
            int(rng.integers(1, relators + 1)),
            1 if rng.integers(0, 2) else -1,
        )
        for _ in range(int(rng.integers(0, max_steps + 1)))
    ]
    return Certificate(tuple(steps))
