"""Hypothesis strategies for words, polynomials, presentations and moves."""

from hypothesis import settings
from hypothesis import strategies as st

from src.groups.words import EMPTY, X, Y, Word, commutator, conjugate, multiply
from src.presentations.endomorphisms import IDENTITY, NIELSEN_KINDS, compose, nielsen
from src.presentations.moves import Conjugate, Invert, Mult
from src.presentations.presentation import Presentation
from src.rings.laurent import LaurentPoly

LETTERS = st.sampled_from([1, -1, 2, -2])
XY = commutator(X, Y)

# Suites that must see 1000 cases; a smaller loaded profile scales them down.
THOROUGH = settings(max_examples=1000 if settings().max_examples >= 100 else settings().max_examples)


def words(max_length: int = 60) -> st.SearchStrategy[Word]:
    """Reduced words; the raw letter lists may cancel, so lengths vary."""
    return st.lists(LETTERS, max_size=max_length).map(lambda codes: Word(tuple(codes)))


def raw_letters(max_length: int = 40) -> st.SearchStrategy[list[int]]:
    return st.lists(LETTERS, max_size=max_length)


@st.composite
def commutator_words(draw, max_conjugates: int = 6, max_conjugator_len: int = 6) -> Word:
    """Products of conjugates of [x,y]^(+-1)."""
    result = EMPTY
    for _ in range(draw(st.integers(0, max_conjugates))):
        base = XY if draw(st.booleans()) else ~XY
        result = multiply(result, conjugate(draw(words(max_conjugator_len)), base))
    return result


def laurent_polys(max_terms: int = 6, exponents: int = 3, coefficients: int = 9) -> st.SearchStrategy[LaurentPoly]:
    term = st.tuples(st.integers(-exponents, exponents), st.integers(-exponents, exponents))
    return st.dictionaries(term, st.integers(-coefficients, coefficients), max_size=max_terms).map(LaurentPoly)


def units() -> st.SearchStrategy[LaurentPoly]:
    return st.builds(
        lambda i, j, s: LaurentPoly({(i, j): s}),
        st.integers(-4, 4),
        st.integers(-4, 4),
        st.sampled_from([1, -1]),
    )


@st.composite
def cocommutative_presentations(draw, relators: int = 2) -> Presentation:
    return Presentation.rank2([draw(commutator_words(3, 3)) for _ in range(relators)])


@st.composite
def q_scripts(draw, relators: int = 2, max_length: int = 20):
    script = []
    for _ in range(draw(st.integers(0, max_length))):
        j = draw(st.integers(1, relators))
        kind = draw(st.sampled_from(["invert", "conj", "mult"] if relators > 1 else ["invert", "conj"]))
        if kind == "invert":
            script.append(Invert(j))
        elif kind == "conj":
            script.append(Conjugate(j, draw(words(3))))
        else:
            i = draw(st.sampled_from([k for k in range(1, relators + 1) if k != j]))
            script.append(Mult(j, i))
    return script


@st.composite
def nielsen_compositions(draw, max_length: int = 10):
    phi = IDENTITY
    for kind in draw(st.lists(st.sampled_from(NIELSEN_KINDS), max_size=max_length)):
        phi = compose(nielsen(kind), phi)
    return phi
