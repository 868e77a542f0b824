import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.data.catalog import P0, Q
from src.errors import InvalidMoveError
from src.groups.grammar import parse_word
from src.groups.words import EMPTY, X, Y, Word, commutator, conjugate, invert, multiply
from src.invariants.winding import lambda_vector
from src.presentations.endomorphisms import Endomorphism, nielsen
from src.presentations.moves import (
    Automorph,
    Conjugate,
    Destabilize,
    Invert,
    Mult,
    Stabilize,
    apply_move,
    apply_script,
    automorphism_lambda_certificate,
    automorphism_unit,
    move_lambda_action,
    script_lambda_action,
    transform_lambda,
)
from src.presentations.presentation import Presentation, is_cocommutative
from src.rings.ge import is_elementary_matrix, is_unit_diagonal_matrix, product
from src.rings.laurent import ONE, ZERO, is_unit, monomial
from src.rings.laurent import X as RX
from src.rings.laurent import Y as RY
from src.rings.matrices import LaurentMatrix, det, diagonal, identity, mul
from strategies import THOROUGH, cocommutative_presentations, nielsen_compositions, q_scripts

XY = commutator(X, Y)


def lambda_column(lam) -> LaurentMatrix:
    return LaurentMatrix.from_rows([[p] for p in lam], cols=1)


def test_q_moves_on_trivial_presentation():
    assert apply_move(P0, Mult(2, 1)).relators == (XY, XY)
    assert apply_move(P0, Invert(1)).relators == (invert(XY), EMPTY)
    g = parse_word("xy^-1")
    assert apply_move(P0, Conjugate(1, g)).relators == (conjugate(g, XY), EMPTY)


def test_automorph_move():
    swapped = apply_move(P0, Automorph(nielsen("swap")))
    assert swapped.relators == (commutator(Y, X), EMPTY)


def test_invalid_moves():
    with pytest.raises(InvalidMoveError):
        apply_move(P0, Mult(1, 1))
    with pytest.raises(InvalidMoveError):
        apply_move(P0, Mult(1, 3))
    with pytest.raises(InvalidMoveError):
        apply_move(P0, Invert(0))
    with pytest.raises(InvalidMoveError):
        apply_move(P0, Conjugate(1, Word((3,))))
    with pytest.raises(InvalidMoveError):
        apply_move(P0, Automorph(Endomorphism(parse_word("x^2"), Y)))


def test_script_errors_name_the_step():
    with pytest.raises(InvalidMoveError, match="Step 2"):
        apply_script(P0, [Invert(1), Invert(5)])


def test_stabilize_and_destabilize():
    stabilized = apply_move(P0, Stabilize())
    assert stabilized.generator_count == 3
    assert stabilized.relators == (XY, EMPTY, Word((3,)))
    assert apply_move(stabilized, Destabilize()) == P0
    assert apply_script(stabilized, [Invert(3), Destabilize()]) == P0


def test_destabilize_preconditions():
    with pytest.raises(InvalidMoveError):
        apply_move(P0, Destabilize())
    with pytest.raises(InvalidMoveError):
        apply_move(Presentation(1, (X,)), Destabilize())
    stabilized = apply_move(P0, Stabilize())
    with pytest.raises(InvalidMoveError):
        apply_script(stabilized, [Mult(1, 3), Destabilize()])
    with pytest.raises(InvalidMoveError):
        apply_script(stabilized, [Conjugate(3, X), Destabilize()])


def test_automorph_needs_rank_two():
    stabilized = apply_move(P0, Stabilize())
    with pytest.raises(InvalidMoveError):
        apply_move(stabilized, Automorph(nielsen("swap")))


def test_lambda_action_examples():
    assert move_lambda_action(Invert(1), 2) == diagonal([-1, 1])
    assert move_lambda_action(Conjugate(2, parse_word("xy^-1")), 2) == diagonal([1, RX * RY ** -1])
    assert move_lambda_action(Mult(2, 1), 2) == LaurentMatrix.from_rows([[1, 0], [1, 1]])
    assert move_lambda_action(Automorph(nielsen("swap")), 2) == identity(2).scale(-1)


def test_lambda_action_rejects_rank_changes():
    with pytest.raises(InvalidMoveError):
        move_lambda_action(Stabilize(), 2)
    with pytest.raises(InvalidMoveError):
        move_lambda_action(Mult(3, 1), 2)


def test_lambda_action_rejects_non_automorphisms():
    phi = Endomorphism(X, multiply(Y, commutator(XY, commutator(invert(Y), X))))
    assert automorphism_unit(phi) == ONE
    with pytest.raises(InvalidMoveError):
        apply_move(P0, Automorph(phi))
    with pytest.raises(InvalidMoveError):
        move_lambda_action(Automorph(phi), 2)


def test_automorphism_units():
    assert automorphism_unit(nielsen("swap")) == -ONE
    assert automorphism_unit(nielsen("shear")) == ONE
    assert automorphism_unit(nielsen("invert_x")) == -(RX ** -1)


def test_automorph_acts_semilinearly_on_q():
    phi = nielsen("shear")
    moved = apply_move(Q, Automorph(phi))
    assert lambda_vector(moved) == transform_lambda(Automorph(phi), lambda_vector(Q))
    assert lambda_vector(moved) != lambda_vector(Q)


def test_script_action_orders_last_move_leftmost():
    script = [Mult(2, 1), Invert(1)]
    expected = mul(move_lambda_action(Invert(1), 2), move_lambda_action(Mult(2, 1), 2))
    assert script_lambda_action(script, 2) == expected
    assert lambda_vector(apply_script(P0, script)) == (-ONE, ONE)


def test_automorphism_lambda_certificate():
    phi = nielsen("invert_x")
    factors = automorphism_lambda_certificate(phi)
    image = apply_move(P0, Automorph(phi))
    assert product(factors, 2).column(0) == lambda_vector(image)
    with pytest.raises(InvalidMoveError):
        automorphism_lambda_certificate(Endomorphism(X, X))


def test_move_printing():
    assert str(Mult(2, 1)) == "mult 2 1"
    assert str(Conjugate(1, parse_word("xy^-1"))) == "conj 1 xy^-1"
    assert str(Automorph(nielsen("shear"))) == "auto xy ; y"


@THOROUGH
@given(cocommutative_presentations(), q_scripts(2, 20))
def test_lambda_follows_script_action(P, script):
    after = lambda_vector(apply_script(P, script))
    predicted = mul(script_lambda_action(script, 2), lambda_column(lambda_vector(P))).column(0)
    assert after == predicted


@given(cocommutative_presentations(), q_scripts(2, 10), nielsen_compositions(4))
def test_q_star_moves_preserve_cocommutativity(P, script, phi):
    moved = apply_move(apply_script(P, script), Automorph(phi))
    assert is_cocommutative(moved)
    assert lambda_vector(moved) == transform_lambda(Automorph(phi), lambda_vector(apply_script(P, script)))


@given(cocommutative_presentations(3), st.integers(1, 3), st.integers(1, 3))
def test_single_mult_matches_action(P, j, i):
    if i == j:
        return
    lam = lambda_vector(P)
    assert lambda_vector(apply_move(P, Mult(j, i))) == transform_lambda(Mult(j, i), lam)
    assert transform_lambda(Mult(j, i), lam)[j - 1] == lam[j - 1] + lam[i - 1]


def test_transform_lambda_conjugate_shifts():
    lam = (ONE, ZERO)
    assert transform_lambda(Conjugate(1, parse_word("x^2y")), lam) == (monomial(2, 1), ZERO)


@given(st.one_of(q_scripts(3, 1).filter(bool).map(lambda s: s[0]), nielsen_compositions(6).map(Automorph)))
def test_move_actions_are_ge_generators(m):
    A = move_lambda_action(m, 3)
    assert is_elementary_matrix(A) or is_unit_diagonal_matrix(A)
    assert is_unit(det(A))
