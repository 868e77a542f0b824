from src.analysis.sampling import (
    make_rng,
    random_certificate,
    random_cocommutative,
    random_commutator_word,
    random_laurent,
    random_matrix,
    random_nielsen_composition,
    random_q_script,
    random_word,
)
from src.certificates.certificate import expand, lambda_consistency, verify
from src.groups.words import is_commutator_element
from src.invariants.winding import lambda_vector
from src.presentations.endomorphisms import is_automorphism_rank2
from src.presentations.moves import apply_script, script_lambda_action
from src.presentations.presentation import is_cocommutative
from src.rings.matrices import LaurentMatrix, mul


def test_same_seed_same_samples():
    a, b = make_rng(7), make_rng(7)
    assert [random_word(a, 10) for _ in range(20)] == [random_word(b, 10) for _ in range(20)]
    assert random_laurent(a) == random_laurent(b)


def test_random_words_are_bounded():
    rng = make_rng(0)
    for _ in range(200):
        assert len(random_word(rng, 5)) <= 5


def test_random_commutator_words():
    rng = make_rng(1)
    for _ in range(100):
        assert is_commutator_element(random_commutator_word(rng))


def test_random_matrix_shape():
    assert random_matrix(make_rng(2), 3).shape == (3, 3)


def test_seeded_lambda_equivariance():
    rng = make_rng(3)
    for _ in range(50):
        P = random_cocommutative(rng)
        script = random_q_script(rng, 6, P.relator_count)
        moved = apply_script(P, script)
        assert is_cocommutative(moved)
        column = LaurentMatrix.from_rows([[p] for p in lambda_vector(P)])
        assert lambda_vector(moved) == mul(script_lambda_action(script, 2), column).column(0)


def test_seeded_nielsen_compositions():
    rng = make_rng(4)
    for _ in range(50):
        assert is_automorphism_rank2(random_nielsen_composition(rng))


def test_seeded_certificates_verify():
    rng = make_rng(5)
    for _ in range(50):
        P = random_cocommutative(rng)
        cert = random_certificate(rng, P.relator_count)
        target = expand(cert, P)
        assert verify(cert, P, target)
        assert lambda_consistency(cert, P, target)
