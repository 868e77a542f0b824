from src.certificates.certificate import Certificate, CertificateStep, verify
from src.certificates.search import CertificateBounds, search_certificate
from src.data.catalog import P0, Q, R1, R2
from src.groups.grammar import parse_word
from src.groups.words import EMPTY, X, Y, commutator, conjugate, invert, multiply
from src.presentations.presentation import Presentation

XY = commutator(X, Y)


def test_relator_itself():
    assert search_certificate(P0, XY) == Certificate.of([(EMPTY, 1, 1)])


def test_inverse_relator():
    assert search_certificate(P0, invert(XY)) == Certificate.of([(EMPTY, 1, -1)])


def test_conjugated_relator():
    target = conjugate(parse_word("xy"), XY)
    cert = search_certificate(P0, target)
    assert cert is not None and len(cert) == 1
    assert verify(cert, P0, target)


def test_two_steps():
    target = multiply(XY, conjugate(Y, XY))
    cert = search_certificate(P0, target)
    assert cert is not None and len(cert) == 2
    assert verify(cert, P0, target)


def test_product_of_q_relators():
    cert = search_certificate(Q, multiply(R1, R2))
    assert cert == Certificate((CertificateStep(EMPTY, 1, 1), CertificateStep(EMPTY, 2, 1)))


def test_empty_target():
    assert search_certificate(Q, EMPTY) == Certificate()


def test_exponent_sums_rule_out_membership():
    assert search_certificate(P0, X) is None


def test_non_commutator_relators_skip_the_prefilter():
    P = Presentation.rank2([X])
    cert = search_certificate(P, parse_word("yxy^-1"))
    assert cert == Certificate.of([(Y, 1, 1)])


def test_commutator_needs_more_than_two_steps_over_q():
    assert search_certificate(Q, XY, CertificateBounds(max_steps=2, max_conjugator_len=2)) is None


def test_conjugator_bound_is_respected():
    target = conjugate(parse_word("xxx"), XY)
    assert search_certificate(P0, target, CertificateBounds(max_steps=1, max_conjugator_len=2)) is None
    cert = search_certificate(P0, target, CertificateBounds(max_steps=1, max_conjugator_len=3))
    assert cert is not None and verify(cert, P0, target)
