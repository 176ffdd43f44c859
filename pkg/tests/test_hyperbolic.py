import json
from fractions import Fraction

import pytest

from burauforge.burau import pair_word_eval, squared_images
from burauforge.cyclotomic import root_of_unity
from burauforge.hyperbolic import (PAIR_CONTEXT, PingPongCertificate,
                                   invariant_form, ping_pong_certify,
                                   short_relation_oracle, verify_certificate)
from burauforge.words import parse_word, word

Q14 = root_of_unity(14, 1)
X_WORD = parse_word(PAIR_CONTEXT, "A B A^-1 B^-1")
Y_WORD = parse_word(PAIR_CONTEXT, "A^2 B A^-2 B^-1")


def dagger(m):
    return m.transpose_conjugate()


def test_form_exists_and_is_exactly_invariant():
    form = invariant_form(Q14, 1)
    assert form is not None
    a, b, c = squared_images(Q14)
    assert dagger(a) * form.matrix * a == form.matrix
    assert dagger(b) * form.matrix * b == form.matrix
    # the centre is scalar of norm one, so it preserves every form exactly
    assert (c[0, 0] * c[0, 0].conjugate()) == 1
    assert dagger(c) * form.matrix * c == form.matrix


def test_form_invariance_on_random_words():
    import random
    rng = random.Random(71)
    form = invariant_form(Q14, 1)
    a, b, _ = squared_images(Q14)
    for _ in range(50):
        w = word(PAIR_CONTEXT, [(rng.randint(0, 1), rng.choice([-2, -1, 1, 2]))
                                for _ in range(4)])
        m = pair_word_eval(w, a, b)
        assert dagger(m) * form.matrix * m == form.matrix


def test_order14_has_indefinite_conjugate():
    signatures = {j: invariant_form(Q14, j).signature for j in range(1, 7)}
    assert "indefinite" in signatures.values()
    assert "definite" in signatures.values()


def test_order4_definite_everywhere():
    q = root_of_unity(4, 1)
    for j in (1, 3):
        form = invariant_form(q, j)
        assert form is not None and form.signature == "definite"


def test_parabolic_parameter_gets_scaled_symplectic_form():
    # at q = 1 the image is a parabolic pair of determinant one; it
    # preserves i times the symplectic form, which is indefinite
    from burauforge.cyclotomic import CyclotomicNumber
    form = invariant_form(CyclotomicNumber.from_rational(1), 1)
    assert form is not None and form.signature == "indefinite"
    a, b, _ = squared_images(CyclotomicNumber.from_rational(1))
    assert dagger(a) * form.matrix * a == form.matrix
    assert dagger(b) * form.matrix * b == form.matrix


def test_oracle_dependent_pair():
    a = parse_word(PAIR_CONTEXT, "A")
    a2 = parse_word(PAIR_CONTEXT, "A^2")
    witness = short_relation_oracle(a, a2, Q14, 3)
    assert witness is not None and witness.length() <= 3


def test_oracle_order14_clear_at_length_6():
    assert short_relation_oracle(X_WORD, Y_WORD, Q14, 6) is None


def test_oracle_finite_image_finds_witness():
    q5 = root_of_unity(5, 1)
    witness = short_relation_oracle(X_WORD, Y_WORD, q5, 20)
    assert witness is not None and witness.length() <= 20
    # the reported witness really is a relation
    a, b, _ = squared_images(q5)
    x = pair_word_eval(X_WORD, a, b)
    y = pair_word_eval(Y_WORD, a, b)
    from burauforge.words import evaluate_word
    from burauforge.burau import CycloMatrix
    m = evaluate_word(witness, {"x": x, "y": y}, CycloMatrix.identity(2))
    assert m.is_scalar()


def test_oracle_finite_image_other_orders():
    for n in (3, 4, 6):
        q = root_of_unity(n, 1)
        assert short_relation_oracle(X_WORD, Y_WORD, q, 20) is not None


@pytest.fixture(scope="module")
def certificate():
    cert = ping_pong_certify(X_WORD, Y_WORD, Q14, 1)
    assert cert is not None
    return cert


def test_certificate_found_and_verified(certificate):
    assert certificate.power_x <= 4 and certificate.power_y <= 4
    assert certificate.margin > 0
    assert verify_certificate(certificate)


def test_certificate_roundtrip(certificate):
    data = json.loads(json.dumps(certificate.to_json()))
    again = PingPongCertificate.from_json(data)
    assert verify_certificate(again)


def test_tampered_certificate_rejected(certificate):
    arcs = dict(certificate.arcs)
    s, e = arcs["x_att"]
    arcs["x_att"] = ((s + Fraction(1, 5)) % 1, (e + Fraction(1, 5)) % 1)
    bad = PingPongCertificate(
        q=certificate.q, embedding=certificate.embedding,
        x_word=certificate.x_word, y_word=certificate.y_word,
        power_x=certificate.power_x, power_y=certificate.power_y,
        arcs=arcs, margin=certificate.margin, precision=certificate.precision)
    assert not verify_certificate(bad)


def test_zero_margin_certificate_rejected(certificate):
    arcs = dict(certificate.arcs)
    s, _ = arcs["x_att"]
    _, e_rep = arcs["x_rep"]
    arcs["x_att"] = (e_rep, arcs["x_att"][1])  # glue the arcs together
    bad = PingPongCertificate(
        q=certificate.q, embedding=certificate.embedding,
        x_word=certificate.x_word, y_word=certificate.y_word,
        power_x=certificate.power_x, power_y=certificate.power_y,
        arcs=arcs, margin=certificate.margin, precision=certificate.precision)
    assert not verify_certificate(bad)


@pytest.mark.parametrize("order,embedding", [(16, 1), (18, 1), (10, 1)])
def test_certificates_at_other_orders(order, embedding):
    q = root_of_unity(order, 1)
    cert = ping_pong_certify(X_WORD, Y_WORD, q, embedding)
    assert cert is not None and cert.margin > 0
    assert verify_certificate(cert)


def test_certify_rejects_trivial_generator():
    ident = parse_word(PAIR_CONTEXT, "1")
    with pytest.raises(ValueError):
        ping_pong_certify(ident, Y_WORD, Q14, 1)


def test_certify_rejects_definite_embedding():
    with pytest.raises(ValueError):
        ping_pong_certify(X_WORD, Y_WORD, Q14, 2)


def test_certify_rejects_finite_order_generator():
    a = parse_word(PAIR_CONTEXT, "A")  # projective order 7
    with pytest.raises(ValueError):
        ping_pong_certify(a, Y_WORD, Q14, 1)
