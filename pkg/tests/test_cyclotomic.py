import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from burauforge.cyclotomic import (CyclotomicNumber, cyclotomic_polynomial,
                                   euler_phi, galois_conjugates,
                                   multiplicative_order, root_of_unity)

C = CyclotomicNumber


def rational(v):
    return C.from_rational(v)


def trial_order(x, bound):
    # independent oracle: successive powers compared against one
    power = x
    for n in range(1, bound + 1):
        if power == 1:
            return n
        power = power * x
    return None


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(7) == (1,) * 7


def test_root_of_unity_examples():
    assert root_of_unity(4, 2) == rational(-1)
    total = sum((root_of_unity(5, j) for j in range(1, 5)), rational(0))
    assert total == rational(-1)
    z12 = root_of_unity(12, 1)
    assert root_of_unity(12, 4) == z12 * z12 - 1  # x^4 mod (x^4 - x^2 + 1)
    assert root_of_unity(12, 4).conductor == 3


def test_arithmetic_examples():
    z8 = root_of_unity(8, 1)
    assert z8 * root_of_unity(8, 7) == 1
    assert rational(2).inverse() == Fraction(1, 2)
    assert root_of_unity(3, 1) * root_of_unity(4, 1) == root_of_unity(12, 7)


def test_inverse_of_zero_is_distinct_error():
    with pytest.raises(ZeroDivisionError):
        rational(0).inverse()


def test_multiplicative_order_examples():
    assert multiplicative_order(root_of_unity(10, 3)) == 10
    assert multiplicative_order(-root_of_unity(5, 1)) == 10
    assert multiplicative_order(rational(2)) is None
    with pytest.raises(ValueError):
        multiplicative_order(rational(0))


def test_order_consistency_sweep():
    for m in range(1, 61):
        for j in range(m):
            expected = m // math.gcd(m, j)
            assert multiplicative_order(root_of_unity(m, j)) == expected


def test_order_matches_trial_powers():
    rng = random.Random(11)
    for _ in range(40):
        m = rng.randint(1, 30)
        j = rng.randint(0, m - 1)
        x = root_of_unity(m, j)
        sign = rng.choice([1, -1])
        if sign < 0:
            x = -x
        assert multiplicative_order(x) == trial_order(x, 2 * m + 2)


def test_galois_conjugates():
    z4 = root_of_unity(4, 1)
    assert galois_conjugates(z4) == [z4, -z4]
    assert len(galois_conjugates(root_of_unity(5, 1))) == 4
    assert galois_conjugates(rational(3)) == [rational(3)]


def test_canonical_reduction():
    z12 = root_of_unity(12, 1)
    x = (z12 ** 4).canonical()
    assert x.conductor == 3
    assert x == root_of_unity(3, 1)
    # rationals always collapse to conductor 1
    y = z12 ** 12
    assert y.conductor == 1 and y == 1


def test_order_lookup_without_canonical_form():
    # a cube root stored at conductor 12 is still recognised
    z12 = root_of_unity(12, 1)
    x = z12 ** 4
    assert x.conductor == 12
    assert multiplicative_order(x) == 3
    assert multiplicative_order(-x) == 6


def test_equality_is_canonical_coefficient_comparison():
    # same value reached through different conductors
    a = root_of_unity(12, 4)
    b = root_of_unity(3, 1)
    assert a == b
    ca, cb = a.canonical(), b.canonical()
    assert ca.conductor == cb.conductor and ca.num == cb.num and ca.den == cb.den
    assert hash(a) == hash(b)


def test_serialisation_roundtrip():
    x = root_of_unity(12, 1) / 3 + rational(Fraction(1, 2))
    data = x.to_json()
    assert set(data) == {"conductor", "coeffs"}
    assert C.from_json(data) == x


def _random_element(rng, m):
    return C.from_coefficients(
        m, [Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            for _ in range(euler_phi(m))])


@pytest.mark.parametrize("m", [5, 7, 8, 12])
def test_ring_axioms_random(m):
    rng = random.Random(100 + m)
    for _ in range(200):
        x = _random_element(rng, m)
        y = _random_element(rng, m)
        z = _random_element(rng, m)
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert (x * y) * z == x * (y * z)
        if not x.is_zero:
            assert x * x.inverse() == 1
        assert (x + (-x)).num == (0,)


@given(st.integers(min_value=1, max_value=40), st.integers(), st.integers())
@settings(max_examples=80, deadline=None)
def test_root_exponents_multiply(m, i, j):
    assert root_of_unity(m, i) * root_of_unity(m, j) == root_of_unity(m, i + j)


@given(st.integers(min_value=1, max_value=24),
       st.integers(min_value=1, max_value=24))
@settings(max_examples=60, deadline=None)
def test_cross_conductor_product_order(m1, m2):
    x = root_of_unity(m1, 1) * root_of_unity(m2, 1)
    lcm = math.lcm(m1, m2)
    assert multiplicative_order(x) == lcm // math.gcd(lcm // m1 + lcm // m2, lcm)
