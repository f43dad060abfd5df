import random

import pytest

from nccatalan import (
    NCPoly,
    bar,
    catalan,
    classical_catalan,
    eps,
    pi,
    shift,
    sigma,
    word_from_letters,
)
from conftest import poly, w


def x(k, e=1):
    return NCPoly.x(k, e)


def random_poly(rng, max_terms=4):
    terms = []
    for _ in range(max_terms):
        letters = [(rng.randrange(5), rng.choice((-2, -1, 1, 2)))
                   for _ in range(rng.randrange(5))]
        terms.append((word_from_letters(letters), rng.randrange(-4, 5)))
    return NCPoly(terms)


def test_add_cancels():
    p = poly(w((2, 1)), w((1, 1), (0, -1), (1, 1)))
    assert p + (-x(2)) == poly(w((1, 1), (0, -1), (1, 1)))


def test_recursion_term():
    # C1 * x0^-1 * T(C0) is the nested staircase monomial
    assert catalan(1) * x(0, -1) * shift(catalan(0), 1) == poly(w((1, 1), (0, -1), (1, 1)))


def test_unit_is_neutral():
    rng = random.Random(7)
    p = random_poly(rng)
    assert p * NCPoly.one() == p
    assert NCPoly.one() * p == p
    assert p + NCPoly.zero() == p


def test_int_operands():
    p = x(1) + 2 * x(0)
    assert p - x(1) == 2 * x(0)
    assert 1 + NCPoly.zero() == NCPoly.one()
    assert (p * 0) == 0


def test_pow():
    p = x(0) + x(1)
    assert p**0 == NCPoly.one()
    assert p**2 == p * p
    with pytest.raises(ValueError):
        p ** (-1)


def test_bar_examples():
    assert bar(poly(w((2, 1), (0, -1), (1, 1)))) == poly(w((1, 1), (0, -1), (2, 1)))
    assert bar(catalan(2)) == catalan(2)


def test_bar_antiautomorphism_random():
    rng = random.Random(11)
    for _ in range(100):
        p, q = random_poly(rng), random_poly(rng)
        assert bar(bar(p)) == p
        assert bar(p * q) == bar(q) * bar(p)


def test_shift_examples():
    assert shift(poly(w((0, -1), (1, 1))), 1) == poly(w((1, -1), (2, 1)))
    assert shift(catalan(1), 1) == x(2)
    assert catalan(2) == shift(catalan(1), 1) + catalan(1) * x(0, -1) * shift(catalan(0), 1)
    assert shift(NCPoly.one(), 5) == NCPoly.one()


def test_shift_negative_annihilates():
    p = x(0) + x(2)
    assert shift(p, -1) == x(1)
    assert shift(p, -3) == NCPoly.zero()
    assert shift(shift(p, 2), -2) == p


def test_eps():
    assert eps(catalan(3)) == 5
    assert eps(NCPoly.zero()) == 0
    assert eps(x(3, -2)) == 1  # group elements all map to 1
    from nccatalan import truncated

    assert eps(truncated(4, 2)) == 9


def test_sigma_examples():
    assert sigma(x(2)) == poly(w((0, 2), (1, 2)))
    assert sigma(catalan(2)) == poly(w((0, 2), (1, 2)), w((0, 1), (1, 1), (0, 1), (1, 1)))
    assert sigma(x(0)) == NCPoly.one()
    # group-inverse image on negative exponents
    assert sigma(x(2, -1)) == poly(w((1, -2), (0, -2)))
    assert sigma(x(2, -1)) * sigma(x(2)) == NCPoly.one()


def test_pi_examples():
    assert pi(x(1)) == x(1)
    assert pi(x(2)) == poly(w((1, 1), (0, -1), (1, 1)))
    assert pi(catalan(2)) == 2 * pi(x(2))
    assert pi(x(2, -1)) * pi(x(2)) == NCPoly.one()


def test_homomorphisms_random():
    rng = random.Random(23)
    x0, x1 = x(0), x(1)
    for _ in range(60):
        p, q = random_poly(rng), random_poly(rng)
        assert eps(p + q) == eps(p) + eps(q)
        assert eps(p * q) == eps(p) * eps(q)
        for f in (sigma, pi, lambda t: shift(t, 1)):
            assert f(p + q) == f(p) + f(q)
            assert f(p * q) == f(p) * f(q)
        assert shift(shift(p, 2), 3) == shift(p, 5)


def test_sigma_shift_rule_on_alternating():
    rng = random.Random(31)
    x0, x1 = x(0), x(1)
    for _ in range(200):
        terms = []
        for _ in range(3):
            s = rng.choice((1, 3, 5))
            letters = [(rng.randrange(5), 1 if t % 2 == 0 else -1) for t in range(s)]
            terms.append((word_from_letters(letters), rng.randrange(-3, 4)))
        p = NCPoly(terms)
        assert sigma(shift(p, 1)) == x0 * sigma(p) * x1


def test_pi_catalan_scaling():
    for n in range(8):
        assert pi(catalan(n)) == classical_catalan(n) * pi(x(n))


def test_equality_and_hash():
    a = poly(w((1, 1)), w((2, 1)))
    b = x(2) + x(1)
    assert a == b and hash(a) == hash(b)
    assert a != x(1)
