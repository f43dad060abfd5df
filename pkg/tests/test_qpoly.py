import json
import random

import pytest

from nccatalan import (
    NCPoly,
    QPoly,
    binom_first,
    binom_second,
    catalan,
    chi_q,
    det_bareiss,
    eps,
    exact_div,
    format_qpoly,
    gh_cnk,
    parse_qpoly,
    q_binomial,
    q_hankel_det,
    q_int,
    qpoly_from_obj,
    qpoly_to_obj,
    shift,
    truncated_tilde,
)
from nccatalan.catalan import _binom
from nccatalan.qpoly import latex_qpoly


def qp(*pairs):
    return QPoly(dict(pairs))


def test_arithmetic():
    one_plus_q = qp((0, 1), (1, 1))
    assert one_plus_q * one_plus_q == qp((0, 1), (1, 2), (2, 1))
    assert qp((-1, 1)) * qp((1, 1)) == QPoly.one()
    assert one_plus_q - one_plus_q == QPoly.zero()
    assert 2 * one_plus_q == qp((0, 2), (1, 2))
    assert one_plus_q**3 == qp((0, 1), (1, 3), (2, 3), (3, 1))
    assert one_plus_q.eval_at(1) == 2


def test_exact_div():
    q2m1 = qp((2, 1), (0, -1))
    qm1 = qp((1, 1), (0, -1))
    assert exact_div(q2m1, qm1) == qp((1, 1), (0, 1))
    a = qp((3, 2), (1, 4)) * qp((2, 5), (0, -3))
    assert exact_div(a, qp((3, 2), (1, 4))) == qp((2, 5), (0, -3))
    with pytest.raises(ValueError):
        exact_div(qp((1, 1), (0, 1)), qp((1, 2)))
    with pytest.raises(ValueError):
        exact_div(QPoly.one(), QPoly.zero())
    # Laurent shifts divide out exactly
    assert exact_div(qp((-2, 3)), qp((-5, 3))) == qp((3, 1))


def test_q_int_and_binomial():
    assert q_int(3) == qp((0, 1), (1, 1), (2, 1))
    assert q_int(0) == QPoly.zero()
    assert q_binomial(2, 1) == qp((0, 1), (1, 1))
    assert q_binomial(4, 2) == qp((0, 1), (1, 1), (2, 2), (3, 1), (4, 1))
    assert q_binomial(3, 5) == QPoly.zero()
    for n in range(9):
        for k in range(n + 1):
            g = q_binomial(n, k)
            assert g == q_binomial(n, n - k)
            assert g.eval_at(1) == _binom(n, k)
            # factorial quotient via exact division
            num = QPoly.one()
            for i in range(n - k + 1, n + 1):
                num = num * q_int(i)
            den = QPoly.one()
            for i in range(1, k + 1):
                den = den * q_int(i)
            if k:
                assert exact_div(num, den) == g
            # subset-sum construction
            from itertools import combinations
            total = QPoly.zero()
            for J in combinations(range(1, n + 1), k):
                total = total + QPoly.q_power(sum(J) - k * (k + 1) // 2)
            assert total == g


def test_chi_q():
    assert chi_q(NCPoly.one()) == QPoly.one()
    assert chi_q(catalan(3)) == qp((0, 1), (1, 2), (2, 1), (3, 1))
    # the k = 1 column: n staircase letters, exponents 0..n-1
    for n in range(1, 8):
        assert chi_q(truncated_tilde(n, 1)) == q_int(n)
    assert chi_q(NCPoly.y(5)) == QPoly.q_power(4)
    assert chi_q(NCPoly.x(3, -1)) == QPoly.q_power(-3)


def test_chi_q_is_ring_map():
    rng = random.Random(64)
    from nccatalan import word_from_letters

    def rand_poly():
        terms = []
        for _ in range(4):
            letters = [(rng.randrange(5), rng.choice((-2, -1, 1, 2)))
                       for _ in range(rng.randrange(4))]
            terms.append((word_from_letters(letters), rng.randrange(-4, 5)))
        return NCPoly(terms)

    for _ in range(60):
        p, q = rand_poly(), rand_poly()
        assert chi_q(p + q) == chi_q(p) + chi_q(q)
        assert chi_q(p * q) == chi_q(p) * chi_q(q)
        assert chi_q(p).eval_at(1) == eps(p)


def test_chi_q_shift_rule():
    for n in range(7):
        for k in range(n + 1):
            for p in (truncated_tilde(n, k), binom_first(n, k)):
                assert chi_q(shift(p, 1)) == QPoly.q_power(k) * chi_q(p)


def test_gh_polynomials():
    assert gh_cnk(5, 0) == QPoly.one()
    assert gh_cnk(2, 2) == qp((0, 1), (1, 1))
    for n in range(9):
        for k in range(n + 1):
            assert chi_q(truncated_tilde(n, k)) == gh_cnk(n, k)
    with pytest.raises(ValueError):
        gh_cnk(2, 3)


def test_chi_binomials():
    for n in range(8):
        for k in range(n + 1):
            g = q_binomial(n, k)
            assert chi_q(binom_first(n, k)) == QPoly.q_power(k * (k - 1)) * g
            assert chi_q(binom_second(n, k)) == QPoly.q_power(k * (k - 1) // 2) * g


def test_bareiss_det():
    assert det_bareiss([[qp((0, 2))]]) == qp((0, 2))
    assert det_bareiss([]) == QPoly.one()
    # singular matrix
    row = [QPoly.one(), QPoly.one()]
    assert det_bareiss([row, row]) == QPoly.zero()
    # permutation sign
    z, o = QPoly.zero(), QPoly.one()
    assert det_bareiss([[z, o], [o, z]]) == -QPoly.one()
    # 3x3 integer check against cofactors
    m = [[qp((0, a * b + 1)) for b in range(1, 4)] for a in range(1, 4)]
    total = 0
    import itertools
    for perm in itertools.permutations(range(3)):
        sign = (-1) ** sum(1 for i in range(3) for j in range(i) if perm[j] > perm[i])
        prod = 1
        for i in range(3):
            prod *= m[i][perm[i]].coeff(0)
        total += sign * prod
    assert det_bareiss(m) == qp((0, total)) if total else det_bareiss(m) == QPoly.zero()


def test_q_hankel_det():
    assert q_hankel_det(0, 1) == QPoly.q_power(1)
    assert q_hankel_det(1, 1) == QPoly.q_power(3)
    assert q_hankel_det(0, 2) == QPoly.q_power(7)
    for m in (0, 1):
        for n in range(1, 5):
            expect = n * (n + 1) * (4 * n - 1 + 6 * m) // 6
            assert q_hankel_det(m, n) == QPoly.q_power(expect)
    with pytest.raises(ValueError):
        q_hankel_det(2, 3)


def test_qpoly_text():
    p = qp((0, 1), (1, 2), (3, 1))
    assert format_qpoly(p) == "1 + 2*q + q^3"
    assert format_qpoly(QPoly.zero()) == "0"
    assert format_qpoly(qp((-2, -1), (1, 1))) == "-q^-2 + q"
    assert parse_qpoly("1 + 2*q + q^3") == p
    assert parse_qpoly("-q^-2 + q") == qp((-2, -1), (1, 1))
    assert parse_qpoly("5") == qp((0, 5))
    with pytest.raises(ValueError):
        parse_qpoly("q^")
    with pytest.raises(ValueError):
        parse_qpoly("")
    assert latex_qpoly(qp((-1, 2), (2, 1))) == "2\\,q^{-1} + q^{2}"


def test_qpoly_json():
    p = qp((0, 1), (4, -3))
    obj = qpoly_to_obj(p)
    assert obj == {"0": 1, "4": -3}
    assert qpoly_from_obj(json.loads(json.dumps(obj))) == p
