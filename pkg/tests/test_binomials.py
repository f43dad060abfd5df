from itertools import combinations

from nccatalan import (
    NCPoly,
    binom_first,
    binom_first_pascal,
    binom_from_cnk,
    binom_second,
    binom_second_pascal,
    catalan,
    cnk_from_binomials,
    eps,
    shift,
    truncated_tilde,
)
from nccatalan.binomials import endpoint_chains, y_subset_word, yprime_subset_word
from nccatalan.catalan import _binom
from conftest import w


def y(i):
    return NCPoly.y(i)


def test_printed_examples():
    for n in range(7):
        assert binom_first(n, 0) == NCPoly.one()
        assert binom_second(n, 0) == NCPoly.one()
        assert binom_first(n, 1) == binom_second(n, 1)
        if n >= 1:
            assert binom_first(n, 1) == sum((y(i) for i in range(1, n + 1)), NCPoly.zero())
    # second-column / full-subset closed forms
    for n in range(2, 7):
        first2 = NCPoly.zero()
        second2 = NCPoly.zero()
        for i, j in combinations(range(1, n + 1), 2):
            first2 = first2 + y(j + 1) * y(i)
            second2 = second2 + y(i + 1) * y(j - 1)
        assert binom_first(n, 2) == first2
        assert binom_second(n, 2) == second2
        full_first = NCPoly.one()
        for i in range(n, 0, -1):
            full_first = full_first * y(2 * i - 1)
        assert binom_first(n, n) == full_first
        full_second = NCPoly.one()
        for i in range(n, 0, -1):
            full_second = full_second * y(i)
        assert binom_second(n, n) == full_second


def test_subset_words():
    assert y_subset_word((1, 2)) == w((3, 1), (2, -1), (1, 1), (0, -1))
    assert yprime_subset_word((1, 2)) == w((2, 1), (0, -1))  # y2 y1 reduced
    assert y_subset_word(()) == ()


def test_out_of_range_is_zero():
    assert binom_first(2, 5) == NCPoly.zero()
    assert binom_first(2, -1) == NCPoly.zero()
    assert binom_second(0, 1) == NCPoly.zero()


def test_counit():
    for n in range(9):
        for k in range(n + 2):
            assert eps(binom_first(n, k)) == _binom(n, k)
            assert eps(binom_second(n, k)) == _binom(n, k)


def test_pascal_builders_match_enumeration():
    for n in range(8):
        for k in range(n + 1):
            assert binom_first_pascal(n, k) == binom_first(n, k)
            assert binom_second_pascal(n, k) == binom_second(n, k)


def test_pascal_rules():
    for n in range(7):
        for k in range(n + 2):
            rhs = binom_first(n, k)
            if k >= 1:
                rhs = rhs + y(n + k) * binom_first(n, k - 1)
            assert binom_first(n + 1, k) == rhs
            rhs2 = shift(binom_second(n, k), 1)
            if k >= 1:
                rhs2 = rhs2 + y(k) * binom_second(n, k - 1)
            assert binom_second(n + 1, k) == rhs2


def test_multiplication_laws():
    for m in range(5):
        for n in range(5):
            for k in range(m + n + 1):
                total = NCPoly.zero()
                total2 = NCPoly.zero()
                for a in range(k + 1):
                    b = k - a
                    if a > m or b > n:
                        continue
                    total = total + shift(binom_first(m, a), n + b) * binom_first(n, b)
                    total2 = total2 + shift(binom_second(m, a), b) * \
                        shift(binom_second(n, b), m - a)
                assert binom_first(m + n, k) == total
                assert binom_second(m + n, k) == total2


def test_endpoint_chains():
    assert endpoint_chains(0) == [(0,)]
    assert endpoint_chains(1) == [(0, 1)]
    assert sorted(endpoint_chains(3)) == [(0, 1, 2, 3), (0, 1, 3), (0, 2, 3), (0, 3)]


def test_chain_sums():
    for n in range(6):
        for k in range(n + 1):
            assert cnk_from_binomials(n, k) == truncated_tilde(n, k)
            assert binom_from_cnk(n, k) == binom_first(n, k)
    # the single-chain case collapses to a bare binomial
    assert cnk_from_binomials(4, 1) == binom_first(4, 1)
    assert cnk_from_binomials(3, 3) == catalan(3) * NCPoly.from_word(((0, -1),))


def test_alternating_sums():
    for n in range(1, 7):
        for k in range(1, n + 1):
            total = NCPoly.zero()
            companion = NCPoly.zero()
            for j in range(k + 1):
                sign = -1 if j % 2 else 1
                total = total + sign * (truncated_tilde(n + k - j, j)
                                        * binom_first(n - j, k - j))
                companion = companion + sign * (binom_first(n + k - j, j)
                                                * truncated_tilde(n - j, k - j))
            assert total == NCPoly.zero()
            assert companion == NCPoly.zero()


def test_truncated_multiplication_with_annihilating_shift():
    for m in range(5):
        for n in range(5):
            for k in range(m + n + 1):
                total = NCPoly.zero()
                for ell in range(n + 1):
                    left = truncated_tilde(m + ell, k - ell)
                    if not left:
                        continue
                    total = total + left * shift(binom_second(n, ell), m - k + ell)
                assert total == truncated_tilde(m + n, k)
