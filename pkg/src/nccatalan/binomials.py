"""Noncommutative binomial coefficients of the first and second kind.

Both kinds are signed-free sums of ordered products of the two-letter
monomials y_i = x_i x_{i-1}^-1 over k-subsets J = {j_1 < ... < j_k} of
[1, n]:

    first kind   y_J  = y_{j_k+k-1} ... y_{j_2+1} y_{j_1}
    second kind  y'_J = y_{j_1+k-1} y_{j_2+k-3} ... y_{j_k+1-k}
                 (s-th factor y_{j_s + k + 1 - 2s})

The default constructors enumerate subsets directly; the Pascal-style
builders are an independent second route used for cross-checking.
"""

import functools
from itertools import combinations

from .catalan import truncated_tilde
from .ring import EMPTY_WORD, NCPoly, word_mul, y_word


def y_subset_word(J):
    """y_J for a strictly increasing tuple J (first kind, descending factors)."""
    k = len(J)
    w = EMPTY_WORD
    for s in range(k, 0, -1):
        w = word_mul(w, y_word(J[s - 1] + s - 1))
    return w


def yprime_subset_word(J):
    """y'_J for a strictly increasing tuple J (second kind)."""
    k = len(J)
    w = EMPTY_WORD
    for s in range(1, k + 1):
        w = word_mul(w, y_word(J[s - 1] + k + 1 - 2 * s))
    return w


def binom_first(n, k):
    """First-kind coefficient: sum of y_J over k-subsets of [1, n].

    Zero whenever k lies outside [0, n].
    """
    if k < 0 or k > n:
        return NCPoly.zero()
    return NCPoly((y_subset_word(J), 1) for J in combinations(range(1, n + 1), k))


def binom_second(n, k):
    """Second-kind coefficient: sum of y'_J over k-subsets of [1, n]."""
    if k < 0 or k > n:
        return NCPoly.zero()
    return NCPoly((yprime_subset_word(J), 1) for J in combinations(range(1, n + 1), k))


@functools.cache
def binom_first_pascal(n, k):
    """Pascal-route builder for the first kind; cross-checked against enumeration."""
    if k < 0 or k > n:
        return NCPoly.zero()
    if k == 0:
        return NCPoly.one()
    return binom_first_pascal(n - 1, k) + NCPoly.y(n + k - 1) * binom_first_pascal(n - 1, k - 1)


@functools.cache
def binom_second_pascal(n, k):
    """Pascal-route builder for the second kind."""
    from .ring import shift

    if k < 0 or k > n:
        return NCPoly.zero()
    if k == 0:
        return NCPoly.one()
    return shift(binom_second_pascal(n - 1, k), 1) + NCPoly.y(k) * binom_second_pascal(n - 1, k - 1)


def endpoint_chains(k):
    """All tuples (0 = j_0 < ... < j_l = k): interior subsets of (0, k)
    joined with the endpoints.  k = 0 gives the single chain (0,)."""
    if k == 0:
        return [(0,)]
    out = []
    for r in range(k):
        for interior in combinations(range(1, k), r):
            out.append((0,) + interior + (k,))
    return out


def cnk_from_binomials(n, k):
    """Rebuild truncated_tilde(n, k) as a signed sum of first-kind products.

    Each chain J contributes sign (-1)^(k+1-|J|) times the product of
    B(n + j_{s-1} + j_s - k, j_s - j_{s-1}) with the s = l factor leftmost.
    """
    total = NCPoly.zero()
    for J in endpoint_chains(k):
        sign = -1 if (k + 1 - len(J)) % 2 else 1
        prod = NCPoly.one()
        for s in range(len(J) - 1, 0, -1):
            prod = prod * binom_first(n + J[s - 1] + J[s] - k, J[s] - J[s - 1])
        total = total + sign * prod
    return total


def binom_from_cnk(n, k):
    """Rebuild binom_first(n, k) as a signed sum of staircase products.

    Same chains and signs as cnk_from_binomials, with factors
    t(n + j_{s-1} + j_s - k, j_s - j_{s-1}) taken in the same descending
    order (s = l leftmost).
    """
    total = NCPoly.zero()
    for J in endpoint_chains(k):
        sign = -1 if (k + 1 - len(J)) % 2 else 1
        prod = NCPoly.one()
        for s in range(len(J) - 1, 0, -1):
            prod = prod * truncated_tilde(n + J[s - 1] + J[s] - k, J[s] - J[s - 1])
        total = total + sign * prod
    return total
