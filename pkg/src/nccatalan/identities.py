"""Registry of verifiable identities and the runner behind `verify`.

Every identity is a pure check over a finite parameter grid.  A cell is
one parameter assignment; the runner executes cells in ascending order
(optionally across threads), aggregates one report per identity, and on
failure records the smallest failing assignment together with canonical
serializations of both sides.

Randomized property cells draw from seeded generators, so repeated runs
are byte-identical.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from time import perf_counter

from .binomials import (
    binom_first,
    binom_first_pascal,
    binom_from_cnk,
    binom_second,
    binom_second_pascal,
    cnk_from_binomials,
)
from .catalan import (
    catalan,
    catalan_oracle,
    classical_catalan,
    classical_truncated,
    dd_truncated,
    tilde_oracle,
    truncated,
    truncated_oracle,
    truncated_tilde,
    underline_catalan,
    underline_oracle,
    _binom,
)
from .matrices import (
    gauss_L,
    gauss_U,
    hankel,
    hankel_inverse,
    inv_L,
    inv_U,
    invert_unitriangular,
    mat_identity,
    quasidet_bordered,
)
from .paths import enumerate_jseq, enumerate_paths, jseq_word
from .qpoly import QPoly, chi_q, gh_cnk, q_binomial, q_hankel_det
from .ring import NCPoly, bar, eps, pi, shift, sigma, word_from_letters, word_mul, x_word
from .serialize import format_poly

_SEED_BASE = 96017


@dataclass(frozen=True)
class Identity:
    id: str
    statement: str
    param_names: tuple
    default_max: int
    range_note: str
    cells_fn: object
    check_fn: object

    def cap(self, max_n=None):
        if max_n is None:
            return self.default_max
        return min(self.default_max, max_n)

    def cells(self, max_n=None):
        return self.cells_fn(self.cap(max_n))

    def describe(self, max_n=None):
        return self.range_note.format(cap=self.cap(max_n))


REGISTRY = {}


def _register(ident, statement, names, default_max, cells, note):
    def deco(fn):
        REGISTRY[ident] = Identity(ident, statement, tuple(names), default_max,
                                   note, cells, fn)
        return fn

    return deco


def _params_str(names, values):
    return ",".join(f"{n}={v}" for n, v in zip(names, values))


def _poly_pair(lhs, rhs):
    return (format_poly(lhs), format_poly(rhs))


def _mat_diff(A, B):
    """First mismatching entry of two matrices, or None if equal."""
    if A.rows != B.rows or A.cols != B.cols:
        return (f"{A.rows}x{A.cols}", f"{B.rows}x{B.cols}")
    for i in range(A.rows):
        for j in range(A.cols):
            if A[i, j] != B[i, j]:
                return (f"entry ({i},{j}): {format_poly(A[i, j])}",
                        f"entry ({i},{j}): {format_poly(B[i, j])}")
    return None


def _rng(seed):
    return random.Random(_SEED_BASE + seed)


def _random_word(rng, max_len=6, max_index=5, max_exp=3):
    letters = []
    for _ in range(rng.randrange(max_len + 1)):
        e = rng.randrange(-max_exp, max_exp)
        letters.append((rng.randrange(max_index + 1), e if e else max_exp))
    return word_from_letters(letters)


def _random_poly(rng, max_terms=4):
    return NCPoly((_random_word(rng), rng.randrange(-4, 5)) for _ in range(max_terms))


def _random_alternating_poly(rng, max_terms=3):
    """Integer combination of words x_{i1} x_{i2}^-1 x_{i3} ... x_{is} (s odd)."""
    terms = []
    for _ in range(max_terms):
        s = rng.choice((1, 3, 5))
        letters = [(rng.randrange(6), 1 if t % 2 == 0 else -1) for t in range(s)]
        terms.append((word_from_letters(letters), rng.randrange(-3, 4)))
    return NCPoly(terms)


# --------------------------------------------------------------------------
# words and the group ring

@_register("word-associativity",
           "reduced-word products associate and respect inverses",
           ("seed",), 3, lambda cap: [(s,) for s in range(cap + 1)],
           "seed<={cap}, 50 triples each")
def _check_word_assoc(seed):
    rng = _rng(seed)
    for _ in range(50):
        a, b, c = (_random_word(rng) for _ in range(3))
        left = word_mul(word_mul(a, b), c)
        right = word_mul(a, word_mul(b, c))
        if left != right:
            return (str(left), str(right))
        pa = NCPoly.from_word(a)
        inv = NCPoly.from_word(tuple((i, -e) for i, e in reversed(a)))
        if pa * inv != NCPoly.one():
            return _poly_pair(pa * inv, NCPoly.one())
    return None


@_register("bar-anti-automorphism",
           "bar is an involution with bar(pq) = bar(q) bar(p)",
           ("seed",), 3, lambda cap: [(s,) for s in range(cap + 1)],
           "seed<={cap}, 40 pairs each")
def _check_bar_antihom(seed):
    rng = _rng(seed)
    for _ in range(40):
        p, q = _random_poly(rng), _random_poly(rng)
        if bar(bar(p)) != p:
            return _poly_pair(bar(bar(p)), p)
        if bar(p * q) != bar(q) * bar(p):
            return _poly_pair(bar(p * q), bar(q) * bar(p))
    return None


@_register("ring-homomorphisms",
           "counit, sigma, pi and the shift respect sums and products",
           ("map", "seed"), 2,
           lambda cap: [(name, s) for name in ("eps", "sigma", "pi", "shift")
                        for s in range(cap + 1)],
           "seed<={cap} per map, 25 pairs each")
def _check_ring_homs(name, seed):
    maps = {
        "eps": eps,
        "sigma": sigma,
        "pi": pi,
        "shift": lambda p: shift(p, 2),
    }
    f = maps[name]
    rng = _rng(seed * 7 + ("eps", "sigma", "pi", "shift").index(name))
    for _ in range(25):
        p, q = _random_poly(rng), _random_poly(rng)
        add_l, add_r = f(p + q), f(p) + f(q)
        if add_l != add_r:
            return (str(add_l), str(add_r))
        mul_l, mul_r = f(p * q), f(p) * f(q)
        if mul_l != mul_r:
            return (str(mul_l), str(mul_r))
    one = NCPoly.one()
    if f(one) != (1 if name == "eps" else one):
        return (str(f(one)), "1")
    return None


@_register("sigma-shift-alternating",
           "sigma(shift(p, 1)) = x0 sigma(p) x1 on alternating combinations",
           ("seed",), 4, lambda cap: [(s,) for s in range(cap + 1)],
           "seed<={cap}, 100 combinations each")
def _check_sigma_shift(seed):
    rng = _rng(seed)
    x0, x1 = NCPoly.x(0), NCPoly.x(1)
    for _ in range(100):
        p = _random_alternating_poly(rng)
        lhs = sigma(shift(p, 1))
        rhs = x0 * sigma(p) * x1
        if lhs != rhs:
            return _poly_pair(lhs, rhs)
    return None


@_register("pi-catalan",
           "pi collapses catalan(n) to the classical count times pi(x_n)",
           ("n",), 10, lambda cap: [(n,) for n in range(cap + 1)],
           "n<={cap}")
def _check_pi_catalan(n):
    lhs = pi(catalan(n))
    rhs = classical_catalan(n) * pi(NCPoly.x(n))
    return None if lhs == rhs else _poly_pair(lhs, rhs)


# --------------------------------------------------------------------------
# the Catalan family

@_register("catalan-structure",
           "catalan(n) has the classical term count with all coefficients +1",
           ("n",), 10, lambda cap: [(n,) for n in range(cap + 1)],
           "n<={cap}")
def _check_catalan_structure(n):
    c = catalan(n)
    expect = classical_catalan(n)
    if c.num_terms() != expect or eps(c) != expect:
        return (f"{c.num_terms()} terms, counit {eps(c)}", f"{expect} terms, counit {expect}")
    if any(coeff != 1 for _, coeff in c.items()):
        return (format_poly(c), "all coefficients +1")
    return None


@_register("bar-invariance",
           "catalan(n) is fixed by the bar anti-automorphism",
           ("n",), 10, lambda cap: [(n,) for n in range(cap + 1)],
           "n<={cap}")
def _check_bar_invariance(n):
    c = catalan(n)
    b = bar(c)
    return None if b == c else _poly_pair(b, c)


def _x0inv():
    return NCPoly.from_word(((0, -1),))


@_register("catalan-recursion",
           "catalan(n+1) equals both one-step convolution sums",
           ("n",), 10, lambda cap: [(n,) for n in range(cap + 1)],
           "n<={cap}")
def _check_catalan_recursion(n):
    target = catalan(n + 1)
    xi = _x0inv()
    left = NCPoly.sum(catalan(k) * xi * shift(catalan(n - k), 1)
                      for k in range(n + 1))
    if left != target:
        return _poly_pair(left, target)
    right = NCPoly.sum(shift(catalan(k), 1) * xi * catalan(n - k)
                       for k in range(n + 1))
    if right != target:
        return _poly_pair(right, target)
    return None


@_register("catalan-recursion-squared-shift",
           "catalan(n+1) equals both double-shift convolution sums",
           ("n",), 9, lambda cap: [(n,) for n in range(1, cap + 1)],
           "1<=n<={cap}")
def _check_catalan_recursion_t2(n):
    target = catalan(n + 1)
    x0i = _x0inv()
    x1i = NCPoly.from_word(((1, -1),))
    x1 = NCPoly.x(1)
    lhs = catalan(n) * x0i * x1
    for k in range(1, n + 1):
        lhs = lhs + catalan(k) * x1i * shift(catalan(n - k), 2)
    if lhs != target:
        return _poly_pair(lhs, target)
    rhs = x1 * x0i * catalan(n)
    for k in range(n):
        rhs = rhs + shift(catalan(k), 2) * x1i * catalan(n - k)
    if rhs != target:
        return _poly_pair(rhs, target)
    return None


@_register("catalan-series",
           "the generating series satisfies its quadratic equation "
           "and the two convolution orders agree, degree by degree",
           ("degree",), 10, lambda cap: [(j,) for j in range(cap + 1)],
           "degree<={cap}")
def _check_catalan_series(j):
    xi = _x0inv()
    if j == 0:
        lhs = catalan(0)
        rhs = NCPoly.x(0)
        return None if lhs == rhs else _poly_pair(lhs, rhs)
    quad = NCPoly.sum(catalan(a) * xi * shift(catalan(j - 1 - a), 1)
                      for a in range(j))
    if quad != catalan(j):
        return _poly_pair(quad, catalan(j))
    comm_l = NCPoly.sum(shift(catalan(a), 1) * xi * catalan(j - a)
                        for a in range(j + 1))
    comm_r = NCPoly.sum(catalan(a) * xi * shift(catalan(j - a), 1)
                        for a in range(j + 1))
    return None if comm_l == comm_r else _poly_pair(comm_l, comm_r)


@_register("truncated-recursion",
           "truncated(n, k) grows by one staircase step from (n-1, k) and (n, k-1)",
           ("n", "k"), 10,
           lambda cap: [(n, k) for n in range(1, cap + 1) for k in range(1, n + 1)],
           "1<=k<=n<={cap}")
def _check_truncated_recursion(n, k):
    lhs = truncated(n, k)
    rhs = truncated(n, k - 1)
    if k <= n - 1:
        step = NCPoly.from_word(word_mul(((n - k - 1, -1),), ((n - k, 1),)))
        rhs = rhs + truncated(n - 1, k) * step
    return None if lhs == rhs else _poly_pair(lhs, rhs)


@_register("staircase-oracle",
           "the staircase dynamic program matches the sequence-sum oracle",
           ("n", "k"), 8,
           lambda cap: [(n, k) for n in range(cap + 1) for k in range(n + 1)],
           "0<=k<=n<={cap}")
def _check_staircase_oracle(n, k):
    lhs = truncated_tilde(n, k)
    rhs = tilde_oracle(n, k)
    return None if lhs == rhs else _poly_pair(lhs, rhs)


@_register("path-oracle",
           "the recursive values match the corner-monomial path sums",
           ("n", "k"), 8,
           lambda cap: [(n, k) for n in range(cap + 1) for k in range(-1, n + 1)],
           "0<=n<={cap}, k<=n (k=-1 marks the unrestricted sum)")
def _check_path_oracle(n, k):
    if k < 0:
        lhs, rhs = catalan(n), catalan_oracle(n)
    else:
        lhs, rhs = truncated(n, k), truncated_oracle(n, k)
    return None if lhs == rhs else _poly_pair(lhs, rhs)


@_register("staircase-recursion-b",
           "staircase values satisfy t(n,k) = t(n-1,k) + t(n,k-1) y_{n+1-k}",
           ("n", "k"), 9,
           lambda cap: [(n, k) for n in range(1, cap + 1) for k in range(1, n + 1)],
           "1<=k<=n<={cap}")
def _check_staircase_b(n, k):
    lhs = truncated_tilde(n, k)
    rhs = truncated_tilde(n - 1, k) + truncated_tilde(n, k - 1) * NCPoly.y(n + 1 - k)
    return None if lhs == rhs else _poly_pair(lhs, rhs)


@_register("staircase-recursion-c",
           "t(n+1,k) splits along first-return position into t(i,i) T(t(n-i,k-i))",
           ("n", "k"), 9,
           lambda cap: [(n, k) for n in range(cap + 1) for k in range(n + 1)],
           "0<=k<=n<={cap}")
def _check_staircase_c(n, k):
    lhs = truncated_tilde(n + 1, k)
    rhs = NCPoly.zero()
    for i in range(k + 1):
        rhs = rhs + truncated_tilde(i, i) * shift(truncated_tilde(n - i, k - i), 1)
    return None if lhs == rhs else _poly_pair(lhs, rhs)


@_register("catalan-via-truncated",
           "catalan(n) equals the d-independent bilinear sum of truncated values",
           ("n", "d"), 8,
           lambda cap: [(n, d) for n in range(cap + 1) for d in range(-n, n + 1)],
           "n<={cap}, |d|<=n")
def _check_catalan_via_truncated(n, d):
    target = catalan(n)
    total = NCPoly.zero()
    for a in range(max(0, d), n + 1):
        b = a - d
        if b < 0 or a + b > n:
            continue
        mid = NCPoly.from_word(((n - a - b, -1),))
        total = total + truncated(n - b, a) * mid * bar(truncated(n - a, b))
    return None if total == target else _poly_pair(total, target)


@_register("two-variable-recursion",
           "underline values satisfy both quadratic convolution recursions",
           ("n",), 10, lambda cap: [(n,) for n in range(cap + 1)],
           "n<={cap}")
def _check_two_variable_recursion(n):
    target = underline_catalan(n + 1)
    x0, x1 = NCPoly.x(0), NCPoly.x(1)
    left = NCPoly.sum(underline_catalan(k) * x0 * underline_catalan(n - k) * x1
                      for k in range(n + 1))
    if left != target:
        return _poly_pair(left, target)
    right = NCPoly.sum(x0 * underline_catalan(k) * x1 * underline_catalan(n - k)
                       for k in range(n + 1))
    if right != target:
        return _poly_pair(right, target)
    return None


@_register("two-variable-recursion-squared-shift",
           "the double-shift recursion survives the two-variable specialization",
           ("n",), 9, lambda cap: [(n,) for n in range(1, cap + 1)],
           "1<=n<={cap}")
def _check_two_variable_t2(n):
    target = underline_catalan(n + 1)
    x0, x1 = NCPoly.x(0), NCPoly.x(1)
    x0i = NCPoly.from_word(((0, -1),))
    x1i = NCPoly.from_word(((1, -1),))
    lhs = underline_catalan(n) * x0 * x1
    for k in range(1, n + 1):
        lhs = lhs + underline_catalan(k) * x1i * x0 * underline_catalan(n - k) * x1 * x1
    if lhs != target:
        return _poly_pair(lhs, target)
    rhs = x0 * x1 * underline_catalan(n)
    for k in range(n):
        rhs = rhs + x0 * x0 * underline_catalan(k) * x1 * x0i * underline_catalan(n - k)
    if rhs != target:
        return _poly_pair(rhs, target)
    return None


@_register("two-variable-consistency",
           "underline values coincide with sigma of catalan and the jump-word sum",
           ("n",), 10, lambda cap: [(n,) for n in range(cap + 1)],
           "n<={cap} (jump-word sum for n<=8)")
def _check_two_variable_consistency(n):
    u = underline_catalan(n)
    s = sigma(catalan(n))
    if u != s:
        return _poly_pair(u, s)
    expect = classical_catalan(n)
    if u.num_terms() != expect or any(c != 1 for _, c in u.items()):
        return (format_poly(u), f"{expect} terms, all +1")
    if n <= 8:
        o = underline_oracle(n)
        if u != o:
            return _poly_pair(u, o)
    return None


@_register("homogeneous-truncated",
           "the homogeneous form matches sigma(truncated) x1^(k-n) and its Pascal rule",
           ("n", "k"), 8,
           lambda cap: [(n, k) for n in range(cap + 1) for k in range(n + 1)],
           "0<=k<=n<={cap}")
def _check_homogeneous_truncated(n, k):
    d = dd_truncated(n, k)
    via_sigma = sigma(truncated(n, k)) * NCPoly.from_word(x_word(1, k - n))
    if d != via_sigma:
        return _poly_pair(d, via_sigma)
    if any(sum(e for _, e in w) != n + k or any(e < 0 for _, e in w) for w, _ in d.items()):
        return (format_poly(d), f"homogeneous of degree {n + k}")
    if k >= 1:
        rec = dd_truncated(n, k - 1) * NCPoly.x(1) + dd_truncated(n - 1, k) * NCPoly.x(0)
        if d != rec:
            return _poly_pair(d, rec)
    return None


@_register("path-reflection",
           "the antidiagonal reflection is an involution intertwining bar",
           ("n",), 6, lambda cap: [(n,) for n in range(cap + 1)],
           "n<={cap}")
def _check_path_reflection(n):
    paths = list(enumerate_paths(n))
    seen = set()
    for p in paths:
        r = p.reflect()
        if r.reflect() != p:
            return (r.reflect().steps, p.steps)
        mp = NCPoly.from_word(p.monomial())
        if bar(mp) != NCPoly.from_word(r.monomial()):
            return _poly_pair(bar(mp), NCPoly.from_word(r.monomial()))
        seen.add(r.steps)
    if seen != {p.steps for p in paths}:
        return ("reflected path set", "original path set")
    # the reflected truncated family: bar(truncated(n,k)) x0^-1 as a
    # restricted staircase-sequence sum
    for k in range(n + 1):
        lhs = bar(truncated(n, k)) * NCPoly.from_word(((0, -1),))
        rhs = NCPoly((jseq_word(j), 1)
                     for j in enumerate_jseq(n, n, min_first=n - k))
        if lhs != rhs:
            return _poly_pair(lhs, rhs)
    return None


@_register("staircase-assembly",
           "the full value assembles from staircase values times a single letter",
           ("n",), 10, lambda cap: [(n,) for n in range(cap + 1)],
           "n<={cap}")
def _check_staircase_assembly(n):
    c = catalan(n)
    x0 = NCPoly.x(0)
    if truncated_tilde(n, n) * x0 != c:
        return _poly_pair(truncated_tilde(n, n) * x0, c)
    if truncated(n, n) != c:
        return _poly_pair(truncated(n, n), c)
    if n >= 1:
        if truncated(n, n - 1) != c:
            return _poly_pair(truncated(n, n - 1), c)
        alt = truncated_tilde(n, n - 1) * NCPoly.y(1)
        if alt != truncated_tilde(n, n):
            return _poly_pair(alt, truncated_tilde(n, n))
    for k in range(n + 1):
        if truncated(n, k) != truncated_tilde(n, k) * NCPoly.x(n - k):
            return _poly_pair(truncated(n, k), truncated_tilde(n, k) * NCPoly.x(n - k))
    return None


# --------------------------------------------------------------------------
# binomial coefficients

@_register("binomial-counit",
           "both binomial kinds have the classical binomial as counit",
           ("n",), 12, lambda cap: [(n,) for n in range(cap + 1)],
           "n<={cap}, all k")
def _check_binomial_counit(n):
    for k in range(n + 2):
        expect = _binom(n, k)
        for poly in (binom_first(n, k), binom_second(n, k)):
            if eps(poly) != expect:
                return (str(eps(poly)), str(expect))
    return None


@_register("binomial-pascal",
           "both Pascal steps hold and the Pascal builders match enumeration",
           ("n", "k"), 10,
           lambda cap: [(n, k) for n in range(cap + 1) for k in range(n + 2)],
           "n<={cap}, k<=n+1")
def _check_binomial_pascal(n, k):
    lhs = binom_first(n + 1, k)
    rhs = binom_first(n, k)
    if k >= 1:
        rhs = rhs + NCPoly.y(n + k) * binom_first(n, k - 1)
    if lhs != rhs:
        return _poly_pair(lhs, rhs)
    lhs2 = binom_second(n + 1, k)
    rhs2 = shift(binom_second(n, k), 1)
    if k >= 1:
        rhs2 = rhs2 + NCPoly.y(k) * binom_second(n, k - 1)
    if lhs2 != rhs2:
        return _poly_pair(lhs2, rhs2)
    if binom_first_pascal(n, k) != binom_first(n, k):
        return _poly_pair(binom_first_pascal(n, k), binom_first(n, k))
    if binom_second_pascal(n, k) != binom_second(n, k):
        return _poly_pair(binom_second_pascal(n, k), binom_second(n, k))
    return None


@_register("binomial-multiplication",
           "both binomial kinds obey their two-block multiplication laws",
           ("m", "n", "k"), 10,
           lambda cap: [(m, n, k) for m in range(cap + 1) for n in range(cap + 1 - m)
                        for k in range(m + n + 1)],
           "m+n<={cap}, k<=m+n")
def _check_binomial_multiplication(m, n, k):
    lhs = binom_first(m + n, k)
    total = NCPoly.zero()
    for a in range(k + 1):
        b = k - a
        if a > m or b > n:
            continue
        total = total + shift(binom_first(m, a), n + b) * binom_first(n, b)
    if total != lhs:
        return _poly_pair(total, lhs)
    lhs2 = binom_second(m + n, k)
    total2 = NCPoly.zero()
    for a in range(k + 1):
        b = k - a
        if a > m or b > n:
            continue
        total2 = total2 + shift(binom_second(m, a), b) * shift(binom_second(n, b), m - a)
    if total2 != lhs2:
        return _poly_pair(total2, lhs2)
    return None


@_register("truncated-multiplication",
           "staircase values obey the second-kind binomial convolution",
           ("m", "n", "k"), 10,
           lambda cap: [(m, n, k) for m in range(cap + 1) for n in range(cap + 1 - m)
                        for k in range(m + n + 1)],
           "m+n<={cap}, k<=m+n")
def _check_truncated_multiplication(m, n, k):
    lhs = truncated_tilde(m + n, k)
    total = NCPoly.zero()
    for ell in range(n + 1):
        left = truncated_tilde(m + ell, k - ell)
        if not left:
            continue
        right = shift(binom_second(n, ell), m - k + ell)
        total = total + left * right
    return None if total == lhs else _poly_pair(total, lhs)


@_register("alternating-sum",
           "the signed staircase-binomial convolutions telescope to zero",
           ("n", "k"), 8,
           lambda cap: [(n, k) for n in range(1, cap + 1) for k in range(1, n + 1)],
           "0<k<=n<={cap}")
def _check_alternating_sum(n, k):
    total = NCPoly.zero()
    for j in range(k + 1):
        sign = -1 if j % 2 else 1
        total = total + sign * (truncated_tilde(n + k - j, j) * binom_first(n - j, k - j))
    if total:
        return (format_poly(total), "0")
    companion = NCPoly.zero()
    for j in range(k + 1):
        sign = -1 if j % 2 else 1
        companion = companion + sign * (binom_first(n + k - j, j) * truncated_tilde(n - j, k - j))
    if companion:
        return (format_poly(companion), "0")
    return None


@_register("staircase-from-binomials",
           "staircase values equal their signed chain sums of first-kind binomials",
           ("n", "k"), 7,
           lambda cap: [(n, k) for n in range(cap + 1) for k in range(n + 1)],
           "0<=k<=n<={cap}")
def _check_staircase_from_binomials(n, k):
    lhs = cnk_from_binomials(n, k)
    rhs = truncated_tilde(n, k)
    return None if lhs == rhs else _poly_pair(lhs, rhs)


@_register("binomials-from-staircase",
           "first-kind binomials equal their signed chain sums of staircase values",
           ("n", "k"), 7,
           lambda cap: [(n, k) for n in range(cap + 1) for k in range(n + 1)],
           "0<=k<=n<={cap}")
def _check_binomials_from_staircase(n, k):
    lhs = binom_from_cnk(n, k)
    rhs = binom_first(n, k)
    return None if lhs == rhs else _poly_pair(lhs, rhs)


# --------------------------------------------------------------------------
# Hankel matrices

@_register("hankel-gauss",
           "the Hankel block factors as lower times upper triangular",
           ("m", "n"), 5,
           lambda cap: [(m, n) for m in (0, 1) for n in range(cap + 1)],
           "m in {{0,1}}, n<={cap}")
def _check_hankel_gauss(m, n):
    H = hankel(m, n)
    for i in range(n + 1):
        for j in range(n + 1):
            if H[i, j] != H[j, i]:
                return (format_poly(H[i, j]), format_poly(H[j, i]))
    return _mat_diff(gauss_L(m, n) * gauss_U(m, n), H)


@_register("hankel-triangular-inverses",
           "the closed-form triangular inverses invert on both sides",
           ("m", "n"), 5,
           lambda cap: [(m, n) for m in (0, 1) for n in range(cap + 1)],
           "m in {{0,1}}, n<={cap}")
def _check_hankel_triangular_inverses(m, n):
    eye = mat_identity(n + 1)
    L, Li = gauss_L(m, n), inv_L(m, n)
    for prod in (L * Li, Li * L):
        diff = _mat_diff(prod, eye)
        if diff:
            return diff
    U, Ui = gauss_U(m, n), inv_U(m, n)
    for prod in (U * Ui, Ui * U):
        diff = _mat_diff(prod, eye)
        if diff:
            return diff
    return None


@_register("hankel-inverse",
           "the assembled Hankel inverse is two-sided",
           ("m", "n"), 4,
           lambda cap: [(m, n) for m in (0, 1) for n in range(cap + 1)],
           "m in {{0,1}}, n<={cap}")
def _check_hankel_inverse(m, n):
    H = hankel(m, n)
    Hi = hankel_inverse(m, n)
    eye = mat_identity(n + 1)
    diff = _mat_diff(H * Hi, eye)
    if diff:
        return diff
    return _mat_diff(Hi * H, eye)


@_register("unitriangular-inversion",
           "signed chain-sum inversion reproduces the closed-form inverse",
           ("m", "n"), 4,
           lambda cap: [(m, n) for m in (0, 1) for n in range(cap + 1)],
           "m in {{0,1}}, n<={cap}")
def _check_unitriangular_inversion(m, n):
    diff = _mat_diff(invert_unitriangular(gauss_L(m, n)), inv_L(m, n))
    if diff:
        return diff
    eye = mat_identity(n + 1)
    return _mat_diff(invert_unitriangular(eye), eye)


def _quasiminor_cells(cap):
    base = min(cap, 8)
    cells = {(m, i, j) for m in (0, 1) for i in range(base + 1)
             for j in range(i, base + 1) if m + i + j <= base}
    # principal cells i = j up to m + 2i = cap (the diagonal family is
    # checked a little further out than the bordered grid)
    cells |= {(m, i, i) for m in (0, 1) for i in range(cap + 1) if m + 2 * i <= cap}
    return sorted(cells)


@_register("hankel-quasiminor",
           "bordered quasideterminants reproduce the truncated family",
           ("m", "i", "j"), 9, _quasiminor_cells,
           "m in {{0,1}}, 0<=i<=j, m+i+j<=min({cap},8); principal cells m+2n<={cap}")
def _check_hankel_quasiminor(m, i, j):
    lhs = quasidet_bordered(m, i, j)
    rhs = truncated(m + i + j, j - i)
    if lhs != rhs:
        return _poly_pair(lhs, rhs)
    if i == j:
        principal = NCPoly.x(m + 2 * i)
        if lhs != principal:
            return _poly_pair(lhs, principal)
    return None


# --------------------------------------------------------------------------
# the q-side and classical counts

@_register("qchar-homomorphism",
           "the q-character is a ring map agreeing with the counit at q = 1",
           ("seed",), 3, lambda cap: [(s,) for s in range(cap + 1)],
           "seed<={cap}, 30 pairs each")
def _check_qchar_homomorphism(seed):
    rng = _rng(seed)
    for _ in range(30):
        p, q = _random_poly(rng), _random_poly(rng)
        if chi_q(p + q) != chi_q(p) + chi_q(q):
            return (str(chi_q(p + q)), str(chi_q(p) + chi_q(q)))
        if chi_q(p * q) != chi_q(p) * chi_q(q):
            return (str(chi_q(p * q)), str(chi_q(p) * chi_q(q)))
        if chi_q(p).eval_at(1) != eps(p):
            return (str(chi_q(p).eval_at(1)), str(eps(p)))
    return None


@_register("qchar-shift",
           "on degree-k staircase polynomials the shift multiplies the image by q^k",
           ("n", "k"), 10,
           lambda cap: [(n, k) for n in range(cap + 1) for k in range(n + 1)],
           "0<=k<=n<={cap}")
def _check_qchar_shift(n, k):
    for poly in (truncated_tilde(n, k), binom_first(n, k)):
        lhs = chi_q(shift(poly, 1))
        rhs = QPoly.q_power(k) * chi_q(poly)
        if lhs != rhs:
            return (str(lhs), str(rhs))
    return None


@_register("qcatalan-truncated",
           "the q-character of staircase values gives the lattice q-polynomials",
           ("n", "k"), 10,
           lambda cap: [(n, k) for n in range(cap + 1) for k in range(n + 1)],
           "0<=k<=n<={cap}")
def _check_qcatalan_truncated(n, k):
    lhs = chi_q(truncated_tilde(n, k))
    rhs = gh_cnk(n, k)
    if lhs != rhs:
        return (str(lhs), str(rhs))
    if 1 <= k <= n:
        rec = chi_q(truncated_tilde(n, k - 1)) * QPoly.q_power(n - k) \
            + chi_q(truncated_tilde(n - 1, k))
        if lhs != rec:
            return (str(lhs), str(rec))
    return None


@_register("qcatalan-hankel-det",
           "the q-Catalan Hankel determinant is a single predicted q-power",
           ("m", "n"), 6,
           lambda cap: [(m, n) for m in (0, 1) for n in range(1, cap + 1)],
           "m in {{0,1}}, 1<=n<={cap}")
def _check_qcatalan_hankel_det(m, n):
    lhs = q_hankel_det(m, n)
    rhs = QPoly.q_power(n * (n + 1) * (4 * n - 1 + 6 * m) // 6)
    return None if lhs == rhs else (str(lhs), str(rhs))


@_register("qchar-binomials",
           "the q-character rescales both binomial kinds to Gaussian binomials",
           ("n", "k"), 10,
           lambda cap: [(n, k) for n in range(cap + 1) for k in range(n + 1)],
           "0<=k<=n<={cap}")
def _check_qchar_binomials(n, k):
    gauss = q_binomial(n, k)
    lhs = chi_q(binom_first(n, k))
    rhs = QPoly.q_power(k * (k - 1)) * gauss
    if lhs != rhs:
        return (str(lhs), str(rhs))
    lhs2 = chi_q(binom_second(n, k))
    rhs2 = QPoly.q_power(k * (k - 1) // 2) * gauss
    if lhs2 != rhs2:
        return (str(lhs2), str(rhs2))
    return None


@_register("classical-specialization",
           "the counit recovers the classical counts and their four identities",
           ("n",), 10, lambda cap: [(n,) for n in range(cap + 1)],
           "n<={cap}")
def _check_classical_specialization(n):
    if eps(catalan(n)) != classical_catalan(n):
        return (str(eps(catalan(n))), str(classical_catalan(n)))
    for k in range(n + 1):
        if eps(truncated(n, k)) != classical_truncated(n, k):
            return (str(eps(truncated(n, k))), str(classical_truncated(n, k)))
    c = classical_truncated
    for d in range(-n, n + 1):
        total = sum(c(n - b, a) * c(n - a, b)
                    for a in range(n + 1) for b in range(n + 1 - a) if a - b == d)
        if total != classical_catalan(n):
            return (str(total), str(classical_catalan(n)))
    for k in range(n + 1):
        total = sum(classical_catalan(j) * c(n - j, k - j) for j in range(k + 1))
        if total != c(n + 1, k):
            return (str(total), str(c(n + 1, k)))
    for k in range(1, n + 1):
        total = sum((-1) ** j * c(n + k - j, j) * _binom(n - j, k - j)
                    for j in range(k + 1))
        if total != 0:
            return (str(total), "0")
    for m in range(n + 1):
        rest = n - m
        for k in range(n + 1):
            total = sum(c(m + ell, k - ell) * _binom(rest, ell)
                        for ell in range(rest + 1) if k - ell >= 0)
            if total != c(n, k):
                return (str(total), str(c(n, k)))
    return None


# --------------------------------------------------------------------------
# runner

def suite_ids():
    return sorted(REGISTRY)


def run_identity(ident, max_n=None, jobs=1):
    """Execute one identity; returns its report dict."""
    cells = ident.cells(max_n)
    start = perf_counter()
    failure = None
    if jobs > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: ident.check_fn(*c), cells))
        for cell, res in zip(cells, results):
            if res is not None:
                failure = (cell, res)
                break
    else:
        for cell in cells:
            res = ident.check_fn(*cell)
            if res is not None:
                failure = (cell, res)
                break
    millis = int((perf_counter() - start) * 1000)
    if failure is None:
        return {"id": ident.id, "params": ident.describe(max_n),
                "status": "ok", "millis": millis}
    cell, (lhs, rhs) = failure
    return {"id": ident.id, "params": _params_str(ident.param_names, cell),
            "status": "fail", "millis": millis, "lhs": lhs, "rhs": rhs}


def run_suite(suite="all", max_n=None, jobs=1):
    """Run one identity or the whole registry; reports are id-sorted."""
    if suite == "all":
        idents = [REGISTRY[i] for i in suite_ids()]
    elif suite in REGISTRY:
        idents = [REGISTRY[suite]]
    else:
        raise KeyError(suite)
    reports = [run_identity(ident, max_n=max_n, jobs=jobs) for ident in idents]
    ok = all(r["status"] == "ok" for r in reports)
    return reports, ok
