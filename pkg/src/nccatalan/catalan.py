"""The noncommutative Catalan family: full, truncated, and two-variable forms.

Fast construction goes through a bottom-up dynamic program over the
staircase polynomials t(n, k) (satisfying t(n,k) = t(n-1,k) +
t(n,k-1) * y_{n+1-k}), from which everything else is assembled:

    catalan(n)        = t(n, n) * x0
    truncated(n, k)   = t(n, k) * x_{n-k}

The path and staircase-sequence enumerations stay available as
independent oracles, guarded at size 14 where term counts reach the
practical desk-scale ceiling.

Caches hold immutable values and are guarded by a lock; population order
does not affect the stored polynomials.
"""

import functools
import threading

from .paths import ENUMERATION_LIMIT, enumerate_jseq, enumerate_paths, jseq_word
from .ring import NCPoly, x_word

_lock = threading.Lock()
_tilde = {}


def _tilde_get(n, k):
    return _tilde[(n, k)] if 0 <= k <= n else NCPoly.zero()


def truncated_tilde(n, k):
    """The staircase polynomial t(n, k): truncated value times x_{n-k}^-1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= k <= n:
        return NCPoly.zero()
    with _lock:
        if (n, k) not in _tilde:
            for nn in range(n + 1):
                for kk in range(min(nn, k) + 1):
                    if (nn, kk) in _tilde:
                        continue
                    if kk == 0:
                        _tilde[(nn, kk)] = NCPoly.one()
                    else:
                        _tilde[(nn, kk)] = (
                            _tilde_get(nn - 1, kk)
                            + _tilde_get(nn, kk - 1) * NCPoly.y(nn + 1 - kk)
                        )
        return _tilde[(n, k)]


@functools.cache
def catalan(n):
    """The n-th noncommutative Catalan number."""
    return truncated_tilde(n, n) * NCPoly.x(0)


def truncated(n, k):
    """Sum over paths whose rightmost southeast corner has height <= k.

    Out-of-range k yields the zero polynomial.
    """
    t = truncated_tilde(n, k)
    if not t:
        return t
    return t * NCPoly.from_word(x_word(n - k))


@functools.cache
def underline_catalan(n):
    """Two-variable specialization, built by its own quadratic recursion."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return NCPoly.one()
    x0 = NCPoly.x(0)
    x1 = NCPoly.x(1)
    return NCPoly.sum(underline_catalan(k) * x0 * underline_catalan(n - 1 - k) * x1
                      for k in range(n))


@functools.cache
def dd_truncated(n, k):
    """Homogeneous x0/x1 form of the truncated value (degree n + k).

    Satisfies the Pascal-style recursion d(n,k) = d(n,k-1) x1 + d(n-1,k) x0
    with d(n,0) = x0^n; out-of-range k yields zero.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= k <= n:
        return NCPoly.zero()
    if k == 0:
        return NCPoly.x(0, n) if n else NCPoly.one()
    return dd_truncated(n, k - 1) * NCPoly.x(1) + dd_truncated(n - 1, k) * NCPoly.x(0)


def _check_oracle_size(n):
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration oracle capped at n={ENUMERATION_LIMIT}, got {n}")
    if n < 0:
        raise ValueError("n must be nonnegative")


def catalan_oracle(n):
    """Independent construction of catalan(n) as the path-monomial sum."""
    _check_oracle_size(n)
    return NCPoly((p.monomial(), 1) for p in enumerate_paths(n))


def truncated_oracle(n, k):
    """Independent construction of truncated(n, k) as a restricted path sum."""
    _check_oracle_size(n)
    return NCPoly((p.monomial(), 1) for p in enumerate_paths(n, k))


def tilde_oracle(n, k):
    """Independent construction of truncated_tilde(n, k) as the staircase-sequence sum."""
    _check_oracle_size(n)
    return NCPoly((jseq_word(j), 1) for j in enumerate_jseq(n, k))


def underline_oracle(n):
    """Independent construction of underline_catalan(n) as the jump-word sum."""
    _check_oracle_size(n)
    return NCPoly((p.jump_monomial(), 1) for p in enumerate_paths(n))


def classical_catalan(n):
    """The ordinary n-th Catalan number."""
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def classical_truncated(n, k):
    """binomial(n+k, k) - binomial(n+k, k-1); the point count behind truncated(n, k).

    The formula is used verbatim, so for k > n it continues past the
    geometric range (vanishing at k = n + 1 and going negative after),
    which is exactly the extension the classical multiplication identity
    needs.
    """
    return _binom(n + k, k) - _binom(n + k, k - 1)


def _binom(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out
