"""Hankel matrices over the group ring, their triangular factors and inverses.

All matrices are dense and small (desk scale); entries are NCPoly values.
Row/column indices follow the ambient convention: the size-n objects are
the principal [0, n] x [0, n] blocks, so an NCMatrix of parameter n has
n + 1 rows and columns.
"""

import functools
from itertools import combinations

from .binomials import binom_first
from .catalan import catalan, truncated, truncated_tilde
from .ring import NCPoly, bar, word_inv, x_word


class NCMatrix:
    """Rectangular grid of group-ring elements."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(row) for row in entries)
        if not entries or not entries[0]:
            raise ValueError("matrix needs at least one row and one column")
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged rows")
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, size):
        one = NCPoly.one()
        zero = NCPoly.zero()
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, NCMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __mul__(self, other):
        if not isinstance(other, NCMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.cols} vs {other.rows}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = NCPoly.zero()
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return NCMatrix(out)

    def __repr__(self):
        return f"NCMatrix({self.rows}x{self.cols})"

    def to_obj(self):
        """Row-major nested lists of canonical entry strings (JSON form)."""
        from .serialize import format_poly

        return [[format_poly(e) for e in row] for row in self.entries]


def mat_identity(size):
    return NCMatrix.identity(size)


def hankel(m, n):
    """The (n+1) x (n+1) block with (i, j) entry catalan(m + i + j)."""
    return NCMatrix([[catalan(m + i + j) for j in range(n + 1)] for i in range(n + 1)])


def gauss_L(m, n):
    """Lower unitriangular factor: (r, c) entry t(r+c+m, r-c) for c <= r."""
    zero = NCPoly.zero()
    return NCMatrix(
        [[truncated_tilde(r + c + m, r - c) if c <= r else zero for c in range(n + 1)]
         for r in range(n + 1)]
    )


def gauss_U(m, n):
    """Upper triangular factor: (r, c) entry bar(truncated(r+c+m, c-r)) for r <= c.

    The diagonal is the monomial x_{2r+m}, hence invertible.
    """
    zero = NCPoly.zero()
    return NCMatrix(
        [[bar(truncated(r + c + m, c - r)) if r <= c else zero for c in range(n + 1)]
         for r in range(n + 1)]
    )


def inv_L(m, n):
    """Closed-form inverse of gauss_L: signed first-kind binomial entries."""
    zero = NCPoly.zero()
    out = []
    for r in range(n + 1):
        row = []
        for c in range(n + 1):
            if c > r:
                row.append(zero)
            else:
                sign = -1 if (r + c) % 2 else 1
                row.append(sign * binom_first(r + c + m, r - c))
        out.append(row)
    return NCMatrix(out)


def inv_U(m, n):
    """Closed-form inverse of gauss_U: signed reversed binomials times x_{2c+m}^-1."""
    zero = NCPoly.zero()
    out = []
    for r in range(n + 1):
        row = []
        for c in range(n + 1):
            if r > c:
                row.append(zero)
            else:
                sign = -1 if (r + c) % 2 else 1
                row.append(sign * bar(binom_first(r + c + m, c - r))
                           * NCPoly.from_word(word_inv(x_word(2 * c + m))))
        out.append(row)
    return NCMatrix(out)


def invert_unitriangular(A):
    """Invert a lower unitriangular matrix by signed descending-chain sums.

    The (r, c) entry of the inverse, r > c, is the sum over chains
    r = i_1 > i_2 > ... > i_k = c of (-1)^(k-1) A[i_1,i_2] ... A[i_{k-1},i_k].
    """
    if A.rows != A.cols:
        raise ValueError("matrix must be square")
    one = NCPoly.one()
    zero = NCPoly.zero()
    for i in range(A.rows):
        if A[i, i] != one:
            raise ValueError("matrix is not unitriangular")
        for j in range(i + 1, A.cols):
            if A[i, j]:
                raise ValueError("matrix is not lower triangular")
    out = []
    for r in range(A.rows):
        row = []
        for c in range(A.cols):
            if c > r:
                row.append(zero)
            elif c == r:
                row.append(one)
            else:
                acc = NCPoly.zero()
                for size in range(r - c):
                    for interior in combinations(range(c + 1, r), size):
                        chain = (r,) + tuple(reversed(interior)) + (c,)
                        prod = NCPoly.one()
                        for a, b in zip(chain, chain[1:]):
                            prod = prod * A[a, b]
                        acc = acc + ((-1) ** (len(chain) - 1)) * prod
                row.append(acc)
        out.append(row)
    return NCMatrix(out)


@functools.cache
def hankel_inverse(m, n):
    """Two-sided inverse of hankel(m, n), assembled from the closed forms."""
    return inv_U(m, n) * inv_L(m, n)


@functools.cache
def _border_core(m, i):
    """inverse(hankel(m, i-1)) times the right border column (catalan(m+r+i))."""
    inv = hankel_inverse(m, i - 1)
    return tuple(
        sum((inv[c, r] * catalan(m + r + i) for r in range(i)), NCPoly.zero())
        for c in range(i)
    )


def quasidet_bordered(m, i, j):
    """Quasideterminant of the bordered block with boxed entry catalan(m+i+j).

    The first i rows are rows 0..i-1 of the Hankel block; the last row is
    (catalan(m+j), ..., catalan(m+i+j)) with the boxed entry at position
    (i, i).  Evaluates as box - row * inverse(interior) * column, where
    the interior is hankel(m, i-1); for i = 0 this degenerates to the
    bare entry.
    """
    if not 0 <= i <= j:
        raise ValueError(f"need 0 <= i <= j, got i={i}, j={j}")
    if i == 0:
        return catalan(m + j)
    core = _border_core(m, i)
    total = catalan(m + i + j)
    for c in range(i):
        total = total - catalan(m + j + c) * core[c]
    return total
