"""Monotone lattice paths below the diagonal and their corner monomials.

A path lives in the [0,n] x [0,n] grid, runs (0,0) -> (n,n), and every
visited point (x, y) satisfies x - y >= 0.  Southeast corners (an East
step followed by a North step) contribute x_{x-y}; northwest corners
contribute x_{x-y}^-1.  Paths serialize as strings over {E, N}.
"""

from .ring import EMPTY_WORD, word_from_letters, word_mul, y_word, sigma_word

ENUMERATION_LIMIT = 14


class LatticePath:
    """An admissible path, stored as its step string."""

    __slots__ = ("n", "steps")

    def __init__(self, n, steps):
        if len(steps) != 2 * n or steps.count("E") != n:
            raise ValueError(f"need {n} E steps and {n} N steps, got {steps!r}")
        x = y = 0
        for s in steps:
            if s == "E":
                x += 1
            elif s == "N":
                y += 1
            else:
                raise ValueError(f"invalid step {s!r}")
            if x - y < 0:
                raise ValueError(f"path rises above the diagonal: {steps!r}")
        self.n = n
        self.steps = steps

    @classmethod
    def from_steps(cls, steps):
        return cls(len(steps) // 2, steps)

    def __eq__(self, other):
        return isinstance(other, LatticePath) and self.steps == other.steps and self.n == other.n

    def __hash__(self):
        return hash((self.n, self.steps))

    def __repr__(self):
        return f"LatticePath({self.n}, {self.steps!r})"

    def points(self):
        pts = [(0, 0)]
        x = y = 0
        for s in self.steps:
            if s == "E":
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts

    def corners(self):
        """Corner points in path order as (x, y, sign); +1 southeast, -1 northwest."""
        out = []
        x = y = 0
        for prev, nxt in zip(self.steps, self.steps[1:]):
            if prev == "E":
                x += 1
            else:
                y += 1
            if prev == "E" and nxt == "N":
                out.append((x, y, 1))
            elif prev == "N" and nxt == "E":
                out.append((x, y, -1))
        return out

    def monomial(self):
        """Ordered corner product: x_{content}^{sign} over all corners.

        A cornerless path (only the n = 0 point path) maps to x_n, the
        convention that keeps the degenerate case consistent with the
        rest of the family.
        """
        corners = self.corners()
        if not corners:
            return ((self.n, 1),)
        return word_from_letters((x - y, sign) for x, y, sign in corners)

    def jump_monomial(self):
        """The x0/x1 jump word: the image of the corner monomial under sigma."""
        return sigma_word(self.monomial())

    def reflect(self):
        """The involution (x, y) -> (n-y, n-x): reverse steps and swap E/N."""
        swapped = {"E": "N", "N": "E"}
        return LatticePath(self.n, "".join(swapped[s] for s in reversed(self.steps)))

    def rightmost_se_height(self):
        """Height of the rightmost southeast corner (0 for the empty path)."""
        se = [c for c in self.corners() if c[2] == 1]
        return se[-1][1] if se else 0


def enumerate_paths(n, k=None):
    """Yield all admissible paths of size n, restricted to rightmost
    southeast corner height <= k when k is given."""
    if n < 0:
        raise ValueError("path size must be nonnegative")
    if k is not None and not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")

    def rec(x, y, buf):
        if x == n and y == n:
            yield LatticePath(n, "".join(buf))
            return
        if x < n:
            buf.append("E")
            yield from rec(x + 1, y, buf)
            buf.pop()
        if y < x and y < n:
            buf.append("N")
            yield from rec(x, y + 1, buf)
            buf.pop()

    for path in rec(0, 0, []):
        if k is None or path.rightmost_se_height() <= k:
            yield path


def enumerate_jseq(n, k, min_first=None):
    """Yield the nondecreasing sequences (j_1, ..., j_k) with j_s >= s and
    j_k <= n; optionally restrict to j_1 >= min_first."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")

    def rec(s, lo, prefix):
        if s > k:
            yield tuple(prefix)
            return
        for j in range(max(s, lo), n + 1):
            prefix.append(j)
            yield from rec(s + 1, j, prefix)
            prefix.pop()

    start = 1 if min_first is None else min_first
    yield from rec(1, start, [])


def jseq_word(j):
    """The staircase word y_{j_1} y_{j_2 - 1} ... y_{j_k - k + 1}."""
    w = EMPTY_WORD
    for s, js in enumerate(j, start=1):
        w = word_mul(w, y_word(js - s + 1))
    return w


def path_jseq(path, k):
    """The sequence (j_1, ..., j_k) of minimal x-coordinates at heights 1..k."""
    pts = path.points()
    return tuple(min(x for x, y in pts if y == s) for s in range(1, k + 1))
