"""Exact Laurent polynomials in one commuting variable q, and the q-character.

The q-character chi_q sends x_k to q^(k(k-1)/2) (so the staircase letters
y_k go to q^(k-1)); it turns the truncated noncommutative values into the
one-parameter lattice polynomials c_n^k(q, 1) built here by their own
recursion, and Hankel determinants of those into single q-powers.

Determinants are evaluated by fraction-free Bareiss elimination after
clearing each row's minimal q-power, so every division is exact in Z[q].
"""

import functools

from .ring import eps

_GH_LIMIT = 64


class QPoly:
    """Laurent polynomial over the integers: a map exponent -> coefficient."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, c in items:
                if not c:
                    continue
                s = data.get(e, 0) + c
                if s:
                    data[e] = s
                elif e in data:
                    del data[e]
        self._coeffs = data

    @classmethod
    def _raw(cls, data):
        p = cls.__new__(cls)
        p._coeffs = data
        return p

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({0: 1})

    @classmethod
    def q_power(cls, e, c=1):
        return cls._raw({e: c} if c else {})

    def items(self):
        return self._coeffs.items()

    def sorted_terms(self):
        return [(e, self._coeffs[e]) for e in sorted(self._coeffs)]

    def coeff(self, e):
        return self._coeffs.get(e, 0)

    def min_exp(self):
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    def max_exp(self):
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({} if other == 0 else {0: other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly.q_power(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return QPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly.q_power(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return QPoly.zero()
            return QPoly._raw({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        out = {}
        for ea, ca in self._coeffs.items():
            for eb, cb in other._coeffs.items():
                e = ea + eb
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return QPoly._raw(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("QPoly powers require a nonnegative integer")
        out = QPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def eval_at(self, value):
        """Exact integer evaluation (value may be a Fraction for q^-1 support)."""
        return sum(c * value**e for e, c in self._coeffs.items())

    def __str__(self):
        return format_qpoly(self)

    def __repr__(self):
        return f"QPoly({self})"


def exact_div(a, b):
    """Quotient a / b when b divides a in the Laurent ring; ValueError otherwise."""
    if not b:
        raise ValueError("division by zero polynomial")
    if not a:
        return QPoly.zero()
    amin, bmin = a.min_exp(), b.min_exp()
    da, db = a.max_exp() - amin, b.max_exp() - bmin
    if da < db:
        raise ValueError("not divisible (degree too small)")
    rem = [a.coeff(amin + i) for i in range(da + 1)]
    den = [b.coeff(bmin + i) for i in range(db + 1)]
    lead = den[db]
    quot = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        top = rem[db + i]
        if top % lead:
            raise ValueError("not divisible (leading coefficient)")
        qi = top // lead
        quot[i] = qi
        if qi:
            for t in range(db + 1):
                rem[i + t] -= qi * den[t]
    if any(rem):
        raise ValueError("not divisible (nonzero remainder)")
    base = amin - bmin
    return QPoly({base + i: c for i, c in enumerate(quot)})


def q_int(k):
    """[k] = 1 + q + ... + q^(k-1)."""
    if k < 0:
        raise ValueError("q-integer needs k >= 0")
    return QPoly({e: 1 for e in range(k)})


@functools.cache
def q_binomial(n, k):
    """Gaussian binomial coefficient, built by the Pascal recursion."""
    if k < 0 or k > n:
        return QPoly.zero()
    if k == 0 or k == n:
        return QPoly.one()
    return q_binomial(n - 1, k - 1) + QPoly.q_power(k) * q_binomial(n - 1, k)


def chi_q(p):
    """Ring map into the Laurent ring: x_k -> q^(k(k-1)/2), applied termwise."""
    out = {}
    for w, c in p.items():
        e = sum(exp * (k * (k - 1) // 2) for k, exp in w)
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return QPoly._raw(out)


@functools.cache
def gh_cnk(n, k):
    """The lattice polynomial c_n^k(q, 1), by its defining recursion at t = 1."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if n > _GH_LIMIT:
        raise ValueError(f"c_n^k recursion capped at n={_GH_LIMIT}")
    if k == 0:
        return QPoly.one()
    total = QPoly.zero()
    for r in range(1, k + 1):
        total = total + (q_binomial(r + n - k, r)
                         * QPoly.q_power(r * (r - 1) // 2)
                         * gh_cnk(k - 1, k - r))
    return total


def det_bareiss(rows):
    """Fraction-free determinant of a square grid of QPoly entries.

    Each row's minimal q-power is cleared first so elimination runs in
    Z[q]; the cleared power is reattached at the end.
    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return QPoly.one()
    cleared = 0
    M = []
    for row in rows:
        if not any(row):
            return QPoly.zero()
        shift = min(e.min_exp() for e in row if e)
        cleared += shift
        M.append([QPoly.q_power(-shift) * e for e in row])
    sign = 1
    prev = QPoly.one()
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return QPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = exact_div(elt, prev) if k else elt
            M[i][k] = QPoly.zero()
        prev = M[k][k]
    return QPoly.q_power(cleared, sign) * M[n - 1][n - 1]


def q_hankel_det(m, n):
    """Determinant of the (n+1) x (n+1) grid (c_{i+j+m}(q,1)); a single q-power."""
    if m not in (0, 1):
        raise ValueError("only the m = 0 and m = 1 families are supported")
    rows = [[gh_cnk(i + j + m, i + j + m) for j in range(n + 1)] for i in range(n + 1)]
    return det_bareiss(rows)


def chi_q_at_one(p):
    """Integer specialization q = 1 of the q-character; agrees with eps."""
    return chi_q(p).eval_at(1)


def counit(p):
    return eps(p)


def format_qpoly(p):
    """Canonical text: ascending exponents, '1 + 2*q + q^3' style."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    parts = []
    for e, c in terms:
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def latex_qpoly(p):
    """Subscript-free LaTeX rendering with braced exponents."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    parts = []
    for e, c in terms:
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "q" if e == 1 else f"q^{{{e}}}"
            body = power if mag == 1 else f"{mag}\\,{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def parse_qpoly(text):
    """Inverse of format_qpoly (lenient about whitespace)."""
    import re

    token = re.compile(r"\s*(?:(q)|(\d+)|(\^)|(\*)|(\+)|(-))")
    pos = 0
    tokens = []
    while pos < len(text):
        m = token.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"bad character in q-polynomial at position {pos}")
        kinds = ("q", "num", "^", "*", "+", "-")
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                tokens.append((kind, int(val) if kind == "num" else None))
                break
        pos = m.end()
    if not tokens:
        raise ValueError("empty q-polynomial text")
    acc = {}
    i = 0
    first = True

    def term_at(i):
        coeff = 1
        exponent = None
        if tokens[i][0] == "num":
            coeff = tokens[i][1]
            i += 1
            if i < len(tokens) and tokens[i][0] == "*":
                i += 1
            else:
                return i, 0, coeff
        if i < len(tokens) and tokens[i][0] == "q":
            i += 1
            exponent = 1
            if i < len(tokens) and tokens[i][0] == "^":
                i += 1
                neg = False
                if i < len(tokens) and tokens[i][0] == "-":
                    neg = True
                    i += 1
                if i >= len(tokens) or tokens[i][0] != "num":
                    raise ValueError("expected exponent after '^'")
                exponent = -tokens[i][1] if neg else tokens[i][1]
                i += 1
        if exponent is None:
            raise ValueError("expected 'q' or an integer term")
        return i, exponent, coeff

    while i < len(tokens):
        sign = 1
        if tokens[i][0] in ("+", "-"):
            if first and tokens[i][0] == "+":
                raise ValueError("unexpected leading '+'")
            sign = -1 if tokens[i][0] == "-" else 1
            i += 1
        elif not first:
            raise ValueError("expected '+' or '-' between terms")
        i, e, c = term_at(i)
        s = acc.get(e, 0) + sign * c
        if s:
            acc[e] = s
        elif e in acc:
            del acc[e]
        first = False
    return QPoly(acc)


def qpoly_to_obj(p):
    """JSON form: exponent (as a string key) -> coefficient."""
    return {str(e): c for e, c in p.sorted_terms()}


def qpoly_from_obj(obj):
    return QPoly({int(e): int(c) for e, c in obj.items()})
