"""Exact arithmetic in the free group on x0, x1, ... and its integer group ring.

Words are reduced tuples of (index, exponent) letters; ring elements
(NCPoly) are finite maps word -> nonzero integer coefficient.  All values
are immutable after construction and every operation is a pure function,
so everything here is safe to share across threads.

The ring maps:

* ``bar``    -- anti-automorphism fixing every generator (word reversal),
* ``shift``  -- endomorphism x_k -> x_{k+r},
* ``eps``    -- counit to the integers, x_k -> 1,
* ``sigma``  -- x_k -> x0^k x1^k (lands in words over x0, x1),
* ``pi``     -- x_k -> x0 (x0^-1 x1)^k.
"""

from . import backend

EMPTY_WORD = ()


def word_from_letters(letters):
    """Reduce an arbitrary letter sequence to a word.

    Merges adjacent letters with equal index, drops zero exponents, and
    validates indices.  Accepts any iterable of (index, exponent) pairs.
    """
    out = []
    for index, exponent in letters:
        if index < 0:
            raise ValueError(f"generator index must be nonnegative, got {index}")
        if exponent == 0:
            continue
        if out and out[-1][0] == index:
            e = out[-1][1] + exponent
            if e == 0:
                out.pop()
            else:
                out[-1] = (index, e)
        else:
            out.append((index, exponent))
    return tuple(out)


def x_word(k, e=1):
    """The one-letter word x_k^e."""
    if k < 0:
        raise ValueError(f"generator index must be nonnegative, got {k}")
    if e == 0:
        return EMPTY_WORD
    return ((k, e),)


def y_word(i):
    """The word y_i = x_i x_{i-1}^-1 (defined for i >= 1)."""
    if i < 1:
        raise ValueError(f"y_i requires i >= 1, got {i}")
    return ((i, 1), (i - 1, -1))


def word_mul(a, b):
    """Reduced product of two reduced words."""
    return backend.word_mul(a, b)


def word_inv(a):
    """Group inverse: reverse the letters and negate the exponents."""
    return tuple((i, -e) for i, e in reversed(a))


def word_bar(a):
    """Image under the bar anti-automorphism: reverse letters, keep exponents."""
    return tuple(reversed(a))


def word_pow(a, n):
    """n-th group power of a word (n may be negative)."""
    if n < 0:
        return word_pow(word_inv(a), -n)
    out = EMPTY_WORD
    for _ in range(n):
        out = backend.word_mul(out, a)
    return out


def word_shift(a, r):
    """Add r to every letter index; None if any index would go negative.

    For r >= 0 this is the restriction of the shift endomorphism to a
    single word.  The r < 0 direction is partial: words touching
    generators below x_r have no preimage and are reported as None.
    """
    if r == 0:
        return a
    if r > 0 or all(i + r >= 0 for i, _ in a):
        return tuple((i + r, e) for i, e in a)
    return None


def word_key(a):
    """Canonical sort key: letter count, then the flattened letter sequence."""
    return (len(a), tuple(v for letter in a for v in letter))


def _sigma_letter(k, e):
    """Reduced word for sigma(x_k^e)."""
    if k == 0 or e == 0:
        return EMPTY_WORD
    if e > 0:
        return ((0, k), (1, k)) * e
    return ((1, -k), (0, -k)) * (-e)


def sigma_word(w):
    """Reduced word for sigma applied to a single word."""
    out = EMPTY_WORD
    for k, e in w:
        out = backend.word_mul(out, _sigma_letter(k, e))
    return out


def _pi_letter(k):
    """Reduced word for pi(x_k) = x0 (x0^-1 x1)^k."""
    if k == 0:
        return ((0, 1),)
    return ((1, 1),) + ((0, -1), (1, 1)) * (k - 1)


def pi_word(w):
    """Reduced word for pi applied to a single word."""
    out = EMPTY_WORD
    for k, e in w:
        out = backend.word_mul(out, word_pow(_pi_letter(k), e))
    return out


class NCPoly:
    """Element of the integer group ring of the free group.

    Immutable by convention: the term map is never mutated after
    construction and is not exposed for writing.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                if not c:
                    continue
                s = data.get(w, 0) + c
                if s:
                    data[w] = s
                elif w in data:
                    del data[w]
        self._terms = data

    @classmethod
    def _raw(cls, data):
        """Wrap an already-clean term map without copying (internal)."""
        p = cls.__new__(cls)
        p._terms = data
        return p

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({EMPTY_WORD: 1})

    @classmethod
    def from_word(cls, w, c=1):
        if not c:
            return cls.zero()
        return cls._raw({w: c})

    @classmethod
    def sum(cls, items):
        """Sum an iterable of polynomials in one accumulation pass."""
        acc = {}
        for p in items:
            backend.poly_accumulate(acc, p._terms)
        return cls._raw(acc)

    @classmethod
    def x(cls, k, e=1):
        """The generator monomial x_k^e."""
        return cls.from_word(x_word(k, e))

    @classmethod
    def y(cls, i):
        """The monomial y_i = x_i x_{i-1}^-1."""
        return cls.from_word(y_word(i))

    def items(self):
        """Read-only view of (word, coefficient) pairs, unordered."""
        return self._terms.items()

    def sorted_terms(self):
        """(word, coefficient) pairs in canonical order."""
        return [(w, self._terms[w]) for w in sorted(self._terms, key=word_key)]

    def coeff(self, w):
        return self._terms.get(w, 0)

    def num_terms(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({} if other == 0 else {EMPTY_WORD: other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = NCPoly.from_word(EMPTY_WORD, other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return NCPoly._raw(backend.poly_add(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = NCPoly.from_word(EMPTY_WORD, other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return NCPoly.zero()
            return NCPoly._raw({w: c * other for w, c in self._terms.items()})
        if not isinstance(other, NCPoly):
            return NotImplemented
        return NCPoly._raw(backend.poly_mul(self._terms, other._terms))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("NCPoly powers require a nonnegative integer")
        out = NCPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __str__(self):
        from .serialize import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"NCPoly({self})"


def bar(p):
    """Bar anti-automorphism: reverse every word, keep exponents."""
    return NCPoly._raw({word_bar(w): c for w, c in p.items()})


def shift(p, r):
    """Shift endomorphism x_k -> x_{k+r} applied coefficientwise.

    r may be negative; words that would need a generator of negative
    index are annihilated (the shift is only partially invertible).
    """
    if r == 0:
        return p
    return NCPoly._raw(backend.poly_shift(p._terms, r))


def eps(p):
    """Counit: the integer sum of all coefficients."""
    return sum(p._terms.values())


def _apply_wordmap(p, f):
    """Push a word-level map through a polynomial, merging collisions."""
    out = {}
    for w, c in p.items():
        fw = f(w)
        s = out.get(fw, 0) + c
        if s:
            out[fw] = s
        elif fw in out:
            del out[fw]
    return NCPoly._raw(out)


def sigma(p):
    """Ring homomorphism x_k -> x0^k x1^k."""
    return _apply_wordmap(p, sigma_word)


def pi(p):
    """Ring homomorphism x_k -> x0 (x0^-1 x1)^k."""
    return _apply_wordmap(p, pi_word)
