# cython: language_level=3
"""Compiled twin of _pykernel: free-group word products and term-map ops.

Semantics must match _pykernel exactly.  Coefficients and exponents stay
Python ints (arbitrary precision); the speedup comes from typed loops and
direct dict/tuple handling.
"""


def word_mul(tuple a, tuple b):
    """Product of two reduced words, reduced."""
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    if na == 0:
        return b
    if nb == 0:
        return a
    cdef Py_ssize_t ia = na
    cdef Py_ssize_t ib = 0
    cdef tuple la, lb
    cdef object e
    while ia > 0 and ib < nb:
        la = <tuple> a[ia - 1]
        lb = <tuple> b[ib]
        if la[0] != lb[0]:
            break
        e = la[1] + lb[1]
        if e == 0:
            ia -= 1
            ib += 1
        else:
            return a[: ia - 1] + ((la[0], e),) + b[ib + 1 :]
    if ia == na and ib == 0:
        return a + b
    return a[:ia] + b[ib:]


def poly_mul(dict p, dict q):
    """Term-map product: convolve coefficients over word_mul, purging zeros."""
    cdef dict out = {}
    cdef object wa, ca, wb, cb, w, c, prev
    for wa, ca in p.items():
        for wb, cb in q.items():
            w = word_mul(<tuple> wa, <tuple> wb)
            prev = out.get(w)
            if prev is None:
                out[w] = ca * cb
            else:
                c = prev + ca * cb
                if c == 0:
                    del out[w]
                else:
                    out[w] = c
    return out


def poly_add(dict p, dict q):
    """Term-map sum, purging zeros."""
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    cdef dict out = dict(p)
    poly_accumulate(out, q)
    return out


def poly_accumulate(dict acc, dict p):
    """Merge p into the accumulator dict in place, purging zeros."""
    cdef object w, c, prev, s
    for w, c in p.items():
        prev = acc.get(w)
        if prev is None:
            acc[w] = c
        else:
            s = prev + c
            if s == 0:
                del acc[w]
            else:
                acc[w] = s


cdef inline tuple _shift_word(tuple w, long r):
    cdef Py_ssize_t n = len(w)
    cdef list letters = []
    cdef tuple letter
    cdef Py_ssize_t t
    for t in range(n):
        letter = <tuple> w[t]
        letters.append((letter[0] + r, letter[1]))
    return tuple(letters)


def poly_shift(dict p, long r):
    """Add r to every letter index; r < 0 annihilates words that would
    need a negative index."""
    cdef dict out = {}
    cdef object w, c
    cdef tuple word, letter
    cdef Py_ssize_t t
    cdef bint ok
    if r >= 0:
        for w, c in p.items():
            out[_shift_word(<tuple> w, r)] = c
        return out
    for w, c in p.items():
        word = <tuple> w
        ok = True
        for t in range(len(word)):
            letter = <tuple> word[t]
            if letter[0] + r < 0:
                ok = False
                break
        if ok:
            out[_shift_word(word, r)] = c
    return out
