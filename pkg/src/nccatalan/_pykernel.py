"""Pure-Python hot kernels for free-group words and group-ring term maps.

A word is a reduced tuple of (index, exponent) letters: indices are
nonnegative ints, exponents nonzero ints, and adjacent letters carry
distinct indices.  A term map is a dict word -> nonzero int coefficient.

`_kernel.pyx` is the compiled twin of this module; both must implement
identical semantics (see tests/test_backends.py).
"""


def word_mul(a, b):
    """Product of two reduced words, reduced.

    Cancellation can only cascade at the seam because both inputs are
    already reduced.
    """
    na = len(a)
    nb = len(b)
    if na == 0:
        return b
    if nb == 0:
        return a
    ia = na
    ib = 0
    while ia > 0 and ib < nb:
        la = a[ia - 1]
        lb = b[ib]
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


def poly_mul(p, q):
    """Term-map product: convolve coefficients over word_mul, purging zeros."""
    out = {}
    for wa, ca in p.items():
        for wb, cb in q.items():
            w = word_mul(wa, wb)
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


def poly_add(p, q):
    """Term-map sum, purging zeros."""
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    out = dict(p)
    poly_accumulate(out, q)
    return out


def poly_accumulate(acc, p):
    """Merge p into the accumulator dict in place, purging zeros."""
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


def poly_shift(p, r):
    """Add r to every letter index; r < 0 annihilates words that would
    need a negative index."""
    if r >= 0:
        return {tuple((i + r, e) for i, e in w): c for w, c in p.items()}
    out = {}
    for w, c in p.items():
        ok = True
        for i, _ in w:
            if i + r < 0:
                ok = False
                break
        if ok:
            out[tuple((i + r, e) for i, e in w)] = c
    return out
