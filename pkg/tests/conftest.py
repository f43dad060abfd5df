from nccatalan import NCPoly, word_from_letters


def w(*pairs):
    """Reduced word from literal (index, exponent) pairs."""
    return word_from_letters(pairs)


def poly(*words):
    """Sum of monomials with coefficient 1 (repeats accumulate)."""
    return NCPoly((word, 1) for word in words)
