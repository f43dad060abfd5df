import random

import pytest

from nccatalan import (
    EMPTY_WORD,
    word_bar,
    word_from_letters,
    word_inv,
    word_mul,
    word_pow,
    word_shift,
    x_word,
    y_word,
)
from conftest import w


def test_mul_cascade_reduction():
    # (x1 x0^-1)(x0 x1) collapses through the seam to x1^2
    assert word_mul(w((1, 1), (0, -1)), w((0, 1), (1, 1))) == w((1, 2))


def test_mul_full_cancellation():
    assert word_mul(w((2, 1)), w((2, -1))) == EMPTY_WORD


def test_mul_no_reduction():
    assert word_mul(w((1, 1), (0, -1)), w((1, 1))) == w((1, 1), (0, -1), (1, 1))


def test_mul_identity():
    a = w((3, 2), (1, -1))
    assert word_mul(a, EMPTY_WORD) == a
    assert word_mul(EMPTY_WORD, a) == a


def test_inv():
    assert word_inv(w((1, 1), (0, -1), (1, 1))) == w((1, -1), (0, 1), (1, -1))
    assert word_inv(EMPTY_WORD) == EMPTY_WORD
    assert word_inv(w((0, 3))) == w((0, -3))
    a = w((2, 1), (0, -2), (1, 3))
    assert word_mul(a, word_inv(a)) == EMPTY_WORD
    assert word_mul(word_inv(a), a) == EMPTY_WORD


def test_bar_reverses_and_keeps_exponents():
    assert word_bar(w((2, 1), (0, -1), (1, 1))) == w((1, 1), (0, -1), (2, 1))
    assert word_bar(EMPTY_WORD) == EMPTY_WORD


def test_pow():
    a = w((1, 1), (0, -1))
    assert word_pow(a, 0) == EMPTY_WORD
    assert word_pow(a, 2) == w((1, 1), (0, -1), (1, 1), (0, -1))
    assert word_pow(a, -1) == word_inv(a)
    assert word_mul(word_pow(a, 3), word_pow(a, -3)) == EMPTY_WORD


def test_shift():
    assert word_shift(w((0, -1), (1, 1)), 1) == w((1, -1), (2, 1))
    assert word_shift(EMPTY_WORD, 5) == EMPTY_WORD
    assert word_shift(w((0, 1)), -1) is None
    assert word_shift(w((2, 1), (1, -1)), -1) == w((1, 1), (0, -1))


def test_y_word():
    assert y_word(1) == w((1, 1), (0, -1))
    assert y_word(3) == w((3, 1), (2, -1))
    # y2 y1 reduces to x2 x0^-1
    assert word_mul(y_word(2), y_word(1)) == w((2, 1), (0, -1))
    with pytest.raises(ValueError):
        y_word(0)


def test_x_word_validation():
    assert x_word(4) == w((4, 1))
    assert x_word(2, 0) == EMPTY_WORD
    with pytest.raises(ValueError):
        x_word(-1)


def test_from_letters_merges_and_drops():
    assert word_from_letters([(1, 1), (1, 2), (0, 0), (2, 1), (2, -1)]) == w((1, 3))
    with pytest.raises(ValueError):
        word_from_letters([(-2, 1)])


def test_associativity_random():
    rng = random.Random(4821)
    for _ in range(300):
        words = []
        for _ in range(3):
            letters = [(rng.randrange(5), rng.choice((-2, -1, 1, 2)))
                       for _ in range(rng.randrange(6))]
            words.append(word_from_letters(letters))
        a, b, c = words
        assert word_mul(word_mul(a, b), c) == word_mul(a, word_mul(b, c))
