import pytest

from nccatalan import (
    LatticePath,
    NCPoly,
    bar,
    classical_catalan,
    classical_truncated,
    enumerate_jseq,
    enumerate_paths,
    jseq_word,
    path_jseq,
    truncated,
    underline_catalan,
    word_mul,
)
from conftest import poly, w


def test_path_validation():
    LatticePath(2, "ENEN")
    with pytest.raises(ValueError):
        LatticePath(2, "NEEN")  # rises above the diagonal immediately
    with pytest.raises(ValueError):
        LatticePath(2, "EEN")
    with pytest.raises(ValueError):
        LatticePath(1, "EX")


def test_counts():
    for n in range(7):
        assert sum(1 for _ in enumerate_paths(n)) == classical_catalan(n)
    assert sum(1 for _ in enumerate_paths(3, 1)) == 3
    assert sum(1 for _ in enumerate_paths(0)) == 1
    for n in range(6):
        for k in range(n + 1):
            assert sum(1 for _ in enumerate_paths(n, k)) == classical_truncated(n, k)


def test_rejects_bad_k():
    with pytest.raises(ValueError):
        list(enumerate_paths(3, 4))


def test_monomials():
    staircase = LatticePath(2, "ENEN")
    assert staircase.monomial() == w((1, 1), (0, -1), (1, 1))
    hook = LatticePath(3, "EEENNN")
    assert hook.monomial() == w((3, 1))
    empty = LatticePath(0, "")
    assert empty.monomial() == w((0, 1))
    assert poly(*(p.monomial() for p in enumerate_paths(3))) == \
        poly(w((3, 1)), w((2, 1), (1, -1), (2, 1)), w((2, 1), (0, -1), (1, 1)),
             w((1, 1), (0, -1), (2, 1)), w((1, 1), (0, -1), (1, 1), (0, -1), (1, 1)))


def test_reflection():
    hook = LatticePath(4, "EEEENNNN")
    assert hook.reflect() == hook
    for n in range(6):
        for p in enumerate_paths(n):
            r = p.reflect()
            assert r.reflect() == p
            assert bar(NCPoly.from_word(p.monomial())) == NCPoly.from_word(r.monomial())


def test_jump_monomials():
    hook = LatticePath(3, "EEENNN")
    assert hook.jump_monomial() == w((0, 3), (1, 3))
    staircase = LatticePath(2, "ENEN")
    assert staircase.jump_monomial() == w((0, 1), (1, 1), (0, 1), (1, 1))
    for n in range(7):
        assert NCPoly((p.jump_monomial(), 1) for p in enumerate_paths(n)) == \
            underline_catalan(n)


def test_jseq_enumeration():
    assert list(enumerate_jseq(2, 2)) == [(1, 2), (2, 2)]
    assert list(enumerate_jseq(3, 0)) == [()]
    for n in range(9):
        assert sum(1 for _ in enumerate_jseq(n, n)) == classical_catalan(n)
    with pytest.raises(ValueError):
        list(enumerate_jseq(2, 3))


def test_jseq_words():
    assert jseq_word((1, 2)) == w((1, 1), (0, -1), (1, 1), (0, -1))
    assert jseq_word(()) == ()


def test_path_jseq_bijection():
    # staircase sequences classify restricted paths; the corner word times
    # x_{n-k}^-1 is the staircase word of the sequence
    for n in range(7):
        for k in range(n + 1):
            paths = list(enumerate_paths(n, k))
            seqs = [path_jseq(p, k) for p in paths]
            assert len(set(seqs)) == len(paths)
            assert set(seqs) == set(enumerate_jseq(n, k))
            for p, j in zip(paths, seqs):
                assert word_mul(p.monomial(), ((n - k, -1),)) == jseq_word(j)


def test_restricted_jseq_matches_reflected_truncated():
    x0inv = NCPoly.from_word(((0, -1),))
    for n in range(6):
        for k in range(n + 1):
            lhs = bar(truncated(n, k)) * x0inv
            rhs = NCPoly((jseq_word(j), 1) for j in enumerate_jseq(n, n, min_first=n - k))
            assert lhs == rhs
