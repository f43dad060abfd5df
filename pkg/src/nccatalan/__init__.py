"""Exact arithmetic for noncommutative Catalan numbers.

The objects live in the integer group ring of the free group on
x0, x1, ...: the Catalan values themselves, their truncated and
staircase forms, two kinds of noncommutative binomial coefficients,
Hankel blocks with triangular factorizations and inverses, and the
q-character into Laurent polynomials.

Everything is exact (arbitrary-precision integers) and immutable; the
hot kernels run compiled when the optional C extension is available
(see nccatalan.backend.BACKEND).
"""

from .backend import BACKEND
from .binomials import (
    binom_first,
    binom_first_pascal,
    binom_from_cnk,
    binom_second,
    binom_second_pascal,
    cnk_from_binomials,
)
from .catalan import (
    catalan,
    catalan_oracle,
    classical_catalan,
    classical_truncated,
    dd_truncated,
    tilde_oracle,
    truncated,
    truncated_oracle,
    truncated_tilde,
    underline_catalan,
    underline_oracle,
)
from .identities import REGISTRY, run_suite, suite_ids
from .matrices import (
    NCMatrix,
    gauss_L,
    gauss_U,
    hankel,
    hankel_inverse,
    inv_L,
    inv_U,
    invert_unitriangular,
    mat_identity,
    quasidet_bordered,
)
from .paths import LatticePath, enumerate_jseq, enumerate_paths, jseq_word, path_jseq
from .qpoly import (
    QPoly,
    chi_q,
    det_bareiss,
    exact_div,
    format_qpoly,
    gh_cnk,
    parse_qpoly,
    q_binomial,
    q_hankel_det,
    q_int,
    qpoly_from_obj,
    qpoly_to_obj,
)
from .ring import (
    EMPTY_WORD,
    NCPoly,
    bar,
    eps,
    pi,
    shift,
    sigma,
    word_bar,
    word_from_letters,
    word_inv,
    word_mul,
    word_pow,
    word_shift,
    x_word,
    y_word,
)
from .serialize import (
    ParseError,
    format_poly,
    latex_poly,
    parse_poly,
    poly_from_obj,
    poly_to_obj,
)

__version__ = "0.1.0"
