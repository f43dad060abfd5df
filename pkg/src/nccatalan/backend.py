"""Kernel selection: compiled Cython extension if importable, else pure Python.

Set NCCATALAN_PURE=1 to force the pure-Python kernel (used by the
backend-parity tests and the benchmark).
"""

import os

if os.environ.get("NCCATALAN_PURE"):
    from . import _pykernel as kernel

    BACKEND = "pure"
else:
    try:
        from . import _kernel as kernel  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _pykernel as kernel

        BACKEND = "pure"

word_mul = kernel.word_mul
poly_mul = kernel.poly_mul
poly_add = kernel.poly_add
poly_accumulate = kernel.poly_accumulate
poly_shift = kernel.poly_shift
