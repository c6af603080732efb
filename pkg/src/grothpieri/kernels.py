"""Select the compiled kernels when available, else the pure-Python ones.

Set ``GROTHPIERI_PURE=1`` to force the pure-Python path.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("GROTHPIERI_PURE"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

inversions = _impl.inversions
is_cover = _impl.is_cover
poly_mul = _impl.poly_mul
poly_axpy = _impl.poly_axpy
divdiff = _impl.divdiff
isobaric = _impl.isobaric
lowest_lex_min = _impl.lowest_lex_min

__all__ = [
    "BACKEND",
    "inversions",
    "is_cover",
    "poly_mul",
    "poly_axpy",
    "divdiff",
    "isobaric",
    "lowest_lex_min",
]
