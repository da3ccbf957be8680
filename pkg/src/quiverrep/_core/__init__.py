"""Row-reduction backend selection.

The compiled ``_gfelim`` extension accelerates GF(p) elimination for
primes below 2**31; the pure-Python kernels in :mod:`.pyelim` are the
fallback (and the only route for the rationals and for larger primes).
Both backends produce the reduced row echelon form, which is unique per
matrix, so results are bit-identical whichever is selected.

Set ``QUIVERREP_PURE=1`` to force the pure backend.
"""

from __future__ import annotations

import os

from .pyelim import rref_fraction, rref_mod_p as py_rref_mod_p

_COMPILED_LIMIT = 1 << 31

try:
    from . import _gfelim as _compiled
except ImportError:  # extension not built; pure fallback
    _compiled = None

if os.environ.get("QUIVERREP_PURE"):
    _compiled = None

HAVE_COMPILED = _compiled is not None


def compiled_rref_mod_p(rows, p):
    """GF(p) reduced row echelon form via the compiled kernel.

    Same contract as :func:`quiverrep._core.pyelim.rref_mod_p`.  Raises
    ``RuntimeError`` when the extension is unavailable.
    """
    if _compiled is None:
        raise RuntimeError("compiled kernel not available")
    import numpy as np

    arr = np.array(rows, dtype=np.int64).reshape(len(rows), len(rows[0]) if rows else 0)
    pivots = _compiled.rref_mod_p(arr, p)
    return arr.tolist(), list(pivots)


def rref_mod_p(rows, p):
    """GF(p) reduced row echelon form, best available backend."""
    if _compiled is not None and p < _COMPILED_LIMIT and rows and rows[0]:
        return compiled_rref_mod_p(rows, p)
    return py_rref_mod_p(rows, p)


__all__ = [
    "HAVE_COMPILED",
    "compiled_rref_mod_p",
    "py_rref_mod_p",
    "rref_mod_p",
    "rref_fraction",
]
