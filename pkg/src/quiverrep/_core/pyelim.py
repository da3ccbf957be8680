"""Pure-Python row reduction kernels.

Reference implementations of the reduced row echelon form used by
:mod:`quiverrep.matrix`.  The mod-p variant has the same contract as the
compiled extension in ``_gfelim`` and is used whenever the extension is
unavailable (or the prime exceeds the 31-bit kernel limit).
"""

from __future__ import annotations

from fractions import Fraction


def rref_mod_p(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(p).

    Returns ``(reduced_rows, pivot_columns)``; the input is not modified.
    """
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    piv_r = 0
    for c in range(ncols):
        if piv_r == nrows:
            break
        src = -1
        for r in range(piv_r, nrows):
            if m[r][c] % p != 0:
                src = r
                break
        if src < 0:
            continue
        if src != piv_r:
            m[piv_r], m[src] = m[src], m[piv_r]
        inv = pow(m[piv_r][c], p - 2, p)
        row_p = m[piv_r]
        for k in range(c, ncols):
            row_p[k] = row_p[k] * inv % p
        for r in range(nrows):
            if r == piv_r:
                continue
            f = m[r][c] % p
            if f:
                row_r = m[r]
                for k in range(c, ncols):
                    row_r[k] = (row_r[k] - f * row_p[k]) % p
        pivots.append(c)
        piv_r += 1
    return m, pivots


def rref_fraction(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals (exact)."""
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    piv_r = 0
    for c in range(ncols):
        if piv_r == nrows:
            break
        src = -1
        for r in range(piv_r, nrows):
            if m[r][c] != 0:
                src = r
                break
        if src < 0:
            continue
        if src != piv_r:
            m[piv_r], m[src] = m[src], m[piv_r]
        inv = 1 / m[piv_r][c]
        row_p = m[piv_r]
        for k in range(c, ncols):
            row_p[k] = row_p[k] * inv
        for r in range(nrows):
            if r == piv_r:
                continue
            f = m[r][c]
            if f:
                row_r = m[r]
                for k in range(c, ncols):
                    row_r[k] = row_r[k] - f * row_p[k]
        pivots.append(c)
        piv_r += 1
    return m, pivots
