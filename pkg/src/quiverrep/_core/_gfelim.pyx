# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-reduction kernel over GF(p) for word-sized primes p < 2**31.

Entries are canonical residues stored as int64; with p < 2**31 every
intermediate product fits in a signed 64-bit word.
"""


cdef long long _modinv(long long a, long long p):
    # Fermat: a^(p-2) mod p, p prime.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rref_mod_p(long long[:, ::1] a, long long p):
    """Reduce ``a`` to reduced row echelon form mod p, in place.

    Returns the list of pivot column indices.
    """
    cdef Py_ssize_t nrows = a.shape[0]
    cdef Py_ssize_t ncols = a.shape[1]
    cdef Py_ssize_t piv_r = 0, src, r, c, k
    cdef long long inv, f, tmp
    pivots = []
    for c in range(ncols):
        if piv_r == nrows:
            break
        src = -1
        for r in range(piv_r, nrows):
            if a[r, c] % p != 0:
                src = r
                break
        if src < 0:
            continue
        if src != piv_r:
            for k in range(ncols):
                tmp = a[piv_r, k]
                a[piv_r, k] = a[src, k]
                a[src, k] = tmp
        inv = _modinv(a[piv_r, c], p)
        for k in range(c, ncols):
            a[piv_r, k] = a[piv_r, k] * inv % p
        for r in range(nrows):
            if r == piv_r:
                continue
            f = a[r, c] % p
            if f != 0:
                for k in range(c, ncols):
                    tmp = (a[r, k] - f * a[piv_r, k]) % p
                    if tmp < 0:
                        tmp += p
                    a[r, k] = tmp
        pivots.append(c)
        piv_r += 1
    return pivots
