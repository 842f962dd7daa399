# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p RREF kernel (same contract as _modp_py.modp_rref)."""


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long g = a % p, x = 1, x1 = 0, g1 = p, q, t
    while g1 != 0:
        q = g // g1
        t = g - q * g1; g = g1; g1 = t
        t = x - q * x1; x = x1; x1 = t
    x %= p
    if x < 0:
        x += p
    return x


def modp_rref(long long[:, ::1] a, long long p):
    """In-place reduced row echelon form modulo p; returns (rank, pivots)."""
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long long inv, f, v
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        i = -1
        for k in range(r, nrows):
            if a[k, c] != 0:
                i = k
                break
        if i < 0:
            continue
        if i != r:
            for j in range(ncols):
                v = a[r, j]; a[r, j] = a[i, j]; a[i, j] = v
        inv = _inv_mod(a[r, c], p)
        for j in range(c, ncols):
            a[r, j] = (a[r, j] * inv) % p
        for k in range(nrows):
            if k == r:
                continue
            f = a[k, c]
            if f == 0:
                continue
            for j in range(c, ncols):
                v = (a[k, j] - f * a[r, j]) % p
                if v < 0:
                    v += p
                a[k, j] = v
        pivots.append(c)
        r += 1
    return r, pivots
