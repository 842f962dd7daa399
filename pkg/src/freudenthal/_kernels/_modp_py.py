"""numpy fallback for the mod-p RREF kernel (same contract as _modp.pyx)."""

import numpy as np


def modp_rref(a, p):
    """In-place reduced row echelon form of int64 matrix `a` modulo p.

    Pivoting rule (must match the compiled kernel): scan columns left to
    right, take the first row at or below the current one with a nonzero
    entry.  Returns (rank, pivot_columns).
    """
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        coeff = a[:, c].copy()
        coeff[r] = 0
        rows = np.nonzero(coeff)[0]
        if rows.size:
            a[rows, c:] = (a[rows, c:] - np.outer(coeff[rows], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return r, pivots
