"""Hot kernels: dense row reduction of int64 matrices modulo a word-size prime.

The compiled Cython extension is preferred; a numpy implementation is the
fallback.  Selection happens once at import time and can be forced with the
environment variable FREUDENTHAL_FORCE_BACKEND=python|cython.  Both backends
implement the same deterministic pivoting rule and return identical results.

Primes are kept below 2**26 so that a dot product of two reduced rows of
length <= 1024 stays below 2**63 (no overflow in int64 accumulation).
"""

import os

import numpy as np

from . import _modp_py

# Verified primes just under 2**26; products of residues fit int64 even when
# 1024 of them are accumulated without intermediate reduction.
PRIMES = (67108859, 67108837, 67108819)

_forced = os.environ.get("FREUDENTHAL_FORCE_BACKEND", "")
if _forced == "python":
    _impl = _modp_py
    BACKEND = "python"
else:
    try:
        from . import _modp as _impl  # compiled extension

        BACKEND = "cython"
    except ImportError:
        if _forced == "cython":
            raise
        _impl = _modp_py
        BACKEND = "python"


def available_backends():
    out = {"python": _modp_py}
    try:
        from . import _modp

        out["cython"] = _modp
    except ImportError:
        pass
    return out


def modp_rref(a, p, impl=None):
    """Reduced row echelon form of `a` modulo p, in place.

    `a` must be a C-contiguous int64 2-D array with entries in [0, p).
    Returns (rank, pivot_columns).
    """
    impl = impl or _impl
    if a.size == 0:
        return 0, []
    return impl.modp_rref(a, p)


def modp_reduce_rows(rows, rref, pivots, p):
    """Reduce `rows` against an RREF block, zeroing its pivot columns.

    One integer matmul; no overflow because entries are < 2**26 and the
    contraction length is bounded by the column count (<= 1024).
    """
    if rref.shape[0] == 0 or rows.shape[0] == 0:
        return rows % p
    rows = rows % p
    coeff = rows[:, pivots]
    return (rows - coeff @ rref) % p


class ModpEchelon:
    """Streaming echelon accumulator over GF(p) for constraint batches."""

    def __init__(self, ncols, p, impl=None):
        self.ncols = ncols
        self.p = p
        self._impl = impl
        self.rows = np.zeros((0, ncols), dtype=np.int64)
        self.pivots = []

    @property
    def rank(self):
        return self.rows.shape[0]

    def add_rows(self, rows):
        """Absorb a batch of integer rows; returns self."""
        rows = np.ascontiguousarray(np.asarray(rows, dtype=np.int64))
        if rows.size == 0:
            return self
        rows = modp_reduce_rows(rows, self.rows, self.pivots, self.p)
        rows = rows[np.any(rows, axis=1)]
        if rows.shape[0] == 0:
            return self
        stacked = np.ascontiguousarray(np.vstack([self.rows, rows]))
        rank, pivots = modp_rref(stacked, self.p, impl=self._impl)
        self.rows = np.ascontiguousarray(stacked[:rank])
        self.pivots = pivots
        return self

    def kernel_dim(self):
        return self.ncols - self.rank

    def kernel_basis(self):
        """Kernel vectors mod p, one per free column (rows of the result)."""
        free = [c for c in range(self.ncols) if c not in set(self.pivots)]
        basis = np.zeros((len(free), self.ncols), dtype=np.int64)
        for i, c in enumerate(free):
            basis[i, c] = 1
            for r, pc in enumerate(self.pivots):
                basis[i, pc] = (-int(self.rows[r, c])) % self.p
        return basis
