"""Exact linear and lattice algebra.

Three layers, all exact:

* ``QIMatrix`` / ``rank_and_kernel`` -- dense matrices over Q(i), eliminated
  fraction-free (Bareiss) over the Gaussian integers after clearing
  denominators.
* integer lattice tools -- Hermite/Smith normal forms with unimodular
  transforms, saturated integer kernels, lattice membership.
* ``RatMat`` -- rational matrices stored as integer numerator arrays plus a
  common denominator, the workhorse for endomorphism arithmetic (numpy object
  arrays keep Python-int exactness while using C-level loops).
"""

from fractions import Fraction
from math import gcd

import numpy as np

from .scalars import QI

# ---------------------------------------------------------------------------
# Gaussian-integer helpers (entries as (re, im) int pairs)
# ---------------------------------------------------------------------------


def _zi_mul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def _zi_div_exact(x, y):
    a, b = x
    c, d = y
    n = c * c + d * d
    re, rre = divmod(a * c + b * d, n)
    im, rim = divmod(b * c - a * d, n)
    if rre or rim:
        raise ArithmeticError("inexact Gaussian-integer division")
    return (re, im)


class QIMatrix:
    """Dense matrix over Q(i) with consistent dimensions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = [[e if isinstance(e, QI) else QI(e) for e in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n):
        return cls([[QI(1 if i == j else 0) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def _clear_row_denominators(row):
    """Scale a row of QI by a positive integer to Gaussian-integer pairs."""
    m = 1
    for e in row:
        m = m * e.re.denominator // gcd(m, e.re.denominator)
        m = m * e.im.denominator // gcd(m, e.im.denominator)
    return [
        (int(e.re.numerator * (m // e.re.denominator)), int(e.im.numerator * (m // e.im.denominator)))
        for e in row
    ]


def _zi_echelon(mat):
    """Fraction-free (Bareiss) echelon form over Z[i]; returns (rows, pivot cols)."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    prev = (1, 0)
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if mat[i][c] != (0, 0)), None)
        if pivot is None:
            continue
        if pivot != r:
            mat[r], mat[pivot] = mat[pivot], mat[r]
        prc = mat[r][c]
        for k in range(r + 1, m):
            mkc = mat[k][c]
            if mkc == (0, 0) and all(mat[k][j] == (0, 0) for j in range(c, n)):
                continue
            for j in range(c + 1, n):
                a = _zi_mul(prc, mat[k][j])
                b = _zi_mul(mkc, mat[r][j])
                mat[k][j] = _zi_div_exact((a[0] - b[0], a[1] - b[1]), prev)
            mat[k][c] = (0, 0)
        prev = prc
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def rank_and_kernel(matrix):
    """Exact rank and kernel basis of a matrix over Q(i).

    The kernel basis is normalized (first nonzero coordinate 1) and satisfies
    M v = 0 exactly.  Returns (rank, [vectors as QI lists]).
    """
    if isinstance(matrix, QIMatrix):
        rows = matrix.entries
    else:
        rows = [[e if isinstance(e, QI) else QI(e) for e in row] for row in matrix]
    if not rows or not rows[0]:
        return 0, []
    n = len(rows[0])
    work = [_clear_row_denominators(row) for row in rows]
    ech, pivots = _zi_echelon(work)
    rank = len(pivots)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [QI(0)] * n
        v[f] = QI(1)
        for i in range(rank - 1, -1, -1):
            pc = pivots[i]
            s = QI(0)
            for j in range(pc + 1, n):
                if ech[i][j] != (0, 0) and v[j]:
                    s = s + QI(Fraction(ech[i][j][0]), Fraction(ech[i][j][1])) * v[j]
            piv = QI(Fraction(ech[i][pc][0]), Fraction(ech[i][pc][1]))
            v[pc] = -s / piv
        lead = next(x for x in v if x)
        basis.append([x / lead for x in v])
    return rank, basis


# ---------------------------------------------------------------------------
# Integer lattice algebra
# ---------------------------------------------------------------------------


def _xgcd(a, b):
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return g, x, y


def hermite_normal_form(rows):
    """Row-style HNF with transform: returns (H, U) with U @ A = H.

    U is unimodular; H has positive pivots, entries above each pivot reduced
    into [0, pivot), and zero rows at the bottom.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if a[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
            u[r], u[pivot] = u[pivot], u[r]
        for k in range(r + 1, m):
            while a[k][c]:
                g, x, y = _xgcd(a[r][c], a[k][c])
                pr, qr = a[r][c] // g, a[k][c] // g
                a[r], a[k] = (
                    [x * a[r][j] + y * a[k][j] for j in range(n)],
                    [-qr * a[r][j] + pr * a[k][j] for j in range(n)],
                )
                u[r], u[k] = (
                    [x * u[r][j] + y * u[k][j] for j in range(m)],
                    [-qr * u[r][j] + pr * u[k][j] for j in range(m)],
                )
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [a[i][j] - q * a[r][j] for j in range(n)]
                u[i] = [u[i][j] - q * u[r][j] for j in range(m)]
        pivots.append(c)
        r += 1
    return a, u


def hnf_basis(rows):
    """Canonical HNF basis (nonzero rows only) of the lattice spanned by rows."""
    h, _ = hermite_normal_form(rows)
    return [row for row in h if any(row)]


def integer_kernel(rows):
    """Saturated Z-basis of {v : A v = 0} for an integer matrix A (list of rows).

    The result generates the full kernel as a Z-module; returned in canonical
    HNF form.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    if m == 0:
        raise ValueError("empty matrix")
    n = len(a[0])
    bt = [[a[i][j] for i in range(m)] for j in range(n)]  # A^T rows = columns of A
    h, u = hermite_normal_form(bt)
    kern = [u[i] for i in range(n) if not any(h[i])]
    return hnf_basis(kern) if kern else []


def smith_normal_form(rows):
    """Invariant factors of an integer matrix (d1 | d2 | ...), nonneg."""
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j]:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            # clear column t
            for i in range(t + 1, m):
                while a[i][t]:
                    g, x, y = _xgcd(a[t][t], a[i][t])
                    pr, qr = a[t][t] // g, a[i][t] // g
                    a[t], a[i] = (
                        [x * a[t][k] + y * a[i][k] for k in range(n)],
                        [-qr * a[t][k] + pr * a[i][k] for k in range(n)],
                    )
            # clear row t
            for j in range(t + 1, n):
                while a[t][j]:
                    g, x, y = _xgcd(a[t][t], a[t][j])
                    pr, qr = a[t][t] // g, a[t][j] // g
                    for row in a:
                        row[t], row[j] = x * row[t] + y * row[j], -qr * row[t] + pr * row[j]
            if all(a[i][t] == 0 for i in range(t + 1, m)):
                break
        # divisibility: fold any entry not divisible by the pivot back in
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            a[t] = [a[t][k] + a[bad][k] for k in range(n)]
            continue
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def in_lattice(basis_rows, v):
    """Is v in the Z-span of the given basis rows?"""
    if not basis_rows:
        return not any(v)
    h = hnf_basis(basis_rows)
    n = len(v)
    res = list(map(int, v))
    pivots = [next(j for j in range(n) if row[j]) for row in h]
    for row, pc in zip(h, pivots):
        if res[pc] % row[pc]:
            return False
        q = res[pc] // row[pc]
        if q:
            res = [res[j] - q * row[j] for j in range(n)]
    return not any(res)


def lattices_equal(basis_a, basis_b):
    return hnf_basis(basis_a) == hnf_basis(basis_b)


# ---------------------------------------------------------------------------
# Rational (real) dense solving, used by the cone machinery
# ---------------------------------------------------------------------------


def solve_rational(a_rows, b):
    """One exact solution of A x = b over Q, or None if inconsistent.

    Free variables are set to 0.  Entries may be ints or Fractions.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a_rows, b)]
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


def symmetric_signature(rows):
    """(n_plus, n_minus, n_zero) of a symmetric rational matrix, by congruence."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    pos = neg = zero = 0
    for t in range(n):
        if a[t][t] == 0:
            k = next((k for k in range(t + 1, n) if a[k][k] != 0), None)
            if k is None:
                k = next((k for k in range(t + 1, n) if a[t][k] != 0), None)
                if k is None:
                    zero += 1
                    continue
                for j in range(n):
                    a[t][j] += a[k][j]
                for i in range(n):
                    a[i][t] += a[i][k]
            else:
                a[t], a[k] = a[k], a[t]
                for i in range(n):
                    a[i][t], a[i][k] = a[i][k], a[i][t]
        p = a[t][t]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(t + 1, n):
            f = a[i][t] / p
            if f:
                for j in range(n):
                    a[i][j] -= f * a[t][j]
                for j in range(n):
                    a[j][i] -= f * a[j][t]
    return pos, neg, zero


# ---------------------------------------------------------------------------
# Incremental fraction-free echelon over Z (real coefficients)
# ---------------------------------------------------------------------------


class IntEchelon:
    """Streaming row echelon over Z with gcd-reduced primitive rows.

    Rows are reduced pairwise (fraction-free); the kernel is recovered over Q
    at the end.  Suitable for constraint systems fed in batches.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivot_rows = {}  # pivot column -> primitive row

    @property
    def rank(self):
        return len(self.pivot_rows)

    def add_row(self, row):
        row = list(map(int, row))
        for c in sorted(self.pivot_rows):
            if row[c]:
                p = self.pivot_rows[c]
                a, b = p[c], row[c]
                row = [a * x - b * y for x, y in zip(row, p)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                if g > 1:
                    row = [x // g for x in row]
        lead = next((c for c in range(self.ncols) if row[c]), None)
        if lead is None:
            return False
        g = 0
        for x in row:
            g = gcd(g, x)
        if row[lead] < 0:
            g = -g
        self.pivot_rows[lead] = [x // g for x in row]
        return True

    def add_rows(self, rows):
        for row in rows:
            self.add_row(row)
        return self

    def kernel_dim(self):
        return self.ncols - self.rank

    def kernel_basis(self):
        """Kernel basis over Q, scaled to primitive integer vectors."""
        pivots = sorted(self.pivot_rows)
        free = [c for c in range(self.ncols) if c not in self.pivot_rows]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for pc in reversed(pivots):
                row = self.pivot_rows[pc]
                s = sum((Fraction(row[j]) * v[j] for j in range(pc + 1, self.ncols) if row[j] and v[j]), Fraction(0))
                v[pc] = -s / row[pc]
            den = 1
            for x in v:
                den = den * x.denominator // gcd(den, x.denominator)
            ints = [int(x * den) for x in v]
            g = 0
            for x in ints:
                g = gcd(g, x)
            basis.append([x // g for x in ints])
        return basis


# ---------------------------------------------------------------------------
# RatMat: exact rational matrices as integer numerators / common denominator
# ---------------------------------------------------------------------------


def _obj_array(rows):
    a = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            a[i, j] = int(x)
    return a


class RatMat:
    """(num_re + i*num_im) / den with Python-int numpy arrays, exact throughout."""

    __slots__ = ("re", "im", "den", "has_im")

    def __init__(self, re, im=None, den=1):
        self.re = re
        self.im = im
        self.den = int(den)
        self.has_im = im is not None and bool(np.any(im))
        if not self.has_im:
            self.im = None
        if self.den <= 0:
            raise ValueError("denominator must be positive")

    @classmethod
    def from_int_rows(cls, rows, den=1):
        return cls(_obj_array(rows), None, den)

    @classmethod
    def zero(cls, n, m=None):
        m = n if m is None else m
        return cls(np.zeros((n, m), dtype=object), None, 1)

    @classmethod
    def identity(cls, n):
        a = np.zeros((n, n), dtype=object)
        for i in range(n):
            a[i, i] = 1
        return cls(a, None, 1)

    @classmethod
    def from_qi_entries(cls, entries):
        """Build from a grid of QI values, clearing all denominators."""
        den = 1
        for row in entries:
            for e in row:
                den = den * e.re.denominator // gcd(den, e.re.denominator)
                den = den * e.im.denominator // gcd(den, e.im.denominator)
        re = _obj_array([[e.re * den for e in row] for row in entries])
        im_rows = [[e.im * den for e in row] for row in entries]
        im = _obj_array(im_rows) if any(any(x for x in row) for row in im_rows) else None
        return cls(re, im, den)

    @property
    def shape(self):
        return self.re.shape

    def entry(self, i, j):
        re = Fraction(int(self.re[i, j]), self.den)
        im = Fraction(int(self.im[i, j]), self.den) if self.has_im else Fraction(0)
        return QI(re, im)

    def to_qi_entries(self):
        n, m = self.shape
        return [[self.entry(i, j) for j in range(m)] for i in range(n)]

    def __matmul__(self, other):
        re = self.re @ other.re
        im = None
        if self.has_im and other.has_im:
            re = re - self.im @ other.im
        if self.has_im or other.has_im:
            parts = []
            if other.has_im:
                parts.append(self.re @ other.im)
            if self.has_im:
                parts.append(self.im @ other.re)
            im = parts[0] if len(parts) == 1 else parts[0] + parts[1]
        return RatMat(re, im, self.den * other.den)

    def _aligned(self, other):
        d = self.den * other.den // gcd(self.den, other.den)
        fs, fo = d // self.den, d // other.den
        return fs, fo, d

    def __add__(self, other):
        fs, fo, d = self._aligned(other)
        re = self.re * fs + other.re * fo
        im = None
        if self.has_im or other.has_im:
            a = self.im * fs if self.has_im else 0
            b = other.im * fo if other.has_im else 0
            im = a + b
        return RatMat(re, im, d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RatMat(-self.re, -self.im if self.has_im else None, self.den)

    def scale(self, q):
        """Multiply by an exact rational (Fraction or int)."""
        q = Fraction(q)
        re = self.re * q.numerator
        im = self.im * q.numerator if self.has_im else None
        return RatMat(re, im, self.den * q.denominator).reduced()

    def commutator(self, other):
        return self @ other - other @ self

    def reduced(self):
        g = self.den
        for v in self.re.flat:
            g = gcd(g, int(v))
            if g == 1:
                break
        if g != 1 and self.has_im:
            for v in self.im.flat:
                g = gcd(g, int(v))
                if g == 1:
                    break
        if g > 1:
            return RatMat(self.re // g, self.im // g if self.has_im else None, self.den // g)
        return self

    def is_zero(self):
        return not np.any(self.re) and not self.has_im

    def __eq__(self, other):
        if not isinstance(other, RatMat):
            return NotImplemented
        if (self.re * other.den != other.re * self.den).any():
            return False
        if self.has_im != other.has_im:
            a = self.im if self.has_im else other.im
            return not np.any(a)
        if self.has_im and (self.im * other.den != other.im * self.den).any():
            return False
        return True

    def __hash__(self):
        r = self.reduced()
        return hash((r.den, tuple(int(x) for x in r.re.flat)))

    def max_abs(self):
        m = max((abs(int(v)) for v in self.re.flat), default=0)
        if self.has_im:
            m = max(m, max((abs(int(v)) for v in self.im.flat), default=0))
        return m

    def mod_p(self, p):
        """Residue matrices (re, im) as int64 arrays; denominator inverted mod p."""
        dinv = pow(self.den % p, p - 2, p)
        re = ((self.re % p) * dinv % p).astype(np.int64)
        im = None
        if self.has_im:
            im = ((self.im % p) * dinv % p).astype(np.int64)
        return re, im
