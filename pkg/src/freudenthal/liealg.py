"""Endomorphisms of the Hermitian space and exact Lie-algebra dimensions.

Membership tests are decision procedures, not sampling: the cubic condition
(phi(B), B, B) = 0 for all B is decided by full polarization over basis
triples, and the derivation identity over basis pairs (both conditions are
(multi)linear, so a basis check is equivalent to the universal statement).

The derivation-algebra dimension is certified exactly from two sides:

* upper bound -- rank of (a streamed subset of) the derivation constraint
  system modulo several word-size primes (rank mod p <= rank over Q, hence
  kernel over Q <= kernel mod p);
* lower bound -- explicit commutators of Jordan multiplication operators,
  independent modulo p (hence over Q) and verified exactly against the full
  derivation identity.

When the two bounds meet the dimension is exact.  For the two small algebras
the same kernel is recomputed by fraction-free elimination over Z and
compared, cross-checking the modular path.
"""

from fractions import Fraction
from math import gcd

import numpy as np

from ._kernels import PRIMES, ModpEchelon
from .algebras import TagMismatchError
from .jordan import (
    HermitianMatrix,
    _grid_mul,
    _read_hermitian,
    jordan_dim,
    jordan_product,
    sigma_action,
    trace,
)
from .linalg import IntEchelon, RatMat
from .scalars import QI


class NotTracelessError(ValueError):
    """The multiplication embedding requires a traceless argument."""


# ---------------------------------------------------------------------------
# cached structure constants
# ---------------------------------------------------------------------------


class _Structure:
    """Integer structure data of the Jordan product on the canonical basis."""

    def __init__(self, tag):
        d = jordan_dim(tag)
        self.tag = tag
        self.d = d
        t2 = np.zeros((d, d, d), dtype=np.int64)
        basis = [HermitianMatrix.basis(tag, k) for k in range(d)]
        for i in range(d):
            for j in range(i, d):
                prod = jordan_product(basis[i], basis[j])
                for k, c in enumerate(prod.coords()):
                    if c:
                        v = c.rational() * 2
                        if v.denominator != 1:
                            raise AssertionError("structure constants are not half-integral")
                        t2[i, j, k] = t2[j, i, k] = int(v)
        self.t2 = t2
        self.t2_sparse = [
            (i, j, k, int(t2[i, j, k]))
            for i in range(d)
            for j in range(d)
            for k in range(d)
            if t2[i, j, k]
        ]
        # l2[k] is the matrix of B -> 2 (e_k o B) acting on coordinates
        self.l2 = [np.ascontiguousarray(t2[k].T) for k in range(d)]
        # trace pairing: g2[i, j] = 2 tr(e_i o e_j)
        g2 = t2[:, :, 0] + t2[:, :, 1] + t2[:, :, 2]
        self.g2 = g2
        # cross product on basis: x4[j, k, :] = 4 (e_j x e_k) coordinates
        tr1 = np.array([1 if k < 3 else 0 for k in range(d)], dtype=np.int64)
        x4 = 2 * t2.copy()
        for j in range(d):
            for k in range(d):
                x4[j, k, k] -= 2 * tr1[j]
                x4[j, k, j] -= 2 * tr1[k]
                c = 2 * tr1[j] * tr1[k] - g2[j, k]
                x4[j, k, 0] += c
                x4[j, k, 1] += c
                x4[j, k, 2] += c
        # triple form: s8[i, j, k] = 8 (e_i, e_j, e_k), totally symmetric
        s8 = np.einsum("jkc,ic->ijk", x4, g2)
        if not (s8 == s8.transpose(1, 0, 2)).all() or not (s8 == s8.transpose(0, 2, 1)).all():
            raise AssertionError("triple form failed to be symmetric")
        self.s8 = s8
        self.s8_max = int(np.abs(s8).max())
        self._s8_obj = None

    def s8_object(self):
        if self._s8_obj is None:
            self._s8_obj = self.s8.astype(object)
        return self._s8_obj

    def l_operator(self, num_vec):
        """Matrix of B -> 2 (V o B) for V with integer coordinate vector num_vec."""
        d = self.d
        out = np.zeros((d, d), dtype=object)
        for c, j, k, val in self.t2_sparse:
            if num_vec[c]:
                out[k, j] += int(num_vec[c]) * val
        return out


_STRUCTURES = {}


def structure(tag):
    s = _STRUCTURES.get(tag.name)
    if s is None:
        s = _STRUCTURES[tag.name] = _Structure(tag)
    return s


# ---------------------------------------------------------------------------
# endomorphisms
# ---------------------------------------------------------------------------


class Endomorphism:
    """Exact linear map on the Hermitian space, in the canonical basis."""

    __slots__ = ("tag", "mat")

    def __init__(self, tag, mat):
        d = jordan_dim(tag)
        if mat.shape != (d, d):
            raise ValueError(f"matrix must be {d}x{d} for {tag}")
        self.tag = tag
        self.mat = mat

    @classmethod
    def from_qi_rows(cls, tag, rows):
        return cls(tag, RatMat.from_qi_entries(rows))

    @classmethod
    def identity(cls, tag):
        return cls(tag, RatMat.identity(jordan_dim(tag)))

    @classmethod
    def zero(cls, tag):
        return cls(tag, RatMat.zero(jordan_dim(tag)))

    def _check(self, other):
        if self.tag is not other.tag:
            raise TagMismatchError(f"{self.tag} vs {other.tag}")

    def __matmul__(self, other):
        self._check(other)
        return Endomorphism(self.tag, (self.mat @ other.mat).reduced())

    def __add__(self, other):
        self._check(other)
        return Endomorphism(self.tag, (self.mat + other.mat).reduced())

    def __sub__(self, other):
        self._check(other)
        return Endomorphism(self.tag, (self.mat - other.mat).reduced())

    def commutator(self, other):
        return self @ other - other @ self

    def apply(self, h):
        """Apply to a Hermitian matrix via its coordinate vector."""
        coords = h.coords()
        d = jordan_dim(self.tag)
        out = []
        for i in range(d):
            acc = QI(0)
            for j in range(d):
                c = coords[j]
                if c:
                    acc = acc + self.mat.entry(i, j) * c
            out.append(acc)
        return HermitianMatrix.from_coords(self.tag, out)

    def entry(self, i, j):
        return self.mat.entry(i, j)

    def is_zero(self):
        return self.mat.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.tag is other.tag and self.mat == other.mat

    def __hash__(self):
        return hash((self.tag.name, self.mat))


def mu(a):
    """The embedding A -> [B -> 2 A o B], defined on traceless A only."""
    if trace(a) != QI(0):
        raise NotTracelessError("mu requires a traceless argument")
    return multiplication_operator(a)


def multiplication_operator(a):
    """[B -> 2 A o B] for any Hermitian A (no traceless requirement)."""
    s = structure(a.tag)
    coords = a.coords()
    den = 1
    for c in coords:
        den = den * c.re.denominator // gcd(den, c.re.denominator)
        den = den * c.im.denominator // gcd(den, c.im.denominator)
    re = [int(c.re * den) for c in coords]
    im = [int(c.im * den) for c in coords]
    mre = s.l_operator(re)
    mim = s.l_operator(im) if any(im) else None
    return Endomorphism(a.tag, RatMat(mre, mim, den).reduced())


def nu(t, tag):
    """The torus representation A -> [B -> (A B) A] for diagonal A."""
    d = jordan_dim(tag)
    a = t.hermitian(tag)
    ga = a.grid()
    cols = []
    for k in range(d):
        b = HermitianMatrix.basis(tag, k)
        img = _read_hermitian(_grid_mul(_grid_mul(ga, b.grid()), ga), tag)
        cols.append(img.coords())
    rows = [[cols[j][i] for j in range(d)] for i in range(d)]
    return Endomorphism(tag, RatMat.from_qi_entries(rows))


def sigma_endomorphism(perm, tag):
    """The coordinate matrix of the permutation action."""
    d = jordan_dim(tag)
    cols = [sigma_action(perm, HermitianMatrix.basis(tag, k)).coords() for k in range(d)]
    rows = [[cols[j][i] for j in range(d)] for i in range(d)]
    return Endomorphism(tag, RatMat.from_qi_entries(rows))


# ---------------------------------------------------------------------------
# membership decision procedures
# ---------------------------------------------------------------------------


def _sym3(t):
    """U[a,b,c] = T[a,b,c] + T[b,a,c] + T[c,a,b] (polarized cubic condition)."""
    return t + t.transpose(1, 0, 2) + t.transpose(1, 2, 0)


def _vanishes_sym3(num, s):
    bound = int(np.abs(num).max()) if num.size else 0
    if bound < (2**61) // (s.d * max(s.s8_max, 1) * 3):
        t = np.einsum("ib,ijk->bjk", num.astype(np.int64), s.s8)
    else:
        t = np.tensordot(num, s.s8_object(), axes=([0], [0]))
    return not _sym3(t).any()


def is_in_sl3(phi):
    """Does phi annihilate the cubic form: (phi(B), B, B) = 0 for all B?

    Decided exactly by polarizing the cubic condition over all basis triples;
    the condition is linear in phi, so denominators are irrelevant.
    """
    s = structure(phi.tag)
    m = phi.mat
    if not _vanishes_sym3(m.re, s):
        return False
    if m.has_im and not _vanishes_sym3(m.im, s):
        return False
    return True


def _derivation_holds(num, s):
    """Check psi L_k - L_k psi = L_{psi(e_k)} for all k (numerators only)."""
    d = s.d
    bound = int(np.abs(num).max()) if num.size else 0
    use_i64 = bound < (2**61) // (4 * d)
    work = num.astype(np.int64) if use_i64 else num
    for k in range(d):
        lk = s.l2[k] if use_i64 else s.l2[k].astype(object)
        lv = s.l_operator([int(x) for x in num[:, k]])
        if use_i64:
            lv = lv.astype(np.int64)
        defect = work @ lk - lk @ work - lv
        if defect.any():
            return False
    return True


def is_derivation(psi):
    """Does psi satisfy psi(B o C) = psi(B) o C + B o psi(C) on all basis pairs?

    Equivalent matrix form, checked per basis element: [psi, L_k] = L_{psi(e_k)}.
    """
    s = structure(psi.tag)
    m = psi.mat
    if not _derivation_holds(m.re, s):
        return False
    if m.has_im and not _derivation_holds(m.im, s):
        return False
    return True


# ---------------------------------------------------------------------------
# the derivation algebra: exact dimension via two-sided certification
# ---------------------------------------------------------------------------


def _constraint_block(s, i, j):
    """The d x d^2 block of derivation constraints from the basis pair (i, j)."""
    d = s.d
    t2 = s.t2
    block = np.zeros((d, d * d), dtype=np.int64)
    cols = np.arange(d, dtype=np.int64)
    for k in range(d):
        block[k, k * d : (k + 1) * d] += t2[i, j, :]
        block[k, cols * d + i] -= t2[:, j, k]
        block[k, cols * d + j] -= t2[i, :, k]
    return block


def _constraint_pairs(d):
    return [(i, j) for i in range(d) for j in range(i, d)]


def inner_derivations(tag, limit=None):
    """Exactly verified, Q-independent commutators [L_a, L_b] on basis pairs.

    Independence is certified modulo a prime (integer vectors independent
    mod p are independent over Q); each kept operator passes the exact
    derivation check.  Returns a list of integer matrices.
    """
    s = structure(tag)
    d = s.d
    p = PRIMES[0]
    ech = ModpEchelon(d * d, p)
    kept = []
    for i in range(d):
        for j in range(i + 1, d):
            comm = s.l2[i] @ s.l2[j] - s.l2[j] @ s.l2[i]
            if not comm.any():
                continue
            before = ech.rank
            ech.add_rows(comm.reshape(1, d * d))
            if ech.rank > before:
                kept.append(comm)
                if limit and len(kept) >= limit:
                    return kept
    return kept


def derivation_algebra_dim(tag, progress=None, primes=PRIMES, batch_pairs=30):
    """Exact dimension of the derivation algebra of the Jordan product.

    Streams constraint blocks into a mod-p echelon until the kernel dimension
    meets the exactly-verified lower bound; repeats at several primes.  Never
    materializes the full dense system.
    """
    s = structure(tag)
    d = s.d

    def say(msg):
        if progress:
            progress(msg)

    say(f"{tag}: collecting independent inner derivations")
    witnesses = inner_derivations(tag)
    for w in witnesses:
        if not _derivation_holds(w.astype(object), s):
            raise ArithmeticError("inner-derivation witness failed the exact check")
    lower = len(witnesses)
    say(f"{tag}: {lower} exact witnesses; streaming constraints")

    pairs = _constraint_pairs(d)
    upper = None
    for p in primes:
        ech = ModpEchelon(d * d, p)
        for start in range(0, len(pairs), batch_pairs):
            batch = pairs[start : start + batch_pairs]
            rows = np.vstack([_constraint_block(s, i, j) for i, j in batch])
            ech.add_rows(rows)
            say(f"{tag}: p={p} pairs<={start + len(batch)} kernel<={ech.kernel_dim()}")
            if ech.kernel_dim() == lower:
                break
        kd = ech.kernel_dim()
        upper = kd if upper is None else min(upper, kd)
        if upper == lower:
            break
    if upper != lower:
        raise ArithmeticError(
            f"derivation dimension not certified: witnesses {lower}, modular bound {upper}"
        )
    if d * d <= 100:
        exact = _derivation_dim_fraction_free(tag)
        if exact != lower:
            raise ArithmeticError(
                f"fraction-free cross-check disagrees: {exact} vs {lower}"
            )
    return lower


def _derivation_dim_fraction_free(tag):
    """Kernel dimension of the full derivation system over Z (small tags only)."""
    s = structure(tag)
    d = s.d
    ech = IntEchelon(d * d)
    for i, j in _constraint_pairs(d):
        for row in _constraint_block(s, i, j):
            if row.any():
                ech.add_row(row.tolist())
    return ech.kernel_dim()


def derivation_dim_modular_only(tag, p):
    """Plain mod-p kernel dimension of the full streamed system (for cross-checks)."""
    s = structure(tag)
    ech = ModpEchelon(s.d * s.d, p)
    for i, j in _constraint_pairs(s.d):
        ech.add_rows(_constraint_block(s, i, j))
    return ech.kernel_dim()


# ---------------------------------------------------------------------------
# the centralizer of the diagonal Cartan plane inside the traceless space
# ---------------------------------------------------------------------------


def diagonal_cartan_basis(tag):
    """diag(1,-1,0) and diag(0,1,-1): a basis of the traceless diagonal plane."""
    return (
        HermitianMatrix.diag(tag, 1, -1, 0),
        HermitianMatrix.diag(tag, 0, 1, -1),
    )


def centralizer_in_traceless(tag):
    """(dimension, basis vectors) of {A traceless : [mu(A), mu(H)] = 0, H diagonal Cartan}.

    The commutation conditions are linear in A; the system is eliminated
    fraction-free over Z and the kernel returned as primitive integer
    coordinate vectors.
    """
    s = structure(tag)
    d = s.d
    lb = [
        s.l2[0] - s.l2[1],  # L of diag(1,-1,0), times 2
        s.l2[1] - s.l2[2],  # L of diag(0,1,-1), times 2
    ]
    cols = []
    for c in range(d):
        col = []
        for b in lb:
            comm = s.l2[c] @ b - b @ s.l2[c]
            col.extend(comm.reshape(-1).tolist())
        cols.append(col)
    ech = IntEchelon(d)
    ech.add_row([1, 1, 1] + [0] * (d - 3))  # tracelessness
    nrows = len(cols[0])
    for r in range(nrows):
        row = [cols[c][r] for c in range(d)]
        if any(row):
            ech.add_row(row)
    basis = ech.kernel_basis()
    return len(basis), basis


def centralizer_dim_in_j0(tag):
    return centralizer_in_traceless(tag)[0]
