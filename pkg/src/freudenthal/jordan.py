"""Hermitian 3x3 matrices over a composition algebra and their cubic calculus.

The space carries the Jordan product A o B = (AB + BA)/2.  Composite
expressions are evaluated in a general 3x3-over-algebra workspace with the
parenthesization written out, because the octonion case is not associative;
only symmetrized results are read back into Hermitian form (with an exact
hermiticity guard).

Closed formulas implemented here: the linear/quadratic/cubic traces, the
determinant, the comatrix com(A) = A^2 - tr(A) A + ((tr A)^2 - tr(A^2))/2 Id,
its polarization A x B, and the symmetric triple form (A, B, C).
"""

from fractions import Fraction

from .algebras import AlgElement, TagMismatchError
from .scalars import QI, QI_ONE, QI_ZERO

HALF = QI(Fraction(1, 2))
THIRD = QI(Fraction(1, 3))


class HermiticityBrokenError(AssertionError):
    """A symmetrized product failed to be Hermitian (internal guard)."""


class TorusConstraintError(ValueError):
    """Diagonal torus element with product of eigenvalues != 1."""


class ZeroInputError(ValueError):
    """(t, A) = (0, 0) has no image point."""


def jordan_dim(tag):
    """Ambient dimension of the Hermitian space: 3 + 3 * dim(algebra)."""
    return 3 + 3 * tag.dim


class HermitianMatrix:
    """r1, r2, r3 on the diagonal; x1, x2, x3 the independent entries below it."""

    __slots__ = ("tag", "r", "x")

    def __init__(self, tag, r, x):
        self.tag = tag
        self.r = tuple(v if isinstance(v, QI) else QI(v) for v in r)
        self.x = tuple(x)
        if len(self.r) != 3 or len(self.x) != 3:
            raise ValueError("need 3 scalars and 3 algebra entries")
        for xi in self.x:
            if xi.tag is not tag:
                raise TagMismatchError("entry from a different algebra")

    # -- constructors -----------------------------------------------------

    @classmethod
    def diag(cls, tag, r1, r2, r3):
        z = AlgElement.zero(tag)
        return cls(tag, (r1, r2, r3), (z, z, z))

    @classmethod
    def identity(cls, tag):
        return cls.diag(tag, 1, 1, 1)

    @classmethod
    def zero(cls, tag):
        return cls.diag(tag, 0, 0, 0)

    @classmethod
    def from_coords(cls, tag, coords):
        m = tag.dim
        if len(coords) != jordan_dim(tag):
            raise ValueError("coordinate vector has wrong length")
        coords = [c if isinstance(c, QI) else QI(c) for c in coords]
        xs = [AlgElement(tag, coords[3 + i * m : 3 + (i + 1) * m]) for i in range(3)]
        return cls(tag, coords[:3], xs)

    @classmethod
    def basis(cls, tag, k):
        coords = [QI_ZERO] * jordan_dim(tag)
        coords[k] = QI_ONE
        return cls.from_coords(tag, coords)

    def coords(self):
        out = list(self.r)
        for xi in self.x:
            out.extend(xi.coeffs)
        return out

    # -- linear structure --------------------------------------------------

    def _check(self, other):
        if self.tag is not other.tag:
            raise TagMismatchError(f"{self.tag} vs {other.tag}")

    def __add__(self, other):
        self._check(other)
        return HermitianMatrix(
            self.tag,
            tuple(a + b for a, b in zip(self.r, other.r)),
            tuple(a + b for a, b in zip(self.x, other.x)),
        )

    def __sub__(self, other):
        self._check(other)
        return HermitianMatrix(
            self.tag,
            tuple(a - b for a, b in zip(self.r, other.r)),
            tuple(a - b for a, b in zip(self.x, other.x)),
        )

    def __neg__(self):
        return HermitianMatrix(self.tag, tuple(-a for a in self.r), tuple(-a for a in self.x))

    def scale(self, c):
        c = c if isinstance(c, QI) else QI(c)
        return HermitianMatrix(self.tag, tuple(c * a for a in self.r), tuple(a.scale(c) for a in self.x))

    def is_zero(self):
        return not any(self.r) and all(x.is_zero() for x in self.x)

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.tag is other.tag and self.r == other.r and self.x == other.x

    def __hash__(self):
        return hash((self.tag.name, self.r, self.x))

    def __repr__(self):
        return f"HermitianMatrix({self.tag}, r={[str(v) for v in self.r]})"

    # -- full-matrix workspace ----------------------------------------------

    def grid(self):
        """The full 3x3 matrix over the algebra (scalars embedded on the diagonal)."""
        r1, r2, r3 = (AlgElement.scalar(self.tag, v) for v in self.r)
        x1, x2, x3 = self.x
        return (
            (r1, x3.conjugate(), x2.conjugate()),
            (x3, r2, x1.conjugate()),
            (x2, x1, r3),
        )


def _grid_mul(a, b):
    """Plain matrix product of 3x3 grids; each term is one algebra product."""
    return tuple(
        tuple(
            a[i][0] * b[0][k] + a[i][1] * b[1][k] + a[i][2] * b[2][k]
            for k in range(3)
        )
        for i in range(3)
    )


def _grid_add(a, b):
    return tuple(tuple(a[i][k] + b[i][k] for k in range(3)) for i in range(3))


def _grid_scale(a, c):
    return tuple(tuple(a[i][k].scale(c) for k in range(3)) for i in range(3))


def _read_hermitian(grid, tag):
    """Read a Hermitian grid back into compact form, verifying hermiticity."""
    for i in range(3):
        if any(grid[i][i].coeffs[1:]):
            raise HermiticityBrokenError(f"diagonal entry {i} is not scalar")
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if grid[j][i] != grid[i][j].conjugate():
            raise HermiticityBrokenError(f"entries ({i},{j}) and ({j},{i}) are not conjugate")
    r = tuple(grid[i][i].coeffs[0] for i in range(3))
    return HermitianMatrix(tag, r, (grid[2][1], grid[2][0], grid[1][0]))


def jordan_product(a, b):
    """A o B = (AB + BA)/2, exact, with hermiticity guard."""
    a._check(b)
    ga, gb = a.grid(), b.grid()
    sym = _grid_scale(_grid_add(_grid_mul(ga, gb), _grid_mul(gb, ga)), HALF)
    return _read_hermitian(sym, a.tag)


def jordan_square(a):
    """A o A (a single matrix product: A commutes with itself)."""
    g = a.grid()
    return _read_hermitian(_grid_mul(g, g), a.tag)


# -- traces, determinant, comatrix ------------------------------------------


def trace(a):
    return a.r[0] + a.r[1] + a.r[2]


def trace_sq(a):
    """tr(A^2) = sum_i (r_i^2 + 2 x_i conj(x_i))."""
    out = QI_ZERO
    for ri, xi in zip(a.r, a.x):
        n = xi.norm()
        out = out + ri * ri + n + n
    return out


def _cyclic_scalar(a):
    """The six-term off-diagonal cubic contribution, as an exact scalar.

    The six terms pair into mutual conjugates -- (x1 x3) conj(x2) with
    x2 (conj(x3) conj(x1)), and so on -- which fixes the parenthesization:
    each pair sums to u + conj(u), i.e. the algebra trace of its first member.
    (An all-left-associated reading differs by a nonzero associator in the
    octonion case and is not scalar.)
    """
    x1, x2, x3 = a.x
    x2c = x2.conjugate()
    p = x1 * x3
    return (p * x2c).trace_alg() + (x2c * p).trace_alg() + ((x3 * x2c) * x1).trace_alg()


def trace_cube(a):
    """tr(A^3) by the closed formula (diagonal cubes, mixed terms, cyclic part)."""
    r = a.r
    n = [xi.norm() for xi in a.x]
    out = QI_ZERO
    for i in range(3):
        mixed = QI_ZERO
        for j in range(3):
            if j != i:
                mixed = mixed + n[j]
        out = out + r[i] * r[i] * r[i] + QI(3) * r[i] * mixed
    return out + _cyclic_scalar(a)


def determinant(a):
    """det(A) = r1 r2 r3 - sum_i r_i n(x_i) + (cyclic part)/3."""
    r = a.r
    n = [xi.norm() for xi in a.x]
    out = r[0] * r[1] * r[2]
    for i in range(3):
        out = out - r[i] * n[i]
    return out + THIRD * _cyclic_scalar(a)


def determinant_from_traces(a):
    """tr(A^3)/3 - tr(A) tr(A^2)/2 + (tr A)^3/6 (independent route for checks)."""
    t1, t2, t3 = trace(a), trace_sq(a), trace_cube(a)
    return THIRD * t3 - HALF * t1 * t2 + QI(Fraction(1, 6)) * t1 * t1 * t1


def comatrix(a):
    """com(A) = A^2 - tr(A) A + ((tr A)^2 - tr(A^2))/2 Id."""
    sq = jordan_square(a)
    t = trace(a)
    c = HALF * (t * t - trace_sq(a))
    ident = HermitianMatrix.identity(a.tag)
    return sq - a.scale(t) + ident.scale(c)


def cross(a, b):
    """A x B = (2 A o B - tr(A) B - tr(B) A + (tr(A) tr(B) - tr(A o B)) Id) / 2."""
    a._check(b)
    ab = jordan_product(a, b)
    ta, tb = trace(a), trace(b)
    c = ta * tb - trace(ab)
    ident = HermitianMatrix.identity(a.tag)
    return (ab.scale(2) - b.scale(ta) - a.scale(tb) + ident.scale(c)).scale(HALF)


def triple(a, b, c):
    """(A, B, C) = tr(A o (B x C)), symmetric in all three arguments."""
    return trace(jordan_product(a, cross(b, c)))


# -- the permutation action --------------------------------------------------


def _transposition_action(which, a):
    """Conjugation by the 0/1 permutation matrix swapping two diagonal slots."""
    tag = a.tag
    zero, one = AlgElement.zero(tag), AlgElement.one(tag)
    if which == "12":
        m = ((zero, one, zero), (one, zero, zero), (zero, zero, one))
    elif which == "23":
        m = ((one, zero, zero), (zero, zero, one), (zero, one, zero))
    else:
        raise ValueError(which)
    return _read_hermitian(_grid_mul(_grid_mul(m, a.grid()), m), tag)


def _build_words():
    """Word (sequence of primitive transpositions, applied left to right)
    realizing each permutation p, in the sense diag(r)_i -> r_{p(i)}."""
    prim = {"12": (1, 0, 2), "23": (0, 2, 1)}
    words = {(0, 1, 2): ()}
    frontier = [(0, 1, 2)]
    while frontier:
        nxt = []
        for p in frontier:
            for name, t in prim.items():
                q = tuple(p[t[i]] for i in range(3))  # apply t after p
                if q not in words:
                    words[q] = words[p] + (name,)
                    nxt.append(q)
        frontier = nxt
    return words


_WORDS = _build_words()
S3 = sorted(_WORDS)
TRANSPOSITIONS = ((1, 0, 2), (0, 2, 1), (2, 1, 0))


def sigma_action(perm, a):
    """The permutation group action on Hermitian matrices.

    perm is a tuple p with diag(r1,r2,r3) |-> diag(r_{p(0)}, r_{p(1)}, r_{p(2)})
    (0-based form of the diagonal permutation rule).
    """
    perm = tuple(perm)
    if perm not in _WORDS:
        raise ValueError(f"not a permutation of (0,1,2): {perm}")
    out = a
    for name in _WORDS[perm]:
        out = _transposition_action(name, out)
    return out


def compose_perms(p, q):
    """The permutation realized by applying q's action first, then p's."""
    # actions compose contravariantly: acting by p after q permutes by q o p
    return tuple(q[p[i]] for i in range(3))


# -- torus elements and the cubic-cone map -----------------------------------


class DiagonalTorusElement:
    """diag(l1, l2, l3) with l1 l2 l3 = 1; a point of the two-dimensional torus."""

    __slots__ = ("lams",)

    def __init__(self, l1, l2, l3):
        lams = tuple(v if isinstance(v, QI) else QI(v) for v in (l1, l2, l3))
        if any(not v for v in lams):
            raise TorusConstraintError("eigenvalues must be nonzero")
        if lams[0] * lams[1] * lams[2] != QI_ONE:
            raise TorusConstraintError("product of eigenvalues must be 1")
        self.lams = lams

    @classmethod
    def identity(cls):
        return cls(1, 1, 1)

    def hermitian(self, tag):
        return HermitianMatrix.diag(tag, *self.lams)

    def compose(self, other):
        return DiagonalTorusElement(*(a * b for a, b in zip(self.lams, other.lams)))

    def inverse(self):
        return DiagonalTorusElement(*(QI_ONE / a for a in self.lams))

    def permuted(self, perm):
        return DiagonalTorusElement(*(self.lams[perm[i]] for i in range(3)))

    def __eq__(self, other):
        if not isinstance(other, DiagonalTorusElement):
            return NotImplemented
        return self.lams == other.lams

    def __hash__(self):
        return hash(self.lams)


class ProjectivePoint:
    """Homogeneous coordinates partitioned as (cubic slot, matrix, comatrix, det)."""

    __slots__ = ("tag", "vector")

    def __init__(self, tag, vector):
        vector = tuple(v if isinstance(v, QI) else QI(v) for v in vector)
        if not any(vector):
            raise ZeroInputError("all homogeneous coordinates vanish")
        if len(vector) != 2 * jordan_dim(tag) + 2:
            raise ValueError("coordinate vector has wrong length")
        self.tag = tag
        self.vector = vector

    def slots(self):
        d = jordan_dim(self.tag)
        v = self.vector
        return v[0], v[1 : 1 + d], v[1 + d : 1 + 2 * d], v[1 + 2 * d]

    def nonzero_coordinates(self):
        return tuple(v for v in self.vector if v)

    def __eq__(self, other):
        """Projective equality: proportional coordinate vectors."""
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        if self.tag is not other.tag:
            return False
        k = next(i for i, v in enumerate(self.vector) if v)
        if not other.vector[k]:
            return False
        a, b = self.vector[k], other.vector[k]
        return all(x * b == y * a for x, y in zip(self.vector, other.vector))

    def __hash__(self):
        raise TypeError("projective points are not hashable")


def phi_map(t, a):
    """[t^3 : t^2 A : t com(A) : det(A)], the cubic-cone parametrization."""
    t = t if isinstance(t, QI) else QI(t)
    if not t and a.is_zero():
        raise ZeroInputError("(t, A) = (0, 0)")
    t2 = t * t
    vec = [t2 * t]
    vec.extend(a.scale(t2).coords())
    vec.extend(comatrix(a).scale(t).coords())
    vec.append(determinant(a))
    return ProjectivePoint(a.tag, vec)


def on_cubic(t, a):
    """Does (t, A) satisfy t^3 = det(A)?"""
    t = t if isinstance(t, QI) else QI(t)
    if not t and a.is_zero():
        raise ZeroInputError("(t, A) = (0, 0)")
    return t * t * t == determinant(a)
