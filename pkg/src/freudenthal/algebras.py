"""The four complex composition algebras, built by Cayley-Dickson doubling.

Doubling rule, fixed once and documented so every witness is reproducible:

    (a, b) * (c, d) = (a*c - conj(d)*b,  d*a + b*conj(c))

with doubling parameter -1 at every level (over the complex base field all
nonzero parameters give isomorphic algebras; -1 reproduces the classical
quaternion and octonion sign tables).  Levels 0..3 give C, CxC (the split
double), complexified quaternions and complexified octonions.  Products of
basis vectors are single signed basis vectors, so multiplication is table
driven.
"""

from .scalars import QI, QI_ONE, QI_ZERO


class TagMismatchError(ValueError):
    """Operands belong to different composition algebras."""


class AlgebraInternalError(AssertionError):
    """A structural identity failed; the multiplication table is broken."""


class AlgebraTag:
    __slots__ = ("name", "level", "dim")

    def __init__(self, name, level):
        self.name = name
        self.level = level
        self.dim = 1 << level

    def __repr__(self):
        return self.name


C = AlgebraTag("C", 0)
CxC = AlgebraTag("CxC", 1)
HC = AlgebraTag("HC", 2)
OC = AlgebraTag("OC", 3)
ALL_TAGS = (C, CxC, HC, OC)
_BY_NAME = {t.name: t for t in ALL_TAGS}


def tag_by_name(name):
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; expected one of {sorted(_BY_NAME)}") from None


def _build_table(level):
    if level == 0:
        return ((0, 1),),
    sub = _build_table(level - 1)
    h = 1 << (level - 1)
    table = [[None] * (2 * h) for _ in range(2 * h)]
    for i in range(h):
        for j in range(h):
            cj = 1 if j == 0 else -1  # sign of conj(e_j) in the half algebra
            k, s = sub[i][j]
            table[i][j] = (k, s)
            k2, s2 = sub[j][i]
            table[i][h + j] = (h + k2, s2)  # (e_i,0)(0,e_j) = (0, e_j e_i)
            table[h + i][j] = (h + k, s * cj)  # (0,e_i)(e_j,0) = (0, e_i conj(e_j))
            table[h + i][h + j] = (k2, -s2 * cj)  # (0,e_i)(0,e_j) = (-conj(e_j) e_i, 0)
    return tuple(tuple(row) for row in table)


_TABLES = {}


def multiplication_table(tag):
    """table[i][j] = (k, sign) meaning e_i * e_j = sign * e_k."""
    t = _TABLES.get(tag.name)
    if t is None:
        t = _TABLES[tag.name] = _build_table(tag.level)
    return t


class AlgElement:
    """Element of a composition algebra, exact Q(i) coordinates."""

    __slots__ = ("tag", "coeffs")

    def __init__(self, tag, coeffs):
        coeffs = tuple(c if isinstance(c, QI) else QI(c) for c in coeffs)
        if len(coeffs) != tag.dim:
            raise ValueError(f"need {tag.dim} coordinates for {tag}")
        self.tag = tag
        self.coeffs = coeffs

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, tag):
        return cls(tag, (QI_ZERO,) * tag.dim)

    @classmethod
    def one(cls, tag):
        return cls(tag, (QI_ONE,) + (QI_ZERO,) * (tag.dim - 1))

    @classmethod
    def basis(cls, tag, k):
        return cls(tag, tuple(QI_ONE if i == k else QI_ZERO for i in range(tag.dim)))

    @classmethod
    def scalar(cls, tag, value):
        value = value if isinstance(value, QI) else QI(value)
        return cls(tag, (value,) + (QI_ZERO,) * (tag.dim - 1))

    # -- ring structure ---------------------------------------------------

    def _check(self, other):
        if self.tag is not other.tag:
            raise TagMismatchError(f"{self.tag} vs {other.tag}")

    def __add__(self, other):
        self._check(other)
        return AlgElement(self.tag, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return AlgElement(self.tag, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgElement(self.tag, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, QI)):
            return self.scale(other)
        self._check(other)
        table = multiplication_table(self.tag)
        out = [QI_ZERO] * self.tag.dim
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = table[i]
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                k, s = row[j]
                term = a * b
                out[k] = out[k] - term if s < 0 else out[k] + term
        return AlgElement(self.tag, out)

    def __rmul__(self, other):
        if isinstance(other, (int, QI)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = c if isinstance(c, QI) else QI(c)
        return AlgElement(self.tag, tuple(c * a for a in self.coeffs))

    def conjugate(self):
        """Negate every non-unit coordinate (the algebra involution)."""
        return AlgElement(self.tag, (self.coeffs[0],) + tuple(-a for a in self.coeffs[1:]))

    def norm(self):
        """a * conj(a), guaranteed scalar; returned as a QI value."""
        prod = self * self.conjugate()
        if any(prod.coeffs[1:]):
            raise AlgebraInternalError("a * conj(a) escaped the span of 1")
        return prod.coeffs[0]

    def trace_alg(self):
        """a + conj(a) as a scalar (= twice the unit coordinate)."""
        return self.coeffs[0] + self.coeffs[0]

    # -- misc -----------------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.tag is other.tag and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.tag.name, self.coeffs))

    def __repr__(self):
        return f"AlgElement({self.tag}, {[str(c) for c in self.coeffs]})"
