"""Exact scalars: the Gaussian rationals Q(i).

All verification arithmetic in this package runs over Q(i) (or over plain
rationals / integers where the data is real).  Values are kept in canonical
reduced form at all times; there is no floating point anywhere.
"""

from fractions import Fraction


class QI:
    """A Gaussian rational re + im*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QI(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QI(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return QI(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b, c, d = self.re, self.im, other.re, other.im
        return QI((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = QI_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure ----------------------------------------------------------

    def conjugate(self):
        """Complex conjugate (the field automorphism i -> -i)."""
        return QI(self.re, -self.im)

    def is_zero(self):
        return not self.re and not self.im

    def is_rational(self):
        return not self.im

    def rational(self):
        """The value as a Fraction; raises if the imaginary part is nonzero."""
        if self.im:
            raise ValueError(f"not a rational value: {self}")
        return self.re

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"QI({self.re!r}, {self.im!r})"

    def __str__(self):
        return self.as_string()

    def as_string(self):
        """Stable exact serialization, 'p/q+r/s*i'."""
        re, im = self.re, self.im
        return (
            f"{re.numerator}/{re.denominator}+{im.numerator}/{im.denominator}*i"
        )


def _coerce(x):
    if type(x) is QI:
        return x
    if isinstance(x, (int, Fraction)):
        return QI(x)
    if isinstance(x, QI):
        return x
    return None


def qi(re=0, im=0):
    """Convenience constructor (accepts ints, Fractions, '1/2' strings)."""
    return QI(Fraction(re), Fraction(im))


QI_ZERO = QI(0)
QI_ONE = QI(1)
QI_I = QI(0, 1)
