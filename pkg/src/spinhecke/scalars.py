"""Exact arithmetic in the real quadratic field Q(sqrt2).

Every coefficient in this package lies in Q(sqrt2): the spin transpositions
carry a factor 1/sqrt2, and all symmetrizer eigenvalues that we ever need to
extract are rational (irrational eigenvalues are only ever validated through
their squares).  A :class:`Scalar` stores the unique pair (a, b) of rationals
with value a + b*sqrt2, so equality and hashing are componentwise and exact.

Rational components are ``gmpy2.mpq`` when gmpy2 is installed, otherwise
``fractions.Fraction``.  Both are arbitrary precision and always reduced;
``Q`` is the alias used everywhere.

>>> (ONE + SQRT2) * (ONE - SQRT2)
Scalar(-1, 0)
>>> INV_SQRT2 * INV_SQRT2 == Scalar(Q(1, 2))
True
>>> (ONE + SQRT2).inverse()
Scalar(-1, 1)
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as Q

_RATIONAL_TYPES = (int, type(Q(0)))


class Scalar:
    """An element a + b*sqrt2 of Q(sqrt2), in canonical componentwise form."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Q(a)
        self.b = Q(b)

    @staticmethod
    def _make(a, b):
        # fast path: components are already rationals
        s = object.__new__(Scalar)
        s.a = a
        s.b = b
        return s

    def __add__(self, other):
        if isinstance(other, Scalar):
            return Scalar._make(self.a + other.a, self.b + other.b)
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar._make(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return Scalar._make(self.a - other.a, self.b - other.b)
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar._make(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar._make(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Scalar._make(
                self.a * other.a + 2 * self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar._make(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar._make(-self.a, -self.b)

    def __pos__(self):
        return self

    def conjugate(self):
        """The Galois conjugate a - b*sqrt2."""
        return Scalar._make(self.a, -self.b)

    def inverse(self):
        """Multiplicative inverse (a - b*sqrt2)/(a^2 - 2b^2).

        The norm a^2 - 2b^2 vanishes only at 0 because sqrt2 is irrational.
        """
        norm = self.a * self.a - 2 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        return Scalar._make(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            other = Scalar(other)
        if isinstance(other, Scalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar(other) * self.inverse()
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b
        if isinstance(other, _RATIONAL_TYPES):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)  # agrees with int/Fraction/mpq hashing
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self):
        return self.b == 0

    def __repr__(self):
        return f"Scalar({self.a}, {self.b})"

    def __str__(self):
        if not self:
            return "0"
        parts = []
        if self.a:
            parts.append(str(self.a))
        if self.b:
            if self.b == 1:
                root = "sqrt2"
            elif self.b == -1:
                root = "-sqrt2"
            else:
                root = f"{self.b}*sqrt2"
            if parts and not root.startswith("-"):
                parts.append("+" + root)
            else:
                parts.append(root)
        return "".join(parts)


def coerce(x) -> Scalar:
    """Lift an int or rational to a Scalar; pass Scalars through."""
    if isinstance(x, Scalar):
        return x
    return Scalar(x)


ZERO = Scalar(0)
ONE = Scalar(1)
TWO = Scalar(2)
HALF = Scalar(Q(1, 2))
SQRT2 = Scalar(0, 1)
INV_SQRT2 = Scalar(0, Q(1, 2))
