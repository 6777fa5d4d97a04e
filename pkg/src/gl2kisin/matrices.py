"""2x2 matrices over the Laurent ring, plus the standard monomial matrices."""

import math

from .errors import ConfigError
from .laurent import Laurent


class Mat2:
    __slots__ = ("field", "a11", "a12", "a21", "a22")

    def __init__(self, field, a11, a12, a21, a22):
        self.field = field
        self.a11 = a11
        self.a12 = a12
        self.a21 = a21
        self.a22 = a22

    @classmethod
    def from_rows(cls, field, rows):
        (a11, a12), (a21, a22) = rows
        conv = lambda x: x if isinstance(x, Laurent) else Laurent.const(field, x)
        return cls(field, conv(a11), conv(a12), conv(a21), conv(a22))

    @classmethod
    def identity(cls, field):
        one = Laurent.const(field, 1)
        zero = Laurent.zero(field)
        return cls(field, one, zero, zero, one)

    @classmethod
    def zero(cls, field):
        z = Laurent.zero(field)
        return cls(field, z, z, z, z)

    @classmethod
    def diagonal(cls, field, d1, d2):
        z = Laurent.zero(field)
        return cls(field, d1, z, z, d2)

    @classmethod
    def elementary(cls, field, i, j, c):
        """Identity plus c in position (i, j), 1-based, i != j."""
        if (i, j) not in ((1, 2), (2, 1)):
            raise ConfigError("elementary position must be (1,2) or (2,1)")
        m = cls.identity(field)
        if (i, j) == (1, 2):
            return cls(field, m.a11, c, m.a21, m.a22)
        return cls(field, m.a11, m.a12, c, m.a22)

    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    def rows(self):
        return ((self.a11, self.a12), (self.a21, self.a22))

    def __add__(self, other):
        return Mat2(
            self.field,
            self.a11 + other.a11,
            self.a12 + other.a12,
            self.a21 + other.a21,
            self.a22 + other.a22,
        )

    def __sub__(self, other):
        return Mat2(
            self.field,
            self.a11 - other.a11,
            self.a12 - other.a12,
            self.a21 - other.a21,
            self.a22 - other.a22,
        )

    def __neg__(self):
        return Mat2(self.field, -self.a11, -self.a12, -self.a21, -self.a22)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            # skip products against zero entries; the matrices seen here are
            # mostly sparse (elementary, monomial, triangular)
            a11, a12, a21, a22 = self.a11, self.a12, self.a21, self.a22
            b11, b12, b21, b22 = other.a11, other.a12, other.a21, other.a22
            z = Laurent.zero(self.field)
            return Mat2(
                self.field,
                (a11 * b11 if a11.coeffs and b11.coeffs else z)
                + (a12 * b21 if a12.coeffs and b21.coeffs else z),
                (a11 * b12 if a11.coeffs and b12.coeffs else z)
                + (a12 * b22 if a12.coeffs and b22.coeffs else z),
                (a21 * b11 if a21.coeffs and b11.coeffs else z)
                + (a22 * b21 if a22.coeffs and b21.coeffs else z),
                (a21 * b12 if a21.coeffs and b12.coeffs else z)
                + (a22 * b22 if a22.coeffs and b22.coeffs else z),
            )
        # scalar (Laurent / field element / int)
        return self.scale(other)

    def scale(self, c):
        if not isinstance(c, Laurent):
            c = Laurent.const(self.field, c)
        return Mat2(self.field, self.a11 * c, self.a12 * c, self.a21 * c, self.a22 * c)

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def transpose(self):
        return Mat2(self.field, self.a11, self.a21, self.a12, self.a22)

    def truncate(self, prec):
        return Mat2(
            self.field,
            self.a11.truncate(prec),
            self.a12.truncate(prec),
            self.a21.truncate(prec),
            self.a22.truncate(prec),
        )

    def min_valuation(self):
        """Least valuation over the nonzero entries (inf for the zero matrix)."""
        vals = [e.valuation() for e in self.entries() if e]
        return min(vals) if vals else math.inf

    def __eq__(self, other):
        return (
            isinstance(other, Mat2)
            and self.field == other.field
            and self.entries() == other.entries()
        )

    def __hash__(self):
        return hash((self.field, self.entries()))

    def __repr__(self):
        return "[[%r, %r], [%r, %r]]" % (self.a11, self.a12, self.a21, self.a22)


def monomial_matrix(field, s, nu):
    """The matrix of s * v^nu: diag(v^nu1, v^nu2) for s = 0 (identity) and
    the antidiagonal [[0, v^nu2], [v^nu1, 0]] for s = 1 (the swap)."""
    n1, n2 = nu
    z = Laurent.zero(field)
    one = field.one()
    if s == 0:
        return Mat2(field, Laurent.monomial(field, one, n1), z, z, Laurent.monomial(field, one, n2))
    return Mat2(field, z, Laurent.monomial(field, one, n2), Laurent.monomial(field, one, n1), z)
