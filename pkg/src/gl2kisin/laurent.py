"""Sparse Laurent polynomials over a finite field.

INPUT/OUTPUT convention: a Laurent polynomial is a dict {degree: coefficient}
holding only nonzero coefficients; the zero polynomial is the empty dict.
valuation() of zero is +inf and degree() of zero is -inf so that the usual
comparisons and the additivity law val(m*n) = val(m) + val(n) hold without
special cases.
"""

import math

from .errors import ConfigError
from .fields import FieldElement


class Laurent:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=None):
        self.field = field
        if coeffs:
            self.coeffs = {d: c for d, c in coeffs.items() if c}
        else:
            self.coeffs = {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def _make(cls, field, coeffs):
        # internal: caller guarantees coeffs holds no zero values
        self = object.__new__(cls)
        self.field = field
        self.coeffs = coeffs
        return self

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def const(cls, field, c):
        c = field(c)
        return cls(field, {0: c} if c else None)

    @classmethod
    def monomial(cls, field, c, deg):
        c = field(c)
        return cls(field, {deg: c} if c else None)

    @classmethod
    def from_pairs(cls, field, pairs):
        out = {}
        for deg, c in pairs:
            c = field(c)
            if deg in out:
                c = out[deg] + c
            if c:
                out[deg] = c
            elif deg in out:
                del out[deg]
        return cls(field, out)

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def valuation(self):
        return min(self.coeffs) if self.coeffs else math.inf

    def degree(self):
        return max(self.coeffs) if self.coeffs else -math.inf

    def coeff(self, deg):
        c = self.coeffs.get(deg)
        return c if c is not None else self.field.zero()

    def is_polynomial(self):
        return all(d >= 0 for d in self.coeffs)

    def shift(self, k):
        """Multiply by v^k."""
        return Laurent._make(self.field, {d + k: c for d, c in self.coeffs.items()})

    def truncate(self, prec):
        """Drop all terms of degree >= prec (series precision O(v^prec))."""
        return Laurent._make(self.field, {d: c for d, c in self.coeffs.items() if d < prec})

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Laurent):
            if other.field != self.field:
                raise ConfigError("Laurent operands over different fields")
            return other
        if isinstance(other, (int, FieldElement)):
            return Laurent.const(self.field, other)
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, Laurent):
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        elif other.field is not self.field and other.field != self.field:
            raise ConfigError("Laurent operands over different fields")
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            if d in out:
                s = out[d] + c
                if s:
                    out[d] = s
                else:
                    del out[d]
            else:
                out[d] = c
        return Laurent._make(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._make(self.field, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if not isinstance(other, Laurent):
            if isinstance(other, (int, FieldElement)):
                c = self.field(other)
                if not c:
                    return Laurent._make(self.field, {})
                return Laurent._make(self.field, {d: x * c for d, x in self.coeffs.items()})
            return NotImplemented
        if other.field is not self.field and other.field != self.field:
            raise ConfigError("Laurent operands over different fields")
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Laurent._make(self.field, {})
        # single-term factors need no accumulation (fields have no zero divisors)
        if len(a) == 1:
            ((d1, c1),) = a.items()
            return Laurent._make(self.field, {d1 + d: c1 * c for d, c in b.items()})
        if len(b) == 1:
            ((d2, c2),) = b.items()
            return Laurent._make(self.field, {d + d2: c * c2 for d, c in a.items()})
        out = {}
        for d1, c1 in a.items():
            for d2, c2 in b.items():
                d = d1 + d2
                prod = c1 * c2
                if d in out:
                    s = out[d] + prod
                    if s:
                        out[d] = s
                    else:
                        del out[d]
                else:
                    out[d] = prod
        return Laurent._make(self.field, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = Laurent.const(self.field, other)
        return (
            isinstance(other, Laurent)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, tuple(sorted((d, c.coeffs) for d, c in self.coeffs.items()))))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in sorted(self.coeffs):
            c = self.coeffs[d]
            cs = repr(c)
            if d == 0:
                parts.append(cs)
            else:
                vs = "v" if d == 1 else "v^%d" % d
                parts.append(vs if cs == "1" else "%s*%s" % (cs, vs))
        return " + ".join(parts)


def phi_twist(m):
    """Frobenius twist: each term c*v^d maps to frobenius(c)*v^(p*d)."""
    p = m.field.p
    return Laurent(m.field, {p * d: c.frobenius() for d, c in m.coeffs.items()})


def series_inverse(f, prec):
    """Inverse of f in the Laurent series ring, truncated to O(v^prec).

    INPUT: f nonzero; prec an absolute degree bound.
    OUTPUT: g with terms in degrees [-val(f), prec) such that
            f*g == 1 + O(v^(prec + val(f))).
    """
    if f.is_zero():
        raise ZeroDivisionError("series inverse of zero")
    val = f.valuation()
    nterms = prec + val  # number of unit-part coefficients needed
    if nterms <= 0:
        return Laurent(f.field)
    inv0 = f.coeffs[val].inverse()
    if len(f.coeffs) == 1:
        return Laurent(f.field, {-val: inv0})
    # sparse unit-part tail: only nonzero u_k with 1 <= k < nterms feed the
    # recurrence out[n] = -inv0 * sum_k u_k * out[n-k]
    tail = sorted((d - val, c) for d, c in f.coeffs.items() if 0 < d - val < nterms)
    zero = f.field.zero()
    out = [inv0]
    for n in range(1, nterms):
        acc = None
        for k, u_k in tail:
            if k > n:
                break
            o = out[n - k]
            if o:
                t = u_k * o
                acc = t if acc is None else acc + t
        out.append(-inv0 * acc if acc is not None else zero)
    return Laurent(f.field, {i - val: c for i, c in enumerate(out) if c})


def series_div(a, b, prec):
    """a / b in the Laurent series ring, truncated to O(v^prec)."""
    if a.is_zero():
        return Laurent(a.field)
    inv = series_inverse(b, prec - a.valuation())
    return (a * inv).truncate(prec)
