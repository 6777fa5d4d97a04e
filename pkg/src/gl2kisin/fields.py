"""Exact arithmetic in small finite fields F_{p^d}.

Elements are tuples of base-p coefficients against a monic modulus polynomial;
the default modulus of each degree is the first monic irreducible in the
ascending integer encoding sum(a_i * p^i), so encodings are reproducible
across runs.
"""

from .errors import ConfigError


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, low degree first)


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(a, mod, p):
    # remainder of a by the monic polynomial mod
    a = list(a)
    dm = len(mod) - 1
    _poly_trim(a)
    while len(a) - 1 >= dm:
        shift = len(a) - 1 - dm
        lead = a[-1]
        for i, m in enumerate(mod):
            a[shift + i] = (a[shift + i] - lead * m) % p
        _poly_trim(a)
    return a


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_rem(out, mod, p)


def _poly_powmod(base, e, mod, p):
    result = [1]
    base = _poly_rem(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # a mod b with b made monic on the fly
        inv = pow(b[-1], -1, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _poly_rem(a, bm, p)
        _poly_trim(b)
    return a


def poly_is_irreducible(coeffs, p):
    """True iff the monic polynomial with the given low-first coefficients is
    irreducible over F_p.  Uses the standard x^(p^k) criterion."""
    d = len(coeffs) - 1
    if d < 1 or coeffs[-1] != 1:
        return False
    x = [0, 1]
    # x^(p^d) == x mod f
    xp = x
    for _ in range(d):
        xp = _poly_powmod(xp, p, coeffs, p)
    diff = list(xp) + [0] * (2 - len(xp))
    diff[1] = (diff[1] - 1) % p
    if _poly_trim(list(diff)):
        return False
    # gcd(x^(p^(d/q)) - x, f) == 1 for every prime q | d
    q = 2
    dd = d
    checked = set()
    while dd > 1:
        while dd % q:
            q += 1
        if q not in checked:
            checked.add(q)
            xp = x
            for _ in range(d // q):
                xp = _poly_powmod(xp, p, coeffs, p)
            diff = list(xp) + [0] * (2 - len(xp))
            diff[1] = (diff[1] - 1) % p
            g = _poly_gcd(coeffs, _poly_trim(diff), p)
            if len(g) != 1:
                return False
        dd //= q
    return True


def default_modulus(p, degree):
    """First monic irreducible of the given degree over F_p, by ascending
    integer encoding of the non-leading coefficients."""
    for m in range(p ** degree):
        coeffs = []
        n = m
        for _ in range(degree):
            coeffs.append(n % p)
            n //= p
        coeffs.append(1)
        if poly_is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError("no irreducible found")  # pragma: no cover


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ConfigError("elements from different fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        elif other.field is not self.field and other.field != self.field:
            raise ConfigError("elements from different fields")
        f = self.field
        if f.degree == 1:
            return FieldElement(f, ((self.coeffs[0] + other.coeffs[0]) % f.p,))
        p = f.p
        return FieldElement(
            f,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        elif other.field is not self.field and other.field != self.field:
            raise ConfigError("elements from different fields")
        f = self.field
        if f.degree == 1:
            return FieldElement(f, ((self.coeffs[0] - other.coeffs[0]) % f.p,))
        p = f.p
        return FieldElement(
            f,
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        elif other.field is not self.field and other.field != self.field:
            raise ConfigError("elements from different fields")
        f = self.field
        if f.degree == 1:
            return FieldElement(f, ((self.coeffs[0] * other.coeffs[0]) % f.p,))
        prod = _poly_mulmod(list(self.coeffs), list(other.coeffs), list(f.modulus), f.p)
        prod += [0] * (f.degree - len(prod))
        return FieldElement(f, tuple(prod))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        f = self.field
        if f.degree == 1:
            return FieldElement(f, (pow(self.coeffs[0], -1, f.p),))
        return self ** (f.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self):
        """x -> x^p (identity on the prime field)."""
        if self.field.degree == 1:
            return self
        return self ** self.field.p

    def to_int(self):
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field(other)
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.degree, self.coeffs))

    def __repr__(self):
        if self.field.degree == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                t = "t" if i == 1 else "t^%d" % i
                terms.append(t if c == 1 else "%d*%s" % (c, t))
        return " + ".join(terms) if terms else "0"


class FiniteField:
    """F_{p^degree} with a fixed monic modulus (ignored for degree 1)."""

    __slots__ = ("p", "degree", "modulus", "order")

    def __init__(self, p, degree=1, modulus=None):
        if not is_prime(p):
            raise ConfigError("p = %r is not prime" % (p,))
        if degree < 1:
            raise ConfigError("field degree must be >= 1")
        self.p = p
        self.degree = degree
        if degree == 1:
            self.modulus = None
        else:
            if modulus is None:
                modulus = default_modulus(p, degree)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != degree + 1 or modulus[-1] != 1:
                raise ConfigError("modulus must be monic of degree %d" % degree)
            if not poly_is_irreducible(list(modulus), p):
                raise ConfigError("modulus polynomial is reducible")
            self.modulus = modulus
        self.order = p ** degree

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ConfigError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if self.degree == 1:
                return FieldElement(self, (value % self.p,))
            return self.from_int(value % self.order)
        if isinstance(value, (tuple, list)):
            if len(value) > self.degree:
                raise ConfigError("too many coefficients for degree %d" % self.degree)
            coeffs = tuple(int(c) % self.p for c in value)
            coeffs += (0,) * (self.degree - len(coeffs))
            return FieldElement(self, coeffs)
        raise ConfigError("cannot build a field element from %r" % (value,))

    def from_int(self, n):
        """Element with base-p digit expansion n = sum(c_i * p^i)."""
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(n % self.p)
            n //= self.p
        return FieldElement(self, tuple(coeffs))

    def zero(self):
        return FieldElement(self, (0,) * self.degree)

    def one(self):
        return FieldElement(self, (1,) + (0,) * (self.degree - 1))

    def gen(self):
        """The class of t (degree >= 2 only)."""
        if self.degree == 1:
            raise ConfigError("prime field has no polynomial generator")
        return FieldElement(self, (0, 1) + (0,) * (self.degree - 2))

    def elements(self):
        for n in range(self.order):
            yield self.from_int(n)

    def units(self):
        for x in self.elements():
            if x:
                yield x

    def random(self, rng):
        return self.from_int(rng.randrange(self.order))

    def random_unit(self, rng):
        return self.from_int(rng.randrange(1, self.order))

    def __eq__(self, other):
        if other is self:
            return True
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.degree, self.modulus))

    def __repr__(self):
        if self.degree == 1:
            return "F_%d" % self.p
        return "F_%d^%d" % (self.p, self.degree)


def GF(p, degree=1, modulus=None):
    return FiniteField(p, degree, modulus)
