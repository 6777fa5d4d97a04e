"""The local profile rho: exponents r, extension parameters a, units alpha and
beta, reducible/irreducible flag — plus the weight set W(rho), the exclusion
pattern theta, the allowed shape sets X(sigma) / X(rho), and inertial-type
presentations attached to admissible elements.

Index conventions (kept in ONE place because they are the most error-prone
part of the subject): the matrix with superscript (i) uses alpha_j, beta_j,
r_j and a_i for i = f-1-j, and the weight-set slot b_j is paired with a_{f-1-j}.
"""

import itertools
import warnings
from dataclasses import dataclass

from .errors import ConfigError, InternalCheckError, PreconditionError
from .fields import FiniteField
from .weights import (
    ExtendedWeylElt,
    adm_set,
    classify_weight,
    index_of,
    make_label,
    s_apply,
    s_sign,
    t_lambda,
)

STRICT_MIN_DEPTH = 12


class RhoBar:
    """Validated profile (p, f, r, a, alpha, beta, irreducible, mode).

    mode "strict" additionally requires the difference weight to be at least
    12-deep (the hypothesis under which the structural guarantees hold); mode
    "permissive" allows any 0 <= r_j <= p-2 and emits a warning, since the
    combinatorial formulas remain well-defined.
    """

    __slots__ = ("p", "f", "r", "a", "alpha", "beta", "irreducible", "mode", "field")

    def __init__(self, p, f, r, a, alpha, beta, irreducible=False, mode="strict", field=None):
        if field is None:
            field = FiniteField(p)
        if field.p != p:
            raise ConfigError("field characteristic %d does not match p=%d" % (field.p, p))
        if mode not in ("strict", "permissive"):
            raise ConfigError("mode must be 'strict' or 'permissive'")
        if f < 1:
            raise ConfigError("f must be >= 1")
        r = tuple(int(x) for x in r)
        if not (len(r) == f and len(a) == f and len(alpha) == f and len(beta) == f):
            raise ConfigError("r, a, alpha, beta must all have length f=%d" % f)
        a = tuple(field(x) for x in a)
        alpha = tuple(field(x) for x in alpha)
        beta = tuple(field(x) for x in beta)
        for j in range(f):
            if not alpha[j] or not beta[j]:
                raise ConfigError("alpha_j and beta_j must be nonzero units")
        if irreducible and any(a):
            raise ConfigError("irreducible profiles carry no extension parameters (a must be 0)")
        for x in r:
            if not 0 <= x <= p - 2:
                raise ConfigError("r_j must satisfy 0 <= r_j <= p-2; got %d" % x)
        self.p = p
        self.f = f
        self.r = r
        self.a = a
        self.alpha = alpha
        self.beta = beta
        self.irreducible = bool(irreducible)
        self.mode = mode
        self.field = field
        if mode == "strict":
            if self.depth() < STRICT_MIN_DEPTH:
                raise PreconditionError(
                    "strict mode requires depth >= %d (got %d); "
                    "use permissive mode for shallow profiles" % (STRICT_MIN_DEPTH, self.depth())
                )
        else:
            warnings.warn(
                "permissive profile: the structural guarantees assume depth >= %d, "
                "only the combinatorial formulas are guaranteed" % STRICT_MIN_DEPTH,
                stacklevel=2,
            )

    # -- basic structure ----------------------------------------------------

    def semisimple(self):
        return not any(self.a)

    def zero_count(self):
        return sum(1 for x in self.a if not x)

    def free_slots(self):
        """Slots j whose weight-set coordinate b_j is unconstrained, i.e.
        a_{f-1-j} = 0."""
        return tuple(j for j in range(self.f) if not self.a[self.f - 1 - j])

    def base_weight(self):
        """The difference weight, components (r_j, 0)."""
        return tuple((rj, 0) for rj in self.r)

    def depth(self):
        cls = classify_weight(self.base_weight(), self.p)
        return cls.depth if cls.depth is not None else -1

    def s_component(self, j):
        """S2-element of the profile's presentation at component j."""
        return 1 if (self.irreducible and j == 0) else 0

    def semisimplification(self):
        if self.semisimple():
            return self
        return RhoBar(
            self.p,
            self.f,
            self.r,
            (0,) * self.f,
            self.alpha,
            self.beta,
            irreducible=False,
            mode=self.mode,
            field=self.field,
        )

    def to_config(self):
        enc = lambda xs: [x.to_int() for x in xs]
        cfg = {
            "p": self.p,
            "f": self.f,
            "r": list(self.r),
            "a": enc(self.a),
            "alpha": enc(self.alpha),
            "beta": enc(self.beta),
            "irreducible": self.irreducible,
            "mode": self.mode,
        }
        if self.field.degree > 1:
            cfg["field_degree"] = self.field.degree
            cfg["field_modulus"] = list(self.field.modulus)
        return cfg

    @classmethod
    def from_config(cls, cfg):
        try:
            p = int(cfg["p"])
            f = int(cfg["f"])
            r = cfg["r"]
            a = cfg["a"]
            alpha = cfg["alpha"]
            beta = cfg["beta"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError("config is missing required fields: %s" % exc)
        degree = int(cfg.get("field_degree", 1))
        modulus = cfg.get("field_modulus")
        field = FiniteField(p, degree, tuple(modulus) if modulus else None)
        return cls(
            p,
            f,
            r,
            a,
            alpha,
            beta,
            irreducible=bool(cfg.get("irreducible", False)),
            mode=cfg.get("mode", "strict"),
            field=field,
        )

    def __repr__(self):
        return "RhoBar(p=%d, f=%d, r=%r, %s, %s)" % (
            self.p,
            self.f,
            self.r,
            "irreducible" if self.irreducible else "reducible",
            self.mode,
        )


# ---------------------------------------------------------------------------
# inertia exponents


@dataclass(frozen=True)
class InertiaData:
    level: int
    exponent: int
    twist_exponent: int


def inertia_exponents(rho):
    """Fundamental-character exponent data of the restriction to inertia:
    exponent = sum (r_j + 1) p^j mod (p^level - 1), level = f or 2f."""
    level = 2 * rho.f if rho.irreducible else rho.f
    modulus = rho.p ** level - 1
    exponent = sum((rho.r[j] + 1) * rho.p ** j for j in range(rho.f)) % modulus
    return InertiaData(level=level, exponent=exponent, twist_exponent=1)


# ---------------------------------------------------------------------------
# the weight set W(rho)


@dataclass(frozen=True)
class SerreWeightSet:
    entries: tuple  # of (b_vector, SerreWeightLabel)

    def labels(self):
        return [label for _, label in self.entries]

    def b_vectors(self):
        return [b for b, _ in self.entries]

    def label_of(self, b):
        for bv, label in self.entries:
            if bv == tuple(b):
                return label
        raise PreconditionError("b-vector %r is not in the weight set" % (b,))

    def __len__(self):
        return len(self.entries)


def _base_label(rho):
    # the difference weight has diffs r_j and a central part contributing
    # sum p^j to the twist
    return make_label(rho.r, sum(rho.p ** j for j in range(rho.f)), rho.p)


def serre_weights(rho):
    """The weight set: b_j ranges over {0, sgn(s_j)} on free slots and is 0
    elsewhere; each b is labelled through the extension graph at the base
    difference weight."""
    free = set(rho.free_slots())
    options = []
    for j in range(rho.f):
        if j in free:
            options.append((0, s_sign(rho.s_component(j))))
        else:
            options.append((0,))
    base = _base_label(rho)
    entries = []
    for b in itertools.product(*options):
        for j in range(rho.f):
            if not 0 <= rho.r[j] + b[j] <= rho.p - 2:
                raise PreconditionError(
                    "slot %d: r_j=%d with b_j=%d leaves the labelling window; "
                    "profile too shallow for weight-set enumeration" % (j, rho.r[j], b[j])
                )
        entries.append((b, t_lambda(base, b, rho.p)))
    return SerreWeightSet(tuple(entries))


def theta(rho, b):
    """Exclusion pattern of a weight given by its b-vector: position f-1-j
    carries index 3 (translation by (1,2)) when b_j = 0 and index 1
    (translation by (2,1)) when b_j != 0."""
    b = tuple(b)
    ws = serre_weights(rho)
    if b not in [bv for bv, _ in ws.entries]:
        raise PreconditionError("b-vector %r is not in the weight set" % (b,))
    out = [None] * rho.f
    for j in range(rho.f):
        out[rho.f - 1 - j] = 3 if b[j] == 0 else 1
    return tuple(out)


def x_sigma(rho, b):
    """Admissible elements avoiding the exclusion pattern of the weight at
    every position; always of size 2^f."""
    th = theta(rho, b)
    out = []
    for w in adm_set(rho.f):
        idx = index_of(w)
        if all(idx[pos] != th[pos] for pos in range(rho.f)):
            out.append(w)
    return out


def w_in_x_rho(rho, w):
    idx = index_of(w)
    return all(not (rho.a[pos] and idx[pos] == 3) for pos in range(rho.f))


def x_rho(rho):
    """Admissible elements compatible with the zero-pattern of a: position i
    must avoid index 3 whenever a_i != 0.  Also asserts the defining identity
    that this set is the union of x_sigma over the weight set."""
    out = [w for w in adm_set(rho.f) if w_in_x_rho(rho, w)]
    union = set()
    for bv, _ in serre_weights(rho).entries:
        union.update(x_sigma(rho, bv))
    if union != set(out):
        raise InternalCheckError("x_rho does not match the union of the x_sigma")
    return out


# ---------------------------------------------------------------------------
# inertial-type presentations


@dataclass(frozen=True)
class TypePresentation:
    wtilde: ExtendedWeylElt
    s_tau: tuple  # f S2-elements (0/1)
    mu_tau: tuple  # Weight
    mu_plus_eta: tuple  # Weight, = mu_tau + eta componentwise
    generic_depth: int


# cells of the presentation table: keys (nu', w, s) with nu' the left
# translation part and w the S2 part of the starred component, s the
# profile's S2 element; value True means the (r_j, 0) row.
_TABLE_A = {((2, 1), 0, 0), ((2, 1), 1, 1), ((1, 2), 0, 1)}
_TABLE_B = {((2, 1), 0, 1), ((2, 1), 1, 0), ((1, 2), 0, 0)}


def tau_presentation(rho, wtilde):
    """Type presentation attached to an admissible element.

    Star the element, write each component in left-translation form t_nu' w,
    then read (mu_tau + eta)_j from the two-row table keyed by (nu', w, s_j)
    and set s_tau_j = s_j * w_j^{-1}.
    """
    if wtilde.f != rho.f:
        raise ConfigError("admissible element has %d components, profile has f=%d" % (wtilde.f, rho.f))
    starred = wtilde.star()
    s_tau = []
    mu_plus_eta = []
    for j in range(rho.f):
        s_comp, nu_comp = starred.parts[j]
        nu_left = s_apply(s_comp, nu_comp)
        w_part = s_comp
        s_j = rho.s_component(j)
        key = (nu_left, w_part, s_j)
        if key in _TABLE_A:
            mu_plus_eta.append((rho.r[j], 0))
        elif key in _TABLE_B:
            mu_plus_eta.append((rho.r[j] + 1, -1))
        else:  # pragma: no cover - the six cells cover all canonical inputs
            raise InternalCheckError("presentation table has no cell for %r" % (key,))
        s_tau.append(s_j ^ w_part)
    mu_tau = tuple((x1 - 1, x2) for x1, x2 in mu_plus_eta)
    cls = classify_weight(mu_tau, rho.p)
    depth = cls.depth if cls.depth is not None else -1
    return TypePresentation(
        wtilde=wtilde,
        s_tau=tuple(s_tau),
        mu_tau=mu_tau,
        mu_plus_eta=tuple(mu_plus_eta),
        generic_depth=depth,
    )
