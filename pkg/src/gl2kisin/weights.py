"""Weight and extended-Weyl-element combinatorics for GL2 over an unramified
base with f embeddings.

A Weight is a tuple of f integer pairs (lam_{j,1}, lam_{j,2}).  An extended
Weyl element is stored in the canonical form w = s t_nu per component, with
s in {0, 1} (1 = the nontrivial swap) and nu an integer pair; compositions
renormalize through s t_nu = t_{s(nu)} s.
"""

import itertools
from dataclasses import dataclass

from .errors import ConfigError, PreconditionError


def s_apply(s, pair):
    return (pair[1], pair[0]) if s else (pair[0], pair[1])


def s_sign(s):
    return -1 if s else 1


# ---------------------------------------------------------------------------
# weight classification


@dataclass(frozen=True)
class WeightClass:
    dominant: bool
    p_restricted: bool
    regular: bool
    depth: object  # int when regular, else None


def pair_gap(pair):
    return pair[0] - pair[1]


def classify_weight(lam, p):
    """Dominance / p-restriction / regularity and depth of a Weight.

    depth = min_j min(gap_j, p - 2 - gap_j) where gap_j = lam_{j,1} - lam_{j,2};
    it is only defined (non-None) for regular weights.
    """
    gaps = [pair_gap(pair) for pair in lam]
    dominant = all(g >= 0 for g in gaps)
    p_restricted = all(0 <= g <= p - 1 for g in gaps)
    regular = all(0 <= g <= p - 2 for g in gaps)
    depth = min(min(g, p - 2 - g) for g in gaps) if regular else None
    return WeightClass(dominant, p_restricted, regular, depth)


def eta(f):
    """The per-component shift (1, 0)."""
    return ((1, 0),) * f


def weight_sub(lam, mu):
    return tuple((a1 - b1, a2 - b2) for (a1, a2), (b1, b2) in zip(lam, mu))


def weight_add(lam, mu):
    return tuple((a1 + b1, a2 + b2) for (a1, a2), (b1, b2) in zip(lam, mu))


# ---------------------------------------------------------------------------
# extended Weyl elements and the admissible set

# canonical (s, nu) forms of the three admissible components, indexed 1..3
ADM_COMPONENTS = {
    1: (0, (2, 1)),
    2: (1, (2, 1)),
    3: (0, (1, 2)),
}
_ADM_INDEX = {v: k for k, v in ADM_COMPONENTS.items()}


class ExtendedWeylElt:
    """Tuple of per-component (s, nu) pairs in canonical form."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple((s, (int(n1), int(n2))) for s, (n1, n2) in parts)

    @property
    def f(self):
        return len(self.parts)

    def star(self):
        """Component j of the result is t_{nu_k} s_k^{-1} for k = f-1-j,
        renormalized to canonical form (s_k, s_k(nu_k))."""
        out = []
        for s, nu in reversed(self.parts):
            out.append((s, s_apply(s, nu)))
        return ExtendedWeylElt(out)

    def left_translation_form(self):
        """Per component, the pair (nu', w) with s t_nu = t_{nu'} w."""
        return tuple((s_apply(s, nu), s) for s, nu in self.parts)

    def translation_sum(self):
        return tuple(nu for _, nu in self.parts)

    def __eq__(self, other):
        return isinstance(other, ExtendedWeylElt) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        names = {(0, (2, 1)): "t(2,1)", (1, (2, 1)): "w*t(2,1)", (0, (1, 2)): "t(1,2)"}
        bits = []
        for s, nu in self.parts:
            key = (s, nu)
            if key in names:
                bits.append(names[key])
            elif s:
                bits.append("w*t(%d,%d)" % nu)
            else:
                bits.append("t(%d,%d)" % nu)
        return "(" + ", ".join(bits) + ")"


def from_index(idx):
    """Extended Weyl element from an index tuple over {1, 2, 3}."""
    try:
        return ExtendedWeylElt(tuple(ADM_COMPONENTS[i] for i in idx))
    except KeyError:
        raise ConfigError("admissible indices are 1, 2, 3; got %r" % (idx,))


def index_of(w):
    """Index tuple over {1,2,3}; errors if a component is not admissible."""
    out = []
    for part in w.parts:
        i = _ADM_INDEX.get(part)
        if i is None:
            raise ConfigError("component %r is not admissible" % (part,))
        out.append(i)
    return tuple(out)


def adm_set(f):
    """All 3^f admissible elements, lexicographic in the index tuples."""
    return [from_index(idx) for idx in itertools.product((1, 2, 3), repeat=f)]


# ---------------------------------------------------------------------------
# the extension-graph labelling


@dataclass(frozen=True)
class SerreWeightLabel:
    """Complete invariant of an irreducible GL2(k) weight: the per-component
    differences and the determinant twist mod p^f - 1."""

    diffs: tuple
    twist: int


def make_label(diffs, twist, p):
    f = len(diffs)
    return SerreWeightLabel(tuple(int(d) for d in diffs), twist % (p ** f - 1))


def window_check(mu, omega, p):
    """True iff 0 <= gap_j + omega_j <= p - 2 for every component."""
    return all(0 <= pair_gap(pair) + w <= p - 2 for pair, w in zip(mu, omega))


def _graph_data(diffs, omega, p):
    f = len(diffs)
    for r, w in zip(diffs, omega):
        if not 0 <= r + w <= p - 2:
            raise PreconditionError(
                "graph point %r is outside the window of base %r" % (tuple(omega), tuple(diffs))
            )
    delta = [w % 2 for w in omega]
    rprime = []
    for j in range(f):
        if delta[(j + 1) % f] == 0:
            rprime.append(diffs[j] + omega[j])
        else:
            rprime.append(p - 2 - diffs[j] - omega[j])
    num = delta[0] * (p ** f - 1) + sum((diffs[j] - rprime[j]) * p ** j for j in range(f))
    if num % 2:
        raise PreconditionError("graph twist is not integral")  # unreachable for valid input
    return tuple(rprime), num // 2


def ext_graph_lambda(mu, omega, p):
    """Label of the graph point omega relative to the base weight mu.

    INPUT: mu a Weight whose components are (r_j, 0); omega an integer vector.
    OUTPUT: SerreWeightLabel with the two-case difference formula and the
    half-integer twist, reduced mod p^f - 1.
    """
    for pair in mu:
        if pair[1] != 0:
            raise ConfigError("base weight components must have the form (r_j, 0)")
    diffs = tuple(pair[0] for pair in mu)
    rprime, e = _graph_data(diffs, omega, p)
    return make_label(rprime, e, p)


def t_lambda(base, omega, p):
    """Graph labelling at a general base label: the difference formula is
    applied to base.diffs and the twist accumulates."""
    rprime, e = _graph_data(base.diffs, omega, p)
    return make_label(rprime, base.twist + e, p)
