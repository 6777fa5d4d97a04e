"""Frobenius matrices of the profile, their gauge-normal-form counterparts,
and the Iwahori double-coset classification (shape) with checkable witnesses.

Conventions: the f matrices carry superscripts (i) with i = f-1-j; the matrix
with superscript i is built from alpha_j, beta_j, r_j and a_i.  Shapes are the
canonical (s, nu) pairs of weights.ExtendedWeylElt components.
"""

from dataclasses import dataclass

from .errors import ConfigError, InternalCheckError, PreconditionError
from .laurent import Laurent, series_div, series_inverse
from .matrices import Mat2, monomial_matrix
from .rho import tau_presentation, w_in_x_rho
from .weights import ADM_COMPONENTS, _ADM_INDEX, index_of


def _mono(field, c, d):
    return Laurent.monomial(field, c, d)


# ---------------------------------------------------------------------------
# profile matrices


def etale_matrices(rho):
    """The f Frobenius matrices of the profile, index i = superscript.

    Reducible: [[alpha_j v^(r_j+2), 0], [alpha_j a_i v^(r_j+2), beta_j v]].
    Irreducible: diagonal except at i = f-1 where the antidiagonal twist
    [[0, -beta_0 v], [alpha_0 v^(r_0+2), 0]] appears.
    """
    field = rho.field
    mats = [None] * rho.f
    z = Laurent.zero(field)
    for j in range(rho.f):
        i = rho.f - 1 - j
        al, be, rj = rho.alpha[j], rho.beta[j], rho.r[j]
        if rho.irreducible and j == 0:
            mats[i] = Mat2(field, z, _mono(field, -be, 1), _mono(field, al, rj + 2), z)
        else:
            mats[i] = Mat2(
                field,
                _mono(field, al, rj + 2),
                z,
                _mono(field, al * rho.a[i], rj + 2),
                _mono(field, be, 1),
            )
    return tuple(mats)


@dataclass(frozen=True)
class KisinData:
    rho: object
    wtilde: object
    tau: object
    mats: tuple


def kisin_matrices(rho, wtilde):
    """Gauge-normal-form matrices attached to an allowed admissible element.

    Per slot the matrix is keyed by the component of wtilde at position
    i = f-1-j; the translation-(1,2) component forces a_i = 0, so elements
    outside the allowed set are rejected.
    """
    if not w_in_x_rho(rho, wtilde):
        raise PreconditionError(
            "element %r is not allowed for this profile: a slot with nonzero "
            "extension parameter would need the translation-(1,2) component" % (wtilde,)
        )
    field = rho.field
    tau = tau_presentation(rho, wtilde)
    idx = index_of(wtilde)
    z = Laurent.zero(field)
    mats = [None] * rho.f
    for j in range(rho.f):
        i = rho.f - 1 - j
        al, be, ai = rho.alpha[j], rho.beta[j], rho.a[i]
        k = idx[i]
        if rho.irreducible and j == 0:
            if k == 1:
                m = Mat2(field, _mono(field, -be, 2), z, z, _mono(field, al, 1))
            elif k == 2:
                m = Mat2(field, z, _mono(field, -be, 1), _mono(field, al, 2), z)
            else:
                m = Mat2(field, _mono(field, -be, 1), z, z, _mono(field, al, 2))
        else:
            if k == 1:
                m = Mat2(field, _mono(field, al, 2), z, _mono(field, al * ai, 2), _mono(field, be, 1))
            elif k == 2:
                m = Mat2(field, z, _mono(field, al, 1), _mono(field, be, 2), _mono(field, al * ai, 1))
            else:
                m = Mat2(field, _mono(field, al, 1), z, z, _mono(field, be, 2))
        mats[i] = m
    return KisinData(rho=rho, wtilde=wtilde, tau=tau, mats=tuple(mats))


def verify_recovery(rho, wtilde):
    """Exact check that each gauge-form matrix recovers the profile matrix:
    A^(i) * s(tau)_j^{-1} * v^(mu_tau_j + eta_j) == Frobenius matrix (i),
    with i = f-1-j."""
    data = kisin_matrices(rho, wtilde)
    target = etale_matrices(rho)
    field = rho.field
    for j in range(rho.f):
        i = rho.f - 1 - j
        s_inv = monomial_matrix(field, data.tau.s_tau[j], (0, 0))
        vmu = monomial_matrix(field, 0, data.tau.mu_plus_eta[j])
        if data.mats[i] * s_inv * vmu != target[i]:
            return False
    return True


# ---------------------------------------------------------------------------
# gauge / height predicates


def gauge_check(M, component):
    """Degree-bound normal-form test against a single (s, nu) component.

    Writing the component as s t_nu: every column-k entry must have degree
    <= nu_k, the upper-right slot of M v^-nu s^-1 must vanish at degree 0
    (equivalently deg M12 <= nu2 - 1 for s = 1 and deg M11 <= nu1 - 1 for
    the swap), and det(M) must be nonzero of degree exactly nu1 + nu2 so the
    leading coefficient matrix is invertible.
    """
    s, (n1, n2) = component
    d = M.det()
    if d.is_zero() or d.degree() != n1 + n2:
        return False
    if M.a11.degree() > n1 or M.a21.degree() > n1:
        return False
    if M.a12.degree() > n2 or M.a22.degree() > n2:
        return False
    if s == 0:
        return M.a12.degree() <= n2 - 1
    return M.a11.degree() <= n1 - 1


def height_check(M, lam, bound_mode="exact"):
    """Entry/determinant valuation bounds for a height pair lam = (l1, l2).

    exact: every entry has valuation >= l2 and det has valuation exactly
    l1 + l2.  window: det only has to be nonzero of valuation <= l1 + l2.
    """
    l1, l2 = lam
    if not l1 >= l2 >= 0:
        raise ConfigError("height pair must satisfy l1 >= l2 >= 0")
    if bound_mode not in ("exact", "window"):
        raise ConfigError("bound_mode must be 'exact' or 'window'")
    for e in M.entries():
        if e and e.valuation() < l2:
            return False
    d = M.det()
    if d.is_zero():
        return False
    if bound_mode == "exact":
        return d.valuation() == l1 + l2
    return d.valuation() <= l1 + l2


# ---------------------------------------------------------------------------
# shape classification


@dataclass
class Shape:
    s: int
    nu: tuple
    left: Mat2
    right: Mat2
    check_precision: int
    field: object

    def component(self):
        return (self.s, self.nu)

    def adm_index(self):
        """1, 2 or 3 when the component is admissible, else None."""
        return _ADM_INDEX.get((self.s, self.nu))

    def monomial(self):
        return monomial_matrix(self.field, self.s, self.nu)

    def verify(self, M):
        """Recompute left * M * right and compare with the monomial matrix
        modulo v^check_precision."""
        return (self.left * M * self.right).truncate(self.check_precision) == self.monomial()


def iwahori_check(M, prec=None):
    """Membership test for the standard Iwahori subgroup over F[[v]]: entries
    of valuation >= 0, lower-left valuation >= 1, unit diagonal, unit det.
    When prec is given, conditions are only required on the visible window."""
    for e in M.entries():
        if e and e.valuation() < 0:
            return False
    if M.a21 and M.a21.valuation() < 1:
        return False
    if not (M.a11.coeff(0) and M.a22.coeff(0)):
        return False
    d = M.det()
    if prec is not None:
        d = d.truncate(prec)
    return bool(d) and d.valuation() == 0


def shape_of(M):
    """Iwahori double-coset classification of an invertible matrix over the
    Laurent field, with elementary-matrix witnesses.

    OUTPUT: Shape(s, nu, left, right, check_precision) such that
    left * M * right == (s-permutation) * v^nu modulo v^check_precision,
    with left and right products of Iwahori elementary matrices.  The
    clearing coefficients are truncated power series, so cleared entries sit
    above the certification precision rather than vanishing identically; all
    valuation decisions happen far below that precision.
    """
    field = M.field
    det = M.det()
    if det.is_zero():
        raise PreconditionError("shape classification needs an invertible matrix")
    D = det.valuation()
    m0 = M.min_valuation()
    m0n = min(m0, 0)
    p_trunc = D - m0 - m0n + 8
    p_check = D - m0 + 4

    state = {
        "R": M,
        "U": Mat2.identity(field),
        "V": Mat2.identity(field),
    }

    def left(E):
        state["U"] = E * state["U"]
        state["R"] = E * state["R"]

    def right(E):
        state["V"] = state["V"] * E
        state["R"] = state["R"] * E

    def entry(i, k):
        R = state["R"]
        return (R.a11, R.a12, R.a21, R.a22)[(i - 1) * 2 + (k - 1)]

    # Phase 1: reduce column 1 to a single significant entry.
    e11, e21 = entry(1, 1), entry(2, 1)
    if e11 and e21:
        if e11.valuation() < e21.valuation():
            c = -series_div(e21, e11, p_trunc)
            left(Mat2.elementary(field, 2, 1, c))
            i1 = 1
        else:
            # ties included: the lower elementary would need valuation >= 1
            c = -series_div(e11, e21, p_trunc)
            left(Mat2.elementary(field, 1, 2, c))
            i1 = 2
    elif e11:
        i1 = 1
    elif e21:
        i1 = 2
    else:  # pragma: no cover - zero column contradicts det != 0
        raise InternalCheckError("zero first column with nonzero determinant")
    i2 = 3 - i1

    # Phase 2: reduce column 2 against the survivor.
    Y = entry(i1, 1)
    X = entry(i1, 2)
    Z = entry(i2, 2)
    if X and not Z:  # pragma: no cover - contradicts det valuation bookkeeping
        raise InternalCheckError("degenerate column 2 during reduction")
    if not X:
        rows = (i1, i2)  # already bidiagonal: col1 at i1, col2 at i2
    elif X.valuation() >= Y.valuation():
        # clear X with an upper column operation against column 1
        c = -series_div(X, Y, p_trunc)
        right(Mat2.elementary(field, 1, 2, c))
        rows = (i1, i2)
    else:
        ok_row_op = (
            X.valuation() >= Z.valuation() if i1 < i2 else X.valuation() > Z.valuation()
        )
        if ok_row_op:
            c = -series_div(X, Z, p_trunc)
            left(Mat2.elementary(field, i1, i2, c))
            rows = (i1, i2)
        else:
            # X is the strict minimum: clear Z from row i1, then fix column 1
            c = -series_div(Z, X, p_trunc)
            left(Mat2.elementary(field, i2, i1, c))
            c2 = -series_div(entry(i1, 1), X, p_trunc)
            right(Mat2.elementary(field, 2, 1, c2))
            rows = (i2, i1)

    row1, row2 = rows  # column 1 survives at row1, column 2 at row2
    s = 0 if row1 == 1 else 1
    s1 = entry(row1, 1)
    s2 = entry(row2, 2)
    nu = (s1.valuation(), s2.valuation())

    # Phase 3: normalize leading coefficients with a diagonal unit.
    u1 = series_inverse(s1.shift(-nu[0]), p_trunc)
    u2 = series_inverse(s2.shift(-nu[1]), p_trunc)
    right(Mat2.diagonal(field, u1, u2))

    shape = Shape(
        s=s,
        nu=nu,
        left=state["U"],
        right=state["V"],
        check_precision=p_check,
        field=field,
    )
    if state["R"].truncate(p_check) != shape.monomial():
        raise InternalCheckError("reduction did not terminate on a monomial matrix")
    if not shape.verify(M):
        raise InternalCheckError("witness product mismatch")
    return shape


def shapes_of_kisin(data):
    """Shape components of every matrix in a KisinData, superscript order."""
    return tuple(shape_of(m).component() for m in data.mats)


# ---------------------------------------------------------------------------
# first-order rigidity of the gauge normal form


def _field_kernel_dim(rows, ncols, field):
    # small dense Gaussian elimination over an arbitrary finite field
    pivots = {}
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = r[c].inverse()
                pivots[c] = {k: v * inv for k, v in r.items()}
                break
            coef = r.pop(c)
            for k, v in piv.items():
                if k == c:
                    continue
                nv = r.get(k, field.zero()) - coef * v
                if nv:
                    r[k] = nv
                elif k in r:
                    del r[k]
    return ncols - len(pivots)


def torus_rigidity_dims(data, H=4):
    """Dimension of the space of first-order diagonal basis perturbations
    preserving all gauge degree bounds, against the expected count.

    Perturbing the basis of slot i by 1 + eps*h^(i) (h diagonal with
    polynomial entries of degree <= H) moves the matrix by
    h^(i) A^(i) - A^(i) phi(h^(i-1)); the degree bounds on that movement and
    on the first-order determinant form a linear system over the field.

    OUTPUT: (kernel_dimension, expected) with expected = 2f, the constant
    rescaling in each slot.  Prime-field profiles only: the coefficient
    twist inside phi is not field-linear over proper extensions.
    """
    rho = data.rho
    field = rho.field
    if field.degree != 1:
        raise PreconditionError("torus rigidity is implemented over prime fields")
    f = rho.f
    idx = index_of(data.wtilde)
    ncols = 2 * f * (H + 1)

    def var(i, comp, d):
        return (i * 2 + comp) * (H + 1) + d

    rows = []
    p = rho.p
    for i in range(f):
        iprev = (i - 1) % f
        A = data.mats[i]
        s, (n1, n2) = ADM_COMPONENTS[idx[i]]
        bounds = {(1, 1): n1, (2, 1): n1, (1, 2): n2, (2, 2): n2}
        if s == 0:
            bounds[(1, 2)] = n2 - 1
        else:
            bounds[(1, 1)] = n1 - 1
        for (l, k), bound in bounds.items():
            a = (A.a11, A.a12, A.a21, A.a22)[(l - 1) * 2 + (k - 1)]
            if a.is_zero():
                continue
            # P_lk = a * (h_l^(i) - phi(h_k^(i-1))); constrain degrees > bound
            maxdeg = a.degree() + p * H
            for g in range(bound + 1, maxdeg + 1):
                row = {}
                for d, coeff in a.coeffs.items():
                    e = g - d
                    if 0 <= e <= H:
                        col = var(i, l - 1, e)
                        row[col] = row.get(col, field.zero()) + coeff
                    if e >= 0 and e % p == 0 and e // p <= H:
                        col = var(iprev, k - 1, e // p)
                        row[col] = row.get(col, field.zero()) - coeff
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows.append(row)
        # determinant: det * (h_1 + h_2 - phi(h_1') - phi(h_2')); degrees
        # above n1 + n2 must vanish
        det = A.det()
        maxdeg = det.degree() + p * H
        for g in range(n1 + n2 + 1, maxdeg + 1):
            row = {}
            for d, coeff in det.coeffs.items():
                e = g - d
                if 0 <= e <= H:
                    for comp in (0, 1):
                        col = var(i, comp, e)
                        row[col] = row.get(col, field.zero()) + coeff
                if e >= 0 and e % p == 0 and e // p <= H:
                    for comp in (0, 1):
                        col = var(iprev, comp, e // p)
                        row[col] = row.get(col, field.zero()) - coeff
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
    dim = _field_kernel_dim(rows, ncols, field)
    return dim, 2 * f
