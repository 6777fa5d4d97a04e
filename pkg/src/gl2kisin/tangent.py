"""First-order rigidity system for reducible non-split profiles.

Perturb the basis of every slot by a 2x2 polynomial matrix (coefficients up
to a degree bound), allow a small set of low-degree correction parameters
per slot plus four global framing parameters, and require that the
perturbed Frobenius matrices keep the triangular coefficient structure of
the profile after one Frobenius turn.  Everything is linear over the prime
field, so the claim "the only solutions are global rescalings" becomes a
kernel computation; the module assembles the system with labeled rows,
solves it, and cross-checks every kernel vector by exact Laurent-series
substitution.
"""

from dataclasses import dataclass

from . import fp_linalg
from .errors import ConfigError, PreconditionError
from .laurent import Laurent, phi_twist
from .matrices import Mat2

# per-slot low-degree correction parameters; p<entry>_<degree> sits in the
# (entry) position of the correction matrix with v-degree (m2 = -2, m1 = -1)
PARAM_NAMES = (
    "p11_m2",
    "p11_m1",
    "p12_m1",
    "p12_m2",
    "p22_m1",
    "p22_m2",
    "p21_m1",
    "p11_0",
    "p22_0",
    "p21_0",
)
_PARAM_INDEX = {n: i for i, n in enumerate(PARAM_NAMES)}
_NEGATIVE_DEGREE_PARAMS = tuple(n for n in PARAM_NAMES if n.endswith(("m1", "m2")))

FRAME_NAMES = ("frame_11", "frame_12", "frame_21", "frame_22")
_FRAME_INDEX = {n: i for i, n in enumerate(FRAME_NAMES)}

M11, M12, M21, M22 = 0, 1, 2, 3


@dataclass(frozen=True)
class SlotData:
    """Coefficient matrix [[a11, 0], [a21, a22]] and degree shift of a slot:
    the slot's Frobenius matrix is v * [[a11,0],[a21,a22]] * diag(v^shift, 1)
    with a11 = alpha_j, a21 = alpha_j a_{f-1-j}, a22 = beta_j, shift = r_j+1.
    """

    a11: object
    a21: object
    a22: object
    shift: int


def slot_data(rho):
    out = []
    for j in range(rho.f):
        out.append(
            SlotData(
                a11=rho.alpha[j],
                a21=rho.alpha[j] * rho.a[rho.f - 1 - j],
                a22=rho.beta[j],
                shift=rho.r[j] + 1,
            )
        )
    return tuple(out)


def pivot_slot(rho):
    """Least slot with a nonzero extension coupling a21."""
    for j in range(rho.f):
        if rho.a[rho.f - 1 - j]:
            return j
    raise PreconditionError("split profile has no pivot slot")


def _require_tangent_profile(rho):
    if rho.irreducible:
        raise PreconditionError("the rigidity system needs a reducible profile")
    if rho.semisimple():
        raise PreconditionError("the rigidity system needs a non-split profile")
    if rho.field.degree != 1:
        raise PreconditionError("the rigidity system is implemented over prime fields")


class TangentSystem:
    """Labeled sparse linear system over F_p.

    rows is a list of (label, {column: int}) pairs.  Row families:
      ("rec", j, l, k, e)   coefficient e of entry (l,k) of the slot-j
                            recurrence  M^(j-1) Delta_j - Delta_j Phi_j - P_j
      ("pin", name, j)      a parameter pinned to zero, including the
                            droppable ("pin", "p21_0", pivot) row
      ("weight", name, j)   the degree -2 correction killed by the chosen
                            weight selector b
      ("frame", name, None) global framing: frame_12 = frame_21 = 0 and
                            frame_11 = frame_22
    """

    def __init__(self, rho, b, degree_bound, min_degree, rows):
        self.rho = rho
        self.b = b
        self.degree_bound = degree_bound
        self.min_degree = min_degree
        self.rows = rows
        self.p = rho.p
        self.f = rho.f
        self.width = degree_bound - min_degree + 1
        self.n_param_cols = 10 * rho.f + 4
        self.ncols = self.n_param_cols + 4 * rho.f * self.width

    def col_param(self, j, name):
        return j * 10 + _PARAM_INDEX[name]

    def col_frame(self, name):
        return 10 * self.f + _FRAME_INDEX[name]

    def col_m(self, j, comp, e):
        return self.n_param_cols + (j * 4 + comp) * self.width + (e - self.min_degree)

    def labels(self):
        return [lab for lab, _row in self.rows]

    def without(self, label_prefix):
        """Copy of the system minus all rows whose label starts with the
        given tuple; used for the negative control (drop the pivot pin)."""
        prefix = tuple(label_prefix)
        kept = [(lab, row) for lab, row in self.rows if lab[: len(prefix)] != prefix]
        if len(kept) == len(self.rows):
            raise ConfigError("no row labeled %r to drop" % (prefix,))
        clone = TangentSystem.__new__(TangentSystem)
        clone.__dict__.update(self.__dict__)
        clone.rows = kept
        return clone


def assemble_system(rho, b=None, degree_bound=None, min_degree=0):
    """Build the rigidity system for a reducible non-split prime-field
    profile.

    b: per-slot weight selector (0 or 1; 1 only on slots with vanishing
    extension parameter), default all zeros.  degree_bound: highest tracked
    v-degree of the perturbation matrices, default max(p, max(r) + 3).
    min_degree: lowest tracked degree, must be <= 0.
    """
    _require_tangent_profile(rho)
    f, p = rho.f, rho.p
    rmax = max(rho.r)
    if degree_bound is None:
        degree_bound = max(p, rmax + 3)
    if degree_bound < rmax + 3:
        raise ConfigError("degree bound %d is below max(r) + 3 = %d" % (degree_bound, rmax + 3))
    if min_degree > 0:
        raise ConfigError("min_degree must be <= 0")
    if b is None:
        b = (0,) * f
    b = tuple(b)
    if len(b) != f or any(bj not in (0, 1) for bj in b):
        raise ConfigError("weight selector must be f values in {0, 1}")
    for j in range(f):
        if b[j] == 1 and rho.a[f - 1 - j]:
            raise ConfigError("weight selector is 1 on slot %d with nonzero extension parameter" % j)

    slots = slot_data(rho)
    rows = []
    system = TangentSystem(rho, b, degree_bound, min_degree, rows)

    def bump(row, col, val):
        val %= p
        if val:
            row[col] = (row.get(col, 0) + val) % p

    def add_m(row, j, comp, e, val):
        if min_degree <= e <= degree_bound:
            bump(row, system.col_m(j, comp, e), val)

    def add_param(row, j, name, val):
        bump(row, system.col_param(j, name), val)

    for j in range(f):
        sd = slots[j]
        jm = (j - 1) % f
        a11, a21, a22 = sd.a11.to_int(), sd.a21.to_int(), sd.a22.to_int()
        sh = sd.shift
        emin = min(-2, min_degree, p * min_degree - sh)
        for e in range(emin, degree_bound + 1):
            # entry (1,1): a11 m11' + a21 m12' - a11 phi(m11) - P11
            row = {}
            add_m(row, jm, M11, e, a11)
            add_m(row, jm, M12, e, a21)
            if e % p == 0:
                add_m(row, j, M11, e // p, -a11)
            if e == 0:
                add_param(row, j, "p11_0", -1)
            elif e == -1:
                add_param(row, j, "p11_m1", -1)
            elif e == -2:
                add_param(row, j, "p11_m2", -1)
            if row:
                rows.append((("rec", j, 1, 1, e), row))
            # entry (1,2): a22 m12' - a11 v^sh phi(m12) - P12
            row = {}
            add_m(row, jm, M12, e, a22)
            if (e - sh) % p == 0:
                add_m(row, j, M12, (e - sh) // p, -a11)
            if e == -1:
                add_param(row, j, "p12_m1", -1)
            elif e == -2:
                add_param(row, j, "p12_m2", -1)
            if row:
                rows.append((("rec", j, 1, 2, e), row))
            # entry (2,1): a11 m21' + a21 m22' - a21 phi(m11) - a22 v^-sh phi(m21) - P21
            row = {}
            add_m(row, jm, M21, e, a11)
            add_m(row, jm, M22, e, a21)
            if e % p == 0:
                add_m(row, j, M11, e // p, -a21)
            if (e + sh) % p == 0:
                add_m(row, j, M21, (e + sh) // p, -a22)
            if e == 0:
                add_param(row, j, "p21_0", -1)
            elif e == -1:
                add_param(row, j, "p21_m1", -1)
            if row:
                rows.append((("rec", j, 2, 1, e), row))
            # entry (2,2): a22 m22' - a21 v^sh phi(m12) - a22 phi(m22) - P22
            row = {}
            add_m(row, jm, M22, e, a22)
            if (e - sh) % p == 0:
                add_m(row, j, M12, (e - sh) // p, -a21)
            if e % p == 0:
                add_m(row, j, M22, e // p, -a22)
            if e == 0:
                add_param(row, j, "p22_0", -1)
            elif e == -1:
                add_param(row, j, "p22_m1", -1)
            elif e == -2:
                add_param(row, j, "p22_m2", -1)
            if row:
                rows.append((("rec", j, 2, 2, e), row))

    for j in range(f - 1):
        rows.append((("pin", "p11_0", j), {system.col_param(j, "p11_0"): 1}))
        rows.append((("pin", "p22_0", j), {system.col_param(j, "p22_0"): 1}))
    rows.append((("pin", "frame_22", None), {system.col_frame("frame_22"): 1}))
    rows.append((("pin", "p21_0", pivot_slot(rho)), {system.col_param(pivot_slot(rho), "p21_0"): 1}))
    for j in range(f):
        name = "p22_m2" if b[j] == 0 else "p11_m2"
        rows.append((("weight", name, j), {system.col_param(j, name): 1}))
    rows.append((("frame", "frame_12", None), {system.col_frame("frame_12"): 1}))
    rows.append((("frame", "frame_21", None), {system.col_frame("frame_21"): 1}))
    rows.append(
        (
            ("frame", "diag", None),
            {system.col_frame("frame_11"): 1, system.col_frame("frame_22"): p - 1},
        )
    )
    return system


# ---------------------------------------------------------------------------
# solving and reporting


@dataclass
class TangentReport:
    system: TangentSystem
    kernel: list
    rank: int
    kernel_dim: int
    param_kernel_dim: int
    m_kernel_dim: int
    injective: bool


def _projected_rank(vectors, p):
    rows = []
    for v in vectors:
        row = {i: c for i, c in enumerate(v) if c % p}
        if row:
            rows.append(row)
    if not rows:
        return 0
    ncols = max(max(r) for r in rows) + 1
    return fp_linalg.kernel_basis(rows, ncols, p)[1]


def solve_claim(system):
    """Kernel of the system, with the dimensions of its projections onto
    the correction/framing block and onto the perturbation block.  The
    rigidity claim is injective = True: no kernel direction touches the
    correction parameters."""
    raw = [row for _lab, row in system.rows]
    basis, rank = fp_linalg.kernel_basis(raw, system.ncols, system.p)
    n = system.n_param_cols
    param_dim = _projected_rank([v[:n] for v in basis], system.p)
    m_dim = _projected_rank([v[n:] for v in basis], system.p)
    return TangentReport(
        system=system,
        kernel=basis,
        rank=rank,
        kernel_dim=len(basis),
        param_kernel_dim=param_dim,
        m_kernel_dim=m_dim,
        injective=param_dim == 0,
    )


def consequence_report(report):
    """Structural facts about every kernel vector.

    negative_degree_params_zero: all degree -1/-2 corrections vanish.
    upper_right_zero: the (1,2) perturbation entry is identically zero.
    lower_left_divisible: the (2,1) perturbation entry is divisible by v.
    corner_relations: the degree-0 corrections equal the matched
    differences of constant terms across one Frobenius turn.
    """
    system = report.system
    p, f = system.p, system.f
    slots = slot_data(system.rho)
    out = {
        "negative_degree_params_zero": True,
        "upper_right_zero": True,
        "lower_left_divisible": True,
        "corner_relations": True,
    }
    for vec in report.kernel:
        for j in range(f):
            for name in _NEGATIVE_DEGREE_PARAMS:
                if vec[system.col_param(j, name)] % p:
                    out["negative_degree_params_zero"] = False
            for e in range(system.min_degree, system.degree_bound + 1):
                if vec[system.col_m(j, M12, e)] % p:
                    out["upper_right_zero"] = False
                if e < 1 and vec[system.col_m(j, M21, e)] % p:
                    out["lower_left_divisible"] = False
        for j in range(f):
            jm = (j - 1) % f
            sd = slots[j]
            m11_prev = vec[system.col_m(jm, M11, 0)]
            m11_here = vec[system.col_m(j, M11, 0)]
            m22_prev = vec[system.col_m(jm, M22, 0)]
            m22_here = vec[system.col_m(j, M22, 0)]
            ok = (
                (sd.a11.to_int() * (m11_prev - m11_here) - vec[system.col_param(j, "p11_0")]) % p == 0
                and (sd.a21.to_int() * (m22_prev - m11_here) - vec[system.col_param(j, "p21_0")]) % p == 0
                and (sd.a22.to_int() * (m22_prev - m22_here) - vec[system.col_param(j, "p22_0")]) % p == 0
            )
            if not ok:
                out["corner_relations"] = False
    return out


def residual_check(report):
    """Independent validation of the assembled rows: substitute each kernel
    vector into the recurrence with exact Laurent arithmetic and confirm
    that every residual coefficient up to the degree bound vanishes."""
    system = report.system
    rho = system.rho
    field = rho.field
    f = system.f
    slots = slot_data(rho)
    zero = Laurent.zero(field)
    for vec in report.kernel:
        Ms, Ps = [], []
        for j in range(f):
            def entry(comp, j=j):
                return Laurent(
                    field,
                    {
                        e: field(vec[system.col_m(j, comp, e)])
                        for e in range(system.min_degree, system.degree_bound + 1)
                    },
                )

            Ms.append(Mat2(field, entry(M11), entry(M12), entry(M21), entry(M22)))

            def par(name, j=j):
                return field(vec[system.col_param(j, name)])

            Ps.append(
                Mat2(
                    field,
                    Laurent(field, {0: par("p11_0"), -1: par("p11_m1"), -2: par("p11_m2")}),
                    Laurent(field, {-1: par("p12_m1"), -2: par("p12_m2")}),
                    Laurent(field, {0: par("p21_0"), -1: par("p21_m1")}),
                    Laurent(field, {0: par("p22_0"), -1: par("p22_m1"), -2: par("p22_m2")}),
                )
            )
        for j in range(f):
            sd = slots[j]
            delta = Mat2(
                field,
                Laurent.const(field, sd.a11),
                zero,
                Laurent.const(field, sd.a21),
                Laurent.const(field, sd.a22),
            )
            mj = Ms[j]
            conj = Mat2(
                field,
                phi_twist(mj.a11),
                phi_twist(mj.a12).shift(sd.shift),
                phi_twist(mj.a21).shift(-sd.shift),
                phi_twist(mj.a22),
            )
            residual = Ms[(j - 1) % f] * delta - delta * conj - Ps[j]
            if residual.truncate(system.degree_bound + 1) != Mat2.zero(field):
                return False
    return True


def stability_check(rho, b=None, degree_bound=None, min_degree=0):
    """Solve at the degree bound and again one Frobenius step higher; the
    reported dimensions must not move.  Returns (report, report_higher,
    stable)."""
    first = solve_claim(assemble_system(rho, b, degree_bound, min_degree))
    higher = solve_claim(
        assemble_system(rho, b, first.system.degree_bound + rho.p, min_degree)
    )
    stable = (
        first.kernel_dim,
        first.param_kernel_dim,
        first.m_kernel_dim,
    ) == (higher.kernel_dim, higher.param_kernel_dim, higher.m_kernel_dim)
    return first, higher, stable
