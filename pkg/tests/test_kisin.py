import random

import pytest

from gl2kisin.errors import ConfigError, PreconditionError
from gl2kisin.fields import GF
from gl2kisin.kisin import (
    Shape,
    etale_matrices,
    gauge_check,
    height_check,
    iwahori_check,
    kisin_matrices,
    shape_of,
    shapes_of_kisin,
    torus_rigidity_dims,
    verify_recovery,
)
from gl2kisin.laurent import Laurent
from gl2kisin.matrices import Mat2, monomial_matrix
from gl2kisin.rho import RhoBar, x_rho
from gl2kisin.weights import ADM_COMPONENTS, from_index, index_of

from conftest import random_profile

F31 = GF(31)


def mono(field, c, d):
    return Laurent.monomial(field, c, d)


# ---------------------------------------------------------------------------
# profile matrices and their gauge normal forms


def test_etale_frozen_nonsplit(f1_nonsplit):
    (m,) = etale_matrices(f1_nonsplit)
    # alpha v^(r+2) = 3 v^15, alpha*a = 21, beta v = 5v
    assert m.a11 == mono(F31, 3, 15)
    assert m.a12.is_zero()
    assert m.a21 == mono(F31, 21, 15)
    assert m.a22 == mono(F31, 5, 1)


def test_etale_frozen_irreducible(f1_irred):
    (m,) = etale_matrices(f1_irred)
    assert m.a11.is_zero() and m.a22.is_zero()
    assert m.a12 == mono(F31, -5, 1)
    assert m.a21 == mono(F31, 3, 15)


def test_etale_frozen_mixed(f2_mixed):
    m1, m0 = etale_matrices(f2_mixed)[1], etale_matrices(f2_mixed)[0]
    # superscript 1 holds slot j=0 data with a_1 = 9
    assert m1.a11 == mono(F31, 3, 15)
    assert m1.a21 == mono(F31, 27, 15)
    assert m1.a22 == mono(F31, 5, 1)
    # superscript 0 holds slot j=1 data with a_0 = 0
    assert m0.a11 == mono(F31, 2, 17)
    assert m0.a21.is_zero()
    assert m0.a22 == mono(F31, 11, 1)


@pytest.mark.parametrize(
    "idx,want",
    [
        ((1,), (("a11", 3, 2), ("a21", 21, 2), ("a22", 5, 1))),
        ((2,), (("a12", 3, 1), ("a21", 5, 2), ("a22", 21, 1))),
    ],
)
def test_kisin_frozen_nonsplit(f1_nonsplit, idx, want):
    data = kisin_matrices(f1_nonsplit, from_index(idx))
    (m,) = data.mats
    nonzero = {name for name, _, _ in want}
    for name in ("a11", "a12", "a21", "a22"):
        e = getattr(m, name)
        if name in nonzero:
            continue
        assert e.is_zero(), name
    for name, c, d in want:
        assert getattr(m, name) == mono(F31, c, d), name


def test_kisin_frozen_split_component3(f1_split):
    data = kisin_matrices(f1_split, from_index((3,)))
    (m,) = data.mats
    assert m.a11 == mono(F31, 3, 1)
    assert m.a22 == mono(F31, 5, 2)
    assert m.a12.is_zero() and m.a21.is_zero()


def test_kisin_frozen_irreducible(f1_irred):
    forms = {
        (1,): (("a11", -5, 2), ("a22", 3, 1)),
        (2,): (("a12", -5, 1), ("a21", 3, 2)),
        (3,): (("a11", -5, 1), ("a22", 3, 2)),
    }
    for idx, want in forms.items():
        (m,) = kisin_matrices(f1_irred, from_index(idx)).mats
        entries = dict(zip(("a11", "a12", "a21", "a22"), m.entries()))
        for name, c, d in want:
            assert entries.pop(name) == mono(F31, c, d)
        for name, e in entries.items():
            assert e.is_zero(), name


def test_kisin_rejects_disallowed_element(f1_nonsplit):
    with pytest.raises(PreconditionError):
        kisin_matrices(f1_nonsplit, from_index((3,)))


def test_recovery_fixtures(f1_nonsplit, f1_split, f1_irred, f2_mixed):
    for rho in (f1_nonsplit, f1_split, f1_irred, f2_mixed):
        for w in x_rho(rho):
            assert verify_recovery(rho, w)


def test_recovery_product_identity(f2_mixed):
    """Re-assemble the defining product in the test and compare with the
    profile matrix entry by entry."""
    data = kisin_matrices(f2_mixed, from_index((2, 1)))
    target = etale_matrices(f2_mixed)
    for j in range(2):
        i = 1 - j
        prod = (
            data.mats[i]
            * monomial_matrix(F31, data.tau.s_tau[j], (0, 0))
            * monomial_matrix(F31, 0, data.tau.mu_plus_eta[j])
        )
        assert prod == target[i]


def test_recovery_random(rng):
    for p in (31, 37):
        for f in (1, 2):
            for irred in (False, True):
                rho = random_profile(rng, p, f, irreducible=irred)
                for w in x_rho(rho):
                    assert verify_recovery(rho, w)


# ---------------------------------------------------------------------------
# gauge and height predicates


def row_matrices(field, alpha, beta, a):
    """The three single-slot gauge forms with explicit unit parameters."""
    z = Laurent.zero(field)
    r1 = Mat2(field, mono(field, alpha, 2), z, mono(field, alpha * a, 2), mono(field, beta, 1))
    r2 = Mat2(field, z, mono(field, alpha, 1), mono(field, beta, 2), mono(field, alpha * a, 1))
    r3 = Mat2.diagonal(field, mono(field, alpha, 1), mono(field, beta, 2))
    return r1, r2, r3


def test_gauge_truth_table():
    F = GF(31)
    for a in (F(0), F(7)):
        r1, r2, r3 = row_matrices(F, F(3), F(5), a)
        assert gauge_check(r1, ADM_COMPONENTS[1])
        assert not gauge_check(r1, ADM_COMPONENTS[2])
        assert gauge_check(r2, ADM_COMPONENTS[2])
        assert not gauge_check(r2, ADM_COMPONENTS[1])
        assert gauge_check(r3, ADM_COMPONENTS[3])
        assert not gauge_check(r3, ADM_COMPONENTS[1])


def test_gauge_rejects_degree_violations():
    F = GF(31)
    # upper-right degree must be strictly below nu2 for the identity coset
    m = Mat2(F, mono(F, 1, 2), mono(F, 1, 1), Laurent.zero(F), mono(F, 1, 1))
    assert not gauge_check(m, (0, (2, 1)))
    # column bound violated
    m = Mat2(F, mono(F, 1, 3), Laurent.zero(F), Laurent.zero(F), mono(F, 1, 0))
    assert not gauge_check(m, (0, (2, 1)))
    # singular
    m = Mat2.diagonal(F, mono(F, 1, 2), Laurent.zero(F))
    assert not gauge_check(m, (0, (2, 1)))


def test_height_check_modes():
    F = GF(31)
    m = Mat2.diagonal(F, mono(F, 3, 2), mono(F, 5, 1))
    assert height_check(m, (2, 1))
    assert height_check(m, (2, 1), bound_mode="window")
    assert height_check(m, (3, 1), bound_mode="window")
    assert not height_check(m, (3, 1))  # det valuation 3 != 4
    # entry below the floor
    m2 = Mat2.diagonal(F, mono(F, 3, 0), mono(F, 5, 3))
    assert not height_check(m2, (2, 1))
    with pytest.raises(ConfigError):
        height_check(m, (1, 2))
    with pytest.raises(ConfigError):
        height_check(m, (2, 1), bound_mode="loose")
    assert not height_check(Mat2.zero(F), (2, 1))


def test_iwahori_check():
    F = GF(31)
    good = Mat2(F, Laurent.const(F, 2), mono(F, 4, 0), mono(F, 1, 1), Laurent.const(F, 1))
    assert iwahori_check(good)
    # lower-left valuation 0 is not allowed
    bad = Mat2(F, Laurent.const(F, 2), Laurent.zero(F), mono(F, 1, 0), Laurent.const(F, 1))
    assert not iwahori_check(bad)
    # non-unit diagonal
    bad2 = Mat2(F, mono(F, 1, 1), Laurent.zero(F), Laurent.zero(F), Laurent.const(F, 1))
    assert not iwahori_check(bad2)
    # negative valuation anywhere
    bad3 = Mat2(F, Laurent.const(F, 1), mono(F, 1, -1), Laurent.zero(F), Laurent.const(F, 1))
    assert not iwahori_check(bad3)
    # truncated matrices certify through the windowed form
    trunc = Mat2(F, Laurent.const(F, 1), mono(F, 5, 2), mono(F, 3, 1), Laurent.const(F, 1))
    assert iwahori_check(trunc, prec=4)


# ---------------------------------------------------------------------------
# shape classification


def rand_invertible(field, rng, lo=0, hi=4):
    while True:
        entries = [
            Laurent.from_pairs(
                field, [(rng.randrange(lo, hi), field.random(rng)) for _ in range(3)]
            )
            for _ in range(4)
        ]
        M = Mat2(field, *entries)
        if not M.det().is_zero():
            return M


def test_shape_requires_invertible():
    F = GF(31)
    with pytest.raises(PreconditionError):
        shape_of(Mat2.zero(F))
    col = mono(F, 1, 1)
    with pytest.raises(PreconditionError):
        shape_of(Mat2(F, col, col, col, col))


def test_shape_of_monomials():
    F = GF(31)
    for s in (0, 1):
        for nu in ((2, 1), (1, 2), (0, 5), (3, 3)):
            shape = shape_of(monomial_matrix(F, s, nu))
            assert (shape.s, shape.nu) == (s, nu)
            assert shape.verify(monomial_matrix(F, s, nu))


def test_shape_witnesses_random(rng):
    """Classification invariants on random invertible matrices: the witness
    identity holds, the witnesses are Iwahori, and the exponents add to the
    determinant valuation."""
    for field in (GF(2), GF(31), GF(3, 2)):
        for _ in range(40):
            M = rand_invertible(field, rng)
            shape = shape_of(M)
            assert shape.verify(M)
            assert iwahori_check(shape.left, prec=shape.check_precision)
            assert iwahori_check(shape.right, prec=shape.check_precision)
            assert sum(shape.nu) == M.det().valuation()


def test_shape_negative_valuations(rng):
    F = GF(5)
    for _ in range(25):
        M = rand_invertible(F, rng, lo=-3, hi=3)
        shape = shape_of(M)
        assert shape.verify(M)
        assert sum(shape.nu) == M.det().valuation()


def test_shape_invariant_under_iwahori_moves(rng):
    # multiplying by elementary Iwahori matrices never changes the component
    F = GF(31)
    for _ in range(15):
        M = rand_invertible(F, rng)
        base = shape_of(M).component()
        c_up = Laurent.from_pairs(F, [(0, F.random(rng)), (1, F.random(rng))])
        c_low = Laurent.from_pairs(F, [(1, F.random(rng)), (2, F.random(rng))])
        moved = Mat2.elementary(F, 1, 2, c_up) * M * Mat2.elementary(F, 2, 1, c_low)
        assert shape_of(moved).component() == base


def test_shape_adm_index():
    F = GF(31)
    assert shape_of(monomial_matrix(F, 0, (2, 1))).adm_index() == 1
    assert shape_of(monomial_matrix(F, 1, (2, 1))).adm_index() == 2
    assert shape_of(monomial_matrix(F, 0, (1, 2))).adm_index() == 3
    assert shape_of(monomial_matrix(F, 0, (5, 0))).adm_index() is None


def test_shape_of_gauge_rows_with_collapse():
    """Shapes of the three gauge families: the antidiagonal family sits in
    the swap coset only when its extension entry vanishes; otherwise the
    lower-left corner drags it into the translation coset."""
    F = GF(31)
    r1, r2, r3 = row_matrices(F, F(3), F(5), F(0))
    assert shape_of(r1).adm_index() == 1
    assert shape_of(r2).adm_index() == 2
    assert shape_of(r3).adm_index() == 3
    r1, r2, r3 = row_matrices(F, F(3), F(5), F(7))
    assert shape_of(r1).adm_index() == 1
    assert shape_of(r2).adm_index() == 1  # collapse
    assert shape_of(r3).adm_index() == 3


def test_shapes_of_kisin_match_labels(rng):
    for _ in range(10):
        rho = random_profile(rng, 31, 2)
        for w in x_rho(rho):
            data = kisin_matrices(rho, w)
            idx = index_of(w)
            got = shapes_of_kisin(data)
            for i in range(rho.f):
                expected = (
                    ADM_COMPONENTS[1]
                    if (idx[i] == 2 and rho.a[i])
                    else ADM_COMPONENTS[idx[i]]
                )
                assert got[i] == expected


# ---------------------------------------------------------------------------
# first-order rigidity


def test_torus_rigidity_fixture_dims(f1_nonsplit, f2_mixed, f1_irred):
    for rho in (f1_nonsplit, f2_mixed, f1_irred):
        w = x_rho(rho)[0]
        dim, expected = torus_rigidity_dims(kisin_matrices(rho, w))
        assert dim == expected == 2 * rho.f


def test_torus_rigidity_extension_field_refused():
    F = GF(3, 2)
    rho_ext = RhoBar(
        p=3, f=1, r=(1,), a=(0,), alpha=(F.gen(),), beta=(F(1),),
        mode="permissive", field=F,
    )
    data = kisin_matrices(rho_ext, from_index((1,)))
    with pytest.raises(PreconditionError):
        torus_rigidity_dims(data)
