from fractions import Fraction

import pytest

import oracles
from yangbaxter import algebras as alg
from yangbaxter import constructors as con
from yangbaxter import linalg as la
from yangbaxter import scalar as sc
from yangbaxter import verifiers as ver
from yangbaxter.errors import (
    BetaZero,
    BracketUnitNonzero,
    NonInvertibleColor,
    NonInvertibleSpectral,
    NotYangBaxter,
    QZero,
    ZNotCentral,
    ZNotEvenDegree,
    ZNotHomogeneous,
)

F = Fraction
DUAL = alg.catalog("dual_numbers")
MAT2 = alg.catalog("mat2")
GL11 = alg.catalog("gl11")
H3 = alg.catalog("heisenberg3")


def image(R, i, j, n=2):
    return R.column(i * n + j)


def t(i, j, n=2):
    return la.tensor(la.basis_vector(n, i), la.basis_vector(n, j))


def is_identity(M):
    return M == la.identity(M.rows, M.field)


def braid_zero(R):
    return ver.check_braid(R).is_zero


# ---------------------------------------------------------------------------
# associative family


def test_assoc_R_dual_numbers_111():
    R = con.build_assoc_R(DUAL, 1, 1, 1)
    assert image(R, 1, 1) == tuple(-x for x in t(1, 1))
    assert image(R, 0, 1) == t(1, 0)
    assert image(R, 1, 0) == t(0, 1)
    assert image(R, 0, 0) == t(0, 0)


def test_assoc_R_minus_identity():
    assert con.build_assoc_R(MAT2, 0, 0, 1) == -la.identity(16)


@pytest.mark.parametrize("name", alg.ASSOC_CATALOG)
def test_assoc_R_matches_direct_formula(name):
    a = alg.catalog(name)
    for p in [(1, 2, 3), (F(1, 2), -1, 4)]:
        want = oracles.assoc_R_direct(a.mul_basis, a.unit, a.dim, *map(F, p))
        assert oracles.dense(con.build_assoc_R(a, *p)) == want


def test_mat2_case_i_braid():
    assert braid_zero(con.build_assoc_R(MAT2, 1, 2, 1))


def test_classify():
    assert con.classify_assoc_params(1, 2, 1) == "i"
    assert con.classify_assoc_params(2, 1, 1) == "ii"
    assert con.classify_assoc_params(0, 0, 3) == "iii"
    assert con.classify_assoc_params(2, 3, 5) is None
    assert con.classify_assoc_params(0, 2, 0) is None


def test_invert_params():
    assert con.invert_assoc_params(1, 2, 1) == (F(1, 2), 1, 1)
    assert con.invert_assoc_params(0, 0, 3) == (0, 0, F(1, 3))
    with pytest.raises(NotYangBaxter):
        con.invert_assoc_params(2, 3, 5)


@pytest.mark.parametrize("p", [(1, 2, 1), (3, F(1, 2), F(1, 2)), (0, 0, 3)])
def test_inverse_params_compose(p):
    R = con.build_assoc_R(DUAL, *p)
    Rinv = con.build_assoc_R(DUAL, *con.invert_assoc_params(*p))
    assert is_identity(Rinv @ R) and is_identity(R @ Rinv)


def test_non_solution_braid_nonzero():
    for a in (DUAL, MAT2):
        assert not braid_zero(con.build_assoc_R(a, 2, 3, 5))


def test_baxterization_pair():
    assert con.baxterization_pair(DUAL, 1)[0] == con.baxterization_pair(DUAL, 1)[1]
    R, Rinv = con.baxterization_pair(DUAL, 2)
    assert is_identity(R @ Rinv)
    for M in con.baxterization_pair(MAT2, 3):
        assert braid_zero(M)
    with pytest.raises(QZero):
        con.baxterization_pair(DUAL, 0)


# ---------------------------------------------------------------------------
# colored and spectral families


def test_colored_equal_colors_is_scaled_twist():
    p, q, u = 1, 3, 5
    R = con.build_colored_R(DUAL, p, q, u, u)
    assert R == la.twist(2).scale(-(p - q) * u)
    assert R.scale(F(-1, (p - q) * u)) == la.twist(2)


def test_colored_p_equals_q():
    p, u, v = 2, 3, 7
    R = con.build_colored_R(MAT2, p, p, u, v)
    base = con.build_ansatz_R(MAT2, 1, 1, 1)
    assert R == base.scale(p * (u - v))


def test_colored_qybe_example():
    p, q, u, v, w = 1, 2, 3, 5, 7
    res = ver.check_colored(
        con.build_colored_R(DUAL, p, q, u, v),
        con.build_colored_R(DUAL, p, q, u, w),
        con.build_colored_R(DUAL, p, q, v, w),
    )
    assert res.is_zero


@pytest.mark.parametrize("p,q,u,v", [(1, 2, 3, 5), (0, 1, 1, 2), (F(2, 3), -1, 4, F(1, 5))])
def test_colored_inverse(p, q, u, v):
    R = con.build_colored_R(DUAL, p, q, u, v)
    assert is_identity(R @ con.colored_R_inverse(DUAL, p, q, u, v))


def test_colored_inverse_domain():
    with pytest.raises(NonInvertibleColor):
        con.colored_R_inverse(DUAL, 1, 1, 4, 4)
    with pytest.raises(NonInvertibleColor):
        con.colored_R_inverse(DUAL, 1, 2, 2, 1)


def test_spectral_examples():
    q = 3
    assert con.build_spectral_S(DUAL, q, 1) == la.twist(2).scale(-(1 - q))
    assert con.build_spectral_S(MAT2, 1, 2) == con.build_ansatz_R(MAT2, 1, 1, 1)


def test_spectral_one_param_standard_form():
    res = ver.check_one_param(lambda s: con.build_spectral_S(DUAL, 3, s), F(2), F(4), F(8))
    assert res.is_zero


def test_spectral_inverse():
    S = con.build_spectral_S(DUAL, 3, 2)
    assert is_identity(S @ con.spectral_S_inverse(DUAL, 3, 2))
    with pytest.raises(NonInvertibleSpectral):
        con.spectral_S_inverse(DUAL, 3, 3)
    with pytest.raises(NonInvertibleSpectral):
        con.spectral_S_inverse(DUAL, 3, F(1, 3))


def test_spectral_over_qq():
    q = sc.RatFunc.q()
    S = con.build_spectral_S(DUAL, q, F(2))
    assert S.field == "Qq"
    assert is_identity(S @ con.spectral_S_inverse(DUAL, q, F(2)))


# ---------------------------------------------------------------------------
# WXZ families


def test_wxz_assoc_trivial_case():
    W, X, Z = con.build_wxz_assoc(DUAL, 1, 1)
    assert W == X == Z


def test_wxz_poisson_shapes_and_precondition():
    W, X, Z = con.build_wxz_poisson(alg.catalog("mat2_poisson"))
    assert W.shape == X.shape == Z.shape == (16, 16)
    commutative = alg.PoissonAlgebra(DUAL, alg.LieAlgebra(2, {}))
    W, X, Z = con.build_wxz_poisson(commutative)
    assert W == X == la.identity(4)
    assert Z == con.build_ansatz_R(DUAL, 1, 1, 1)
    bad = alg.PoissonAlgebra(DUAL, alg.LieAlgebra(2, {(1, 0, 1): 1, (0, 1, 1): -1}))
    with pytest.raises(BracketUnitNonzero):
        con.build_wxz_poisson(bad)


def test_wxz_from_colored_equal_colors():
    triple = con.build_wxz_from_colored(lambda u, v: con.build_colored_R(DUAL, 1, 2, u, v), 3, 3)
    assert triple[0] == triple[1] == triple[2]


# ---------------------------------------------------------------------------
# Lie and graded families

Z_GL = (1, 1, 0, 0)
Z_H3 = (0, 0, 1)


def test_super_phi_alpha_zero_is_graded_twist():
    phi = con.build_super_phi(GL11, Z_GL, 0)
    assert phi @ phi == la.identity(16)
    # odd⊗odd picks up a sign
    assert image(phi, 2, 3, 4) == tuple(-x for x in t(3, 2, 4))
    assert image(phi, 0, 2, 4) == t(2, 0, 4)


def test_super_phi_heisenberg():
    phi = con.build_super_phi(H3, Z_H3, 5)
    assert braid_zero(phi)
    assert is_identity(phi @ con.super_phi_inverse(H3, Z_H3, 5))


def test_super_phi_gl11():
    assert braid_zero(con.build_super_phi(GL11, Z_GL, 1))


def test_super_phi_ab():
    assert con.build_super_phi_ab(GL11, Z_GL, 2, 1) == con.build_super_phi(GL11, Z_GL, 2)
    phi = con.build_super_phi_ab(GL11, Z_GL, 2, 3)
    assert braid_zero(phi)
    assert is_identity(phi @ con.super_phi_ab_inverse(GL11, Z_GL, 2, 3))
    with pytest.raises(BetaZero):
        con.build_super_phi_ab(GL11, Z_GL, 2, 0)


def test_super_preconditions():
    with pytest.raises(ZNotCentral):
        con.build_super_phi(H3, (1, 0, 0), 1)
    odd_center = alg.super_graded(2, {}, [0, 1])
    with pytest.raises(ZNotEvenDegree):
        con.build_super_phi(odd_center, (0, 1), 1)


def test_colored_super_alpha_zero():
    R = con.build_colored_super_R(GL11, Z_GL, 0, 3)
    signs = [(-1) ** (alg.parity(GL11, i) * alg.parity(GL11, j)) for i in range(4) for j in range(4)]
    assert R == la.diag([3 * s for s in signs])
    R = con.build_colored_super_R(H3, Z_H3, 0, 3)
    assert R == la.identity(9).scale(3)


def _colored_super(l, z, a, b, u, v, w):
    return ver.check_colored(
        con.build_colored_super_R(l, z, a(u, v), b(u, v)),
        con.build_colored_super_R(l, z, a(u, w), b(u, w)),
        con.build_colored_super_R(l, z, a(v, w), b(v, w)),
    )


def test_colored_super_valuewise():
    a, b = con.valuewise_coefficients([0, 1], [1])
    assert _colored_super(GL11, Z_GL, a, b, 2, 3, 5).is_zero
    assert ver.check_colored_super_condition(a, b, 2, 3, 5) == 0


def test_colored_super_violated():
    a, b = (lambda u, v: u), (lambda u, v: 1)
    assert ver.check_colored_super_condition(a, b, 2, 3, 5) == 1
    assert not _colored_super(GL11, Z_GL, a, b, 2, 3, 5).is_zero


def test_gtheta_trivial_grading():
    R = con.build_gtheta_R(H3, Z_H3, 2)
    # α[x,y]⊗z + x⊗y
    for i in range(3):
        for j in range(3):
            br = H3.bracket_basis(i, j)
            want = [2 * p + q for p, q in zip(la.tensor(br, Z_H3), t(i, j, 3))]
            assert list(image(R, i, j, 3)) == want


def test_gtheta_gl11():
    for alpha in (1, F(-3, 7)):
        R = con.build_gtheta_R(GL11, Z_GL, alpha)
        assert ver.check_gtheta_condition(GL11, Z_GL).ok
        assert ver.check_qybe(R).is_zero
        assert is_identity(R @ con.gtheta_R_inverse(GL11, Z_GL, alpha))


def test_gtheta_is_flipped_super_inverse():
    alpha = F(5, 2)
    R = con.build_gtheta_R(GL11, Z_GL, alpha)
    assert R == la.twist(4) @ con.super_phi_inverse(GL11, Z_GL, alpha)


def test_gtheta_rejects_inhomogeneous():
    g = alg.super_graded(2, {}, [0, 1])
    with pytest.raises(ZNotHomogeneous):
        con.build_gtheta_R(g, (1, 1), 1)


def _z4z4_algebra():
    """x ∈ L_(1,0), y ∈ L_(0,1), u = [x,y] ∈ L_(1,1), w central in degree 0.

    θ((1,0),(0,1)) = i and θ((0,1),(1,0)) = −i, θ trivial on the diagonal
    generators; the algebra is 2-step nilpotent so Jacobi is automatic.
    """
    theta = ((1, sc.I), (-sc.I, 1))
    degs = [(1, 0), (0, 1), (1, 1), (0, 0)]
    # [y,x] = −θ(|y|,|x|)[x,y] = i u
    consts = {(0, 1, 2): 1, (1, 0, 2): sc.I}
    return alg.GradedLieAlgebra(4, consts, (4, 4), degs, theta)


def test_gtheta_over_gaussian_rationals():
    g = _z4z4_algebra()
    assert g.field == "Qi"
    assert alg.check_graded_lie(g).ok
    w = (0, 0, 0, 1)
    assert ver.check_gtheta_condition(g, w).ok
    R = con.build_gtheta_R(g, w, 3)
    assert R.field == "Qi"
    assert ver.check_qybe(R).is_zero
    assert is_identity(R @ con.gtheta_R_inverse(g, w, 3))


def test_gtheta_condition_fails_for_colored_center():
    g = _z4z4_algebra()
    u = (0, 0, 1, 0)
    assert alg.is_central(g, u)
    rep = ver.check_gtheta_condition(g, u)
    assert not rep.ok
    assert not ver.check_qybe(con.build_gtheta_R(g, u, 1)).is_zero


def test_classical_r():
    ab = alg.catalog("abelian3")
    assert con.build_classical_r(ab, (1, 2, 3), 4) == la.identity(9).scale(4)
    with pytest.raises(ZNotCentral):
        con.build_classical_r(H3, (1, 0, 0), 1)
    r = con.build_classical_r(H3, (1, 0, 0), 1, check_central=False)
    assert r.shape == (9, 9)
