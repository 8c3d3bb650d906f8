import random
from fractions import Fraction

import pytest

import oracles
from yangbaxter import algebras as alg
from yangbaxter import constructors as con
from yangbaxter import frt
from yangbaxter import linalg as la
from yangbaxter import verifiers as ver

F = Fraction
DUAL = alg.catalog("dual_numbers")
MAT2 = alg.catalog("mat2")
GL11 = alg.catalog("gl11")
H3 = alg.catalog("heisenberg3")
SL2 = alg.catalog("sl2")


def test_braid_examples():
    for R in (la.twist(2), la.identity(4)):
        res = ver.check_braid(R)
        assert res.is_zero and res.invertible


def test_braid_nonzero_with_witness():
    R = con.build_assoc_R(MAT2, 2, 3, 5)
    res = ver.check_braid(R)
    assert not res.is_zero
    r, c, v = res.witness
    assert v != 0 and res.matrix[r, c] == v
    assert oracles.dense(res.matrix) == oracles.braid_residual(oracles.dense(R), 4)


def test_residual_describe_decodes_triples():
    res = ver.check_braid(con.build_assoc_R(DUAL, 2, 3, 5))
    r, c, _ = res.witness
    assert ver.decode(r, 2) == (r // 4, (r // 2) % 2, r % 2)
    assert "row (" in res.describe(2)
    d = res.as_dict(2)
    assert d["is_zero"] is False and len(d["witness"]["row_tensor"]) == 3


def test_qybe_examples():
    assert ver.check_qybe(la.identity(4)).is_zero
    assert ver.check_qybe(la.twist(2)).is_zero
    assert ver.check_qybe(frt.paper_matrix(2, 0)).is_zero


def test_qybe_matches_oracle():
    R = frt.paper_matrix(3, 1)
    assert oracles.dense(ver.check_qybe(R).matrix) == oracles.yb_commutator(*[oracles.dense(R)] * 3, 2)
    assert ver.check_qybe(R).is_zero


def test_transfer_examples():
    assert ver.check_transfer(la.twist(2)) == (True, True, True)
    assert ver.check_transfer(con.build_assoc_R(DUAL, 1, 1, 1)) == (True, True, True)
    rnd = la.Matrix.from_rows([[1, 2, 0, 3], [0, 1, 5, 0], [7, 0, 1, 0], [0, 0, 2, 1]])
    assert ver.check_transfer(rnd) == (False, False, False)


def _reference_transfer(R):
    tau = la.twist(R.tensor_dim, R.field)
    return (
        ver.braid_residual(R).is_zero(),
        la.yb_commutator(R @ tau, R @ tau, R @ tau).is_zero(),
        la.yb_commutator(tau @ R, tau @ R, tau @ R).is_zero(),
    )


@pytest.mark.parametrize(
    "R",
    [
        con.build_assoc_R(DUAL, F(2, 3), F(-1, 7), F(2, 3)),
        con.build_assoc_R(MAT2, 2, 3, 5),
        con.build_colored_R(DUAL, 1, 2, F(3, 4), 5),
        con.build_super_phi(GL11, (1, 1, 0, 0), F(5, 9)),
        frt.paper_matrix(F(-2, 3), 1),
    ],
)
def test_integer_transfer_agrees_with_reference(R):
    assert tuple(ver.check_transfer(R)) == _reference_transfer(R)


def test_colored_mismatched_colors():
    b = lambda u, v: con.build_colored_R(DUAL, 1, 2, u, v)
    assert ver.check_colored(b(2, 3), b(2, 5), b(3, 5)).is_zero
    assert not ver.check_colored(b(2, 3), b(3, 5), b(3, 5)).is_zero
    t = la.twist(2)
    assert ver.check_colored(t, t, t).is_zero


def test_one_param_forms():
    build = lambda s: con.build_spectral_S(DUAL, 3, s)
    same = ver.check_one_param(build, F(2), F(2), F(2))
    assert same.is_zero
    assert ver.check_one_param(build, F(2), F(4), F(8)).is_zero
    literal = ver.check_one_param(build, F(2), F(4), F(8), form="literal")
    # the printed right-hand side repeats s1/s2 in the middle factor; it is not an identity
    assert not literal.is_zero
    with pytest.raises(ValueError):
        ver.check_one_param(build, F(2), F(4), F(8), form="other")


def test_e_system_affine():
    a, b, g = con.affine_coefficients(1, 2)
    assert ver.check_e_system(a, b, g, 3, 5, 7) == (0, 0, 0, 0, 0)


def test_e_system_trivial_and_constant():
    zero = lambda u, v: 0
    assert ver.check_e_system(zero, zero, zero, 1, 2, 3) == (0, 0, 0, 0, 0)
    one = lambda u, v: 1
    assert ver.check_e_system(one, one, zero, 2, 3, 5) == (0, 1, 1, 1, 1)


def test_e_system_consistent_with_operator():
    rng = random.Random(11)
    for _ in range(6):
        p, q, u, v, w = (F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5))
        a, b, g = con.affine_coefficients(p, q)
        assert ver.check_e_system(a, b, g, u, v, w) == (0,) * 5
        mk = lambda x, y: con.build_ansatz_R(DUAL, a(x, y), b(x, y), g(x, y))
        assert ver.check_colored(mk(u, v), mk(u, w), mk(v, w)).is_zero


def test_e_system_nonsolution_matches_operator():
    one, zero = (lambda u, v: 1), (lambda u, v: 0)
    assert any(ver.check_e_system(one, one, zero, 2, 3, 5))
    R = con.build_ansatz_R(DUAL, 1, 1, 0)
    assert not ver.check_colored(R, R, R).is_zero


def test_wxz_examples():
    t = la.twist(2)
    assert all(r.is_zero for r in ver.check_wxz(t, t, t))
    assert all(r.is_zero for r in ver.check_wxz(*con.build_wxz_assoc(DUAL, 2, 3)))
    assert all(r.is_zero for r in ver.check_wxz(*con.build_wxz_assoc(MAT2, 0, 5)))
    assert all(r.is_zero for r in ver.check_wxz(*con.build_wxz_poisson(alg.catalog("mat2_poisson"))))


def test_wxz_colored_families():
    b = lambda u, v: con.build_colored_R(DUAL, 1, 2, u, v)
    assert all(r.is_zero for r in ver.check_wxz(*con.build_wxz_from_colored(b, 3, 5)))
    f, g = con.valuewise_coefficients([0, 1], [1])
    z = (1, 1, 0, 0)
    s = lambda u, v: con.build_colored_super_R(GL11, z, f(u, v), g(u, v))
    assert all(r.is_zero for r in ver.check_wxz(*con.build_wxz_from_colored(s, 2, 3)))


def test_wxz_degenerates_to_qybe():
    for R in (frt.paper_matrix(2, 1), con.build_assoc_R(DUAL, 2, 3, 5)):
        res = ver.check_wxz(R, R, R)
        assert all(r.is_zero for r in res) == ver.check_qybe(R).is_zero


def test_classical_examples():
    assert ver.check_classical(la.identity(9).scale(7)).is_zero
    for alpha in (2, F(-1, 3)):
        assert ver.check_classical(con.build_classical_r(H3, (0, 0, 1), alpha)).is_zero


def test_classical_matches_oracle():
    r = con.build_classical_r(SL2, (1, 0, 0), 2, check_central=False)
    assert oracles.dense(ver.check_classical(r).matrix) == oracles.classical_residual(oracles.dense(r), 3)


def test_classical_non_central():
    r = con.build_classical_r(SL2, (1, 0, 0), 2, check_central=False)
    assert not ver.check_classical(r).is_zero


def test_classical_heisenberg_non_central_vanishes():
    # h3 is 2-step nilpotent, so every bracket is central and the residual
    # vanishes for any z; the oracle confirms the package result.
    r = con.build_classical_r(H3, (1, 0, 0), 2, check_central=False)
    assert ver.check_classical(r).is_zero
    assert oracles.is_zero(oracles.classical_residual(oracles.dense(r), 3))


def test_gtheta_condition_examples():
    assert ver.check_gtheta_condition(H3, (0, 0, 1)).ok
    assert ver.check_gtheta_condition(GL11, (1, 1, 0, 0)).ok
    odd = alg.super_graded(2, {}, [0, 1])
    rep = ver.check_gtheta_condition(odd, (0, 1))
    assert not rep.ok
    assert not rep["theta(g,g)=1"].passed


def test_colored_super_condition():
    a, b = con.valuewise_coefficients([1, 2, 3], [F(1, 2), 0, 1])
    assert ver.check_colored_super_condition(a, b, 2, 3, 5) == 0
    assert ver.check_colored_super_condition(lambda u, v: u, lambda u, v: 1, 2, 3, 5) == 1
    assert ver.check_colored_super_condition(lambda u, v: 0, lambda u, v: u + v, 2, 3, 5) == 0


def test_counterexample_search():
    ce = ver.find_gtheta_counterexample()
    assert ce is not None
    assert alg.check_graded_lie(ce.algebra).ok
    assert alg.is_central(ce.algebra, ce.z)
    assert not ce.condition.ok
    assert not ce.residual.is_zero
    assert ce.algebra.dim == 3


def _random_invertible(rng, n):
    while True:
        Q = la.Matrix.from_rows([[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)])
        if la.is_invertible(Q):
            return Q


@pytest.mark.parametrize(
    "R",
    [
        con.build_assoc_R(DUAL, 1, 2, 1),
        con.build_assoc_R(DUAL, 2, 3, 5),
        frt.paper_matrix(3, 1),
        con.build_super_phi(H3, (0, 0, 1), 2),
    ],
)
def test_conjugation_stability(R):
    rng = random.Random(5)
    Q = _random_invertible(rng, R.tensor_dim)
    C = la.conjugate(R, Q)
    assert ver.check_braid(C).is_zero == ver.check_braid(R).is_zero
    assert ver.check_qybe(C).is_zero == ver.check_qybe(R).is_zero
    assert all(a.is_zero == b.is_zero for a, b in zip(ver.check_wxz(C, C, C), ver.check_wxz(R, R, R)))
