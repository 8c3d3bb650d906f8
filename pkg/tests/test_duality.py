from fractions import Fraction

import pytest

from yangbaxter import algebras as alg
from yangbaxter import constructors as con
from yangbaxter import duality as du
from yangbaxter import linalg as la
from yangbaxter import scalar as sc
from yangbaxter.errors import DimensionError, StructureError

F = Fraction
DUAL = alg.catalog("dual_numbers")


def zeros(n):
    return (0,) * n


def M(rows):
    return la.Matrix.from_rows(rows)


def test_operator_with_zero_unit_and_counit():
    R = con.build_assoc_R(DUAL, 1, 2, 1)
    assert du.check_yb_structure(du.YBStructure(2, R, zeros(2), zeros(2))).ok


def test_twist_example():
    assert du.check_yb_structure(du.twist_example()).ok


def test_broken_counit_fails_clause_iv():
    # for φ = τ clause iv holds with any ε, so break it on F(k[x]/(x²))
    s = du.YBStructure(2, du.functor_F_alg(DUAL).phi, (1, 0), (0, 1))
    rep = du.check_yb_structure(s)
    assert rep["iii: e"].passed
    assert not rep["iv: (I⊗ε)φ = ε⊗I"].passed


def test_non_yb_operator_fails_braid():
    rep = du.check_yb_structure(du.YBStructure(2, con.build_assoc_R(DUAL, 2, 3, 5), zeros(2), zeros(2)))
    assert not rep["ii: braid"].passed


def test_dimension_mismatch_reported():
    rep = du.check_yb_structure(du.YBStructure(3, la.twist(2), zeros(3), zeros(3)))
    assert not rep["i: dimensions"].passed


@pytest.mark.parametrize("name", alg.ASSOC_CATALOG + ("ground",))
def test_functor_F(name):
    a = alg.catalog(name)
    s = du.functor_F_alg(a)
    assert du.check_yb_structure(s).ok
    assert s.phi == con.build_assoc_R(a, 1, 1, 1)
    assert s.e == a.unit


@pytest.mark.parametrize("name", alg.ASSOC_CATALOG)
def test_functor_G(name):
    assert du.check_yb_structure(du.functor_G_coalg(alg.dualize_assoc(alg.catalog(name)))).ok


def test_functor_G_one_dimensional():
    c = alg.Coalgebra(1, {(0, 0, 0): 1}, (1,))
    s = du.functor_G_coalg(c)
    assert s.phi == la.identity(1)
    assert du.check_yb_structure(s).ok


def test_functor_F_lie_abelian_is_twist():
    s = du.functor_F_lie(alg.catalog("abelian2"))
    assert s.phi == la.twist(3)
    assert du.check_yb_structure(s).ok


@pytest.mark.parametrize("name", ["heisenberg3", "sl2", "abelian3"])
def test_functor_F_lie(name):
    l = alg.catalog(name)
    s = du.functor_F_lie(l)
    assert du.check_yb_structure(s).ok
    n = l.dim + 1
    x0 = la.basis_vector(n, n - 1)
    for i in range(n):
        x = la.basis_vector(n, i)
        assert s.phi.apply(la.tensor(x, x0)) == la.tensor(x0, x)
        assert s.phi.apply(la.tensor(x0, x)) == la.tensor(x, x0)


def test_functor_G_liecoalg_zero_cobracket():
    s = du.functor_G_liecoalg(alg.LieCoalgebra(2, {}))
    assert s.phi == la.twist(3)
    assert du.check_yb_structure(s).ok


@pytest.mark.parametrize("name", ["heisenberg3", "sl2"])
def test_functor_G_liecoalg(name):
    assert du.check_yb_structure(du.functor_G_liecoalg(alg.dualize_lie(alg.catalog(name)))).ok


def test_dual_of_dual():
    for s in (du.functor_F_alg(alg.catalog("mat2")), du.twist_example()):
        assert du.structures_equal(du.dualize_yb(du.dualize_yb(s)), s)


def test_dual_of_zero_structure():
    R = con.build_assoc_R(DUAL, 0, 0, 2)
    d = du.dualize_yb(du.YBStructure(2, R, zeros(2), zeros(2)))
    assert d.phi == R.T and d.e == zeros(2) and d.eps == zeros(2)


def test_dual_structures_pass():
    assert du.check_yb_structure(du.dualize_yb(du.functor_F_alg(DUAL))).ok
    assert du.check_yb_structure(du.dualize_yb(du.functor_F_lie(alg.catalog("sl2")))).ok


@pytest.mark.parametrize("name", alg.ASSOC_CATALOG + ("ground",))
def test_duality_identities(name):
    rep = du.check_duality_identities(alg.catalog(name))
    assert rep.ok, str(rep)
    assert len(rep.checks) == 6


def test_duality_identities_lie():
    for name in ("heisenberg3", "sl2"):
        l = alg.catalog(name)
        got = du.dualize_yb(du.functor_F_lie(l))
        want = du.functor_G_liecoalg(alg.dualize_lie(l))
        assert du.structures_equal(got, want)


def test_identity_morphism():
    s = du.functor_F_alg(DUAL)
    assert du.check_yb_morphism(s, s, la.identity(2)).ok


def test_algebra_maps_are_morphisms():
    # x ↦ c·x is an automorphism of k[x]/(x²) for c ≠ 0
    s = du.functor_F_alg(DUAL)
    f, g = M([[1, 0], [0, 3]]), M([[1, 0], [0, F(-1, 2)]])
    assert f != g
    assert du.check_yb_morphism(s, s, f).ok
    assert du.check_yb_morphism(s, s, g).ok


def test_non_multiplicative_map_fails():
    s = du.functor_F_alg(DUAL)
    rep = du.check_yb_morphism(s, s, M([[1, 1], [0, 1]]))
    assert not rep["v: (f⊗f)φ = φ'(f⊗f)"].passed


def test_lie_map_morphisms():
    h3, ab1, ab2 = (du.functor_F_lie(alg.catalog(x)) for x in ("heisenberg3", "abelian1", "abelian2"))
    # abelianization h3 → k², (x, y, z) ↦ (x, y, 0)
    quot = du.extend_lie_map(M([[1, 0, 0], [0, 1, 0]]))
    assert du.check_yb_morphism(h3, ab2, quot).ok
    # inclusion of the center k → h3
    incl = du.extend_lie_map(M([[0], [0], [1]]))
    assert du.check_yb_morphism(ab1, h3, incl).ok


def test_non_lie_map_fails():
    # x, y ↦ 0, z ↦ z is not a Lie map since [x,y] = z would have to go to 0
    h3, ab1 = du.functor_F_lie(alg.catalog("heisenberg3")), du.functor_F_lie(alg.catalog("abelian1"))
    rep = du.check_yb_morphism(h3, ab1, du.extend_lie_map(M([[0, 0, 1]])))
    assert not rep["v: (f⊗f)φ = φ'(f⊗f)"].passed
    assert rep["vi: f(e) = e'"].passed and rep["vii: ε'f = ε"].passed


def test_morphism_shape_checked():
    s = du.functor_F_alg(DUAL)
    with pytest.raises(DimensionError):
        du.check_yb_morphism(s, s, la.identity(3))


def test_yb_structure_over_qi():
    s = du.YBStructure(2, la.twist(2, "Qi"), (1, 0), (0, 1))
    assert s.e[0] == sc.Gaussian(1)
    assert du.check_yb_structure(s).ok


def test_json_roundtrip():
    s = du.functor_F_lie(alg.catalog("sl2"))
    assert du.structures_equal(du.structure_from_json(du.structure_to_json(s)), s)
    with pytest.raises(StructureError):
        du.structure_from_json({"dim": 2})
    with pytest.raises(StructureError):
        du.structure_from_json({"dim": 2, "phi": {"rows": 1}, "e": [], "eps": []})
