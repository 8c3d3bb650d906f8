"""YB structures (V, φ, e, ε), the functors into them, and the duality D.

Dual spaces use dual bases, and V*⊗V* is identified with (V⊗V)* through
(f⊗g)(v⊗w) = f(v)g(w).  With that pairing the dual operator is just the
transpose of φ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import algebras as alg
from . import linalg as la
from . import scalar as sc
from .errors import DimensionError, StructureError
from .report import Report
from .verifiers import braid_residual


@dataclass(frozen=True)
class YBStructure:
    dim: int
    phi: la.Matrix
    e: tuple
    eps: tuple

    @property
    def field(self):
        return self.phi.field

    def __post_init__(self):
        f = self.phi.field
        object.__setattr__(self, "e", tuple(sc.coerce(x, f) for x in self.e))
        object.__setattr__(self, "eps", tuple(sc.coerce(x, f) for x in self.eps))


def _covector_matrix(eps, field):
    return la.Matrix.from_rows([list(eps)], field)


def _contract_right(n, eps, field):
    """I⊗ε : V⊗V → V."""
    z = sc.zero(field)
    rows = [[eps[j] if i == r else z for i in range(n) for j in range(n)] for r in range(n)]
    return la.Matrix.from_rows(rows, field)


def _contract_left(n, eps, field):
    """ε⊗I : V⊗V → V."""
    z = sc.zero(field)
    rows = [[eps[i] if j == r else z for i in range(n) for j in range(n)] for r in range(n)]
    return la.Matrix.from_rows(rows, field)


def check_yb_structure(s: YBStructure) -> Report:
    rep = Report("YB structure")
    n = s.dim
    shapes = s.phi.shape == (n * n, n * n) and len(s.e) == n and len(s.eps) == n
    rep.add("i: dimensions", shapes, None, f"phi {s.phi.shape}, e {len(s.e)}, eps {len(s.eps)}")
    if not shapes:
        return rep

    f = s.field
    inv = la.is_invertible(s.phi)
    res = braid_residual(s.phi)
    rep.add("ii: invertible", inv)
    rep.add("ii: braid", res.is_zero(), res.first_nonzero())

    bad = None
    for i in range(n):
        x = la.basis_vector(n, i, f)
        if s.phi.apply(la.tensor(x, s.e)) != la.tensor(s.e, x):
            bad = ("phi(x⊗e)", i)
            break
        if s.phi.apply(la.tensor(s.e, x)) != la.tensor(x, s.e):
            bad = ("phi(e⊗x)", i)
            break
    rep.add("iii: e", bad is None, bad)

    left, right = _contract_left(n, s.eps, f), _contract_right(n, s.eps, f)
    d1 = right @ s.phi - left
    d2 = left @ s.phi - right
    rep.add("iv: (I⊗ε)φ = ε⊗I", d1.is_zero(), d1.first_nonzero())
    rep.add("iv: (ε⊗I)φ = I⊗ε", d2.is_zero(), d2.first_nonzero())
    return rep


# ---------------------------------------------------------------------------
# functors


def functor_F_alg(a: alg.AssocAlgebra) -> YBStructure:
    """(A, φ_A, 1, 0) with φ_A(a⊗b) = ab⊗1 + 1⊗ab − a⊗b."""
    if a.unit is None:
        raise StructureError("F needs a unital algebra")
    n, f = a.dim, a.field
    one = a.unit

    def image(col):
        i, j = divmod(col, n)
        ab = a.mul_basis(i, j)
        x, y = la.basis_vector(n, i, f), la.basis_vector(n, j, f)
        return [p + q - r for p, q, r in zip(la.tensor(ab, one), la.tensor(one, ab), la.tensor(x, y))]

    return YBStructure(n, la.from_images(n * n, image, f), one, (sc.zero(f),) * n)


def functor_G_coalg(c: alg.Coalgebra) -> YBStructure:
    """(C, ψ_C, 0, ε) with ψ_C(x⊗y) = Δ(x)ε(y) + ε(x)Δ(y) − x⊗y."""
    n, f = c.dim, c.field
    eps = c.counit

    def image(col):
        i, j = divmod(col, n)
        di, dj = c.delta(i), c.delta(j)
        xy = la.tensor(la.basis_vector(n, i, f), la.basis_vector(n, j, f))
        return [p * eps[j] + eps[i] * q - r for p, q, r in zip(di, dj, xy)]

    return YBStructure(n, la.from_images(n * n, image, f), (sc.zero(f),) * n, eps)


def functor_F_lie(l: alg.LieAlgebra) -> YBStructure:
    """(L⊕kx₀, φ, x₀, 0) with φ(x⊗y) = [x,y]⊗x₀ + y⊗x; x₀ is the last basis vector."""
    n, f = l.dim + 1, l.field
    x0 = la.basis_vector(n, n - 1, f)

    def image(col):
        i, j = divmod(col, n)
        if i < n - 1 and j < n - 1:
            br = tuple(l.bracket_basis(i, j)) + (sc.zero(f),)
        else:
            br = (sc.zero(f),) * n
        yx = la.tensor(la.basis_vector(n, j, f), la.basis_vector(n, i, f))
        return [p + q for p, q in zip(la.tensor(br, x0), yx)]

    return YBStructure(n, la.from_images(n * n, image, f), x0, (sc.zero(f),) * n)


def functor_G_liecoalg(m: alg.LieCoalgebra) -> YBStructure:
    """(M⊕kx₀, ψ, 0, ν) with ψ(x⊗y) = Δ(x)ν(y) + y⊗x, Δ(x₀) = 0, ν = x₀*."""
    n, f = m.dim + 1, m.field
    nu = la.basis_vector(n, n - 1, f)
    z = sc.zero(f)

    def lifted_delta(i):
        if i == n - 1:
            return (z,) * (n * n)
        out = [z] * (n * n)
        for a, b in itertools.product(range(m.dim), repeat=2):
            out[a * n + b] = m.cobracket[i][a][b]
        return out

    def image(col):
        i, j = divmod(col, n)
        yx = la.tensor(la.basis_vector(n, j, f), la.basis_vector(n, i, f))
        return [p * nu[j] + q for p, q in zip(lifted_delta(i), yx)]

    return YBStructure(n, la.from_images(n * n, image, f), (z,) * n, nu)


def dualize_yb(s: YBStructure) -> YBStructure:
    """(V*, φᵀ, ε, ζ_e): coordinates of ζ_e in V** = V are those of e."""
    return YBStructure(s.dim, s.phi.T, s.eps, s.e)


def structures_equal(s: YBStructure, t: YBStructure) -> bool:
    return s.dim == t.dim and s.phi == t.phi and s.e == t.e and s.eps == t.eps


def _compare(rep, label, s, t):
    rep.add(f"{label}: phi", s.phi == t.phi, (s.phi - t.phi).first_nonzero() if s.phi.shape == t.phi.shape else None)
    rep.add(f"{label}: e", s.e == t.e, None, f"{[str(x) for x in s.e]} vs {[str(x) for x in t.e]}")
    rep.add(f"{label}: eps", s.eps == t.eps, None, f"{[str(x) for x in s.eps]} vs {[str(x) for x in t.eps]}")


def check_duality_identities(a: alg.AssocAlgebra) -> Report:
    """D(F(A)) = G(A*) and D(G(C)) = F(C*) with C = A*, componentwise."""
    rep = Report("duality identities")
    c = alg.dualize_assoc(a)
    _compare(rep, "D(F(A)) = G(A*)", dualize_yb(functor_F_alg(a)), functor_G_coalg(c))
    _compare(rep, "D(G(C)) = F(C*)", dualize_yb(functor_G_coalg(c)), functor_F_alg(alg.dualize_coalgebra(c)))
    return rep


# ---------------------------------------------------------------------------
# morphisms


def check_yb_morphism(source: YBStructure, target: YBStructure, f: la.Matrix) -> Report:
    """Clauses v-vii for a linear map given as a target.dim × source.dim matrix."""
    if f.shape != (target.dim, source.dim):
        raise DimensionError(f"map is {f.shape}, expected {(target.dim, source.dim)}")
    field = sc.join_fields(source.field, target.field, f.field)
    phi, phi2, f = source.phi.to_field(field), target.phi.to_field(field), f.to_field(field)
    ff = la.kron(f, f)
    d = ff @ phi - phi2 @ ff
    rep = Report("YB morphism")
    rep.add("v: (f⊗f)φ = φ'(f⊗f)", d.is_zero(), d.first_nonzero())
    fe = f.apply(tuple(sc.coerce(x, field) for x in source.e))
    rep.add("vi: f(e) = e'", fe == tuple(sc.coerce(x, field) for x in target.e))
    eps2f = _covector_matrix([sc.coerce(x, field) for x in target.eps], field) @ f
    rep.add("vii: ε'f = ε", eps2f.row(0) == tuple(sc.coerce(x, field) for x in source.eps))
    return rep


def extend_lie_map(f: la.Matrix) -> la.Matrix:
    """Extend a Lie map L₁ → L₂ to L₁⊕kx₀ → L₂⊕kx₀ with x₀ ↦ x₀."""
    rows = [list(f.row(r)) + [sc.zero(f.field)] for r in range(f.rows)]
    rows.append([sc.zero(f.field)] * f.cols + [sc.one(f.field)])
    return la.Matrix.from_rows(rows, f.field)


def twist_example() -> YBStructure:
    """(k², τ, e₁, e₂*), taking the unnamed operator to be the flip."""
    return YBStructure(2, la.twist(2, "Q"), (1, 0), (0, 1))


# ---------------------------------------------------------------------------
# JSON


def structure_to_json(s: YBStructure) -> dict:
    return {
        "dim": s.dim,
        "phi": la.matrix_to_json(s.phi),
        "e": [sc.to_json(x, s.field) for x in s.e],
        "eps": [sc.to_json(x, s.field) for x in s.eps],
    }


def structure_from_json(obj: dict) -> YBStructure:
    try:
        phi = la.matrix_from_json(obj["phi"])
        f = phi.field
        return YBStructure(
            int(obj["dim"]),
            phi,
            tuple(sc.from_json(x, f) for x in obj["e"]),
            tuple(sc.from_json(x, f) for x in obj["eps"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, StructureError):
            raise
        raise StructureError(f"malformed YB structure: {exc}") from exc
