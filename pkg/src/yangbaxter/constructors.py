"""Yang-Baxter operator families built from algebra data.

All builders return exact :class:`~yangbaxter.linalg.Matrix` operators on
V⊗V under the flat tensor convention of :mod:`yangbaxter.linalg`.  Where a
closed-form inverse is known it is provided by a separate ``*_inverse``
function so it can be checked against the forward operator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, NamedTuple

from . import algebras as alg
from . import linalg as la
from . import scalar as sc
from .errors import (
    BetaZero,
    BracketUnitNonzero,
    NonInvertibleColor,
    NonInvertibleSpectral,
    NotYangBaxter,
    QZero,
    StructureError,
    ZNotCentral,
    ZNotEvenDegree,
    ZNotHomogeneous,
)


class ParamsAssoc(NamedTuple):
    alpha: object
    beta: object
    gamma: object


def _field(*xs, base="Q"):
    return sc.join_fields(base, *(sc.field_of(x) for x in xs))


def _lin(field, size, terms):
    """Σ coef·vec over (coef, vec) pairs."""
    out = [sc.zero(field)] * size
    for coef, vec in terms:
        if not coef:
            continue
        for k, x in enumerate(vec):
            if x:
                out[k] = out[k] + coef * x
    return out


def _exact(*xs):
    """Plain ints become Fractions so that / never falls back to float."""
    return tuple(Fraction(x) if isinstance(x, int) else x for x in xs)


def _vec(v, field):
    return tuple(sc.coerce(x, field) for x in v)


# ---------------------------------------------------------------------------
# associative algebra families


def _ansatz(a: alg.AssocAlgebra, c_one_ab, c_ab_one, c_swap, *, reverse=False, keep_order=False):
    """a⊗b ↦ c_one_ab·1⊗m + c_ab_one·m⊗1 − c_swap·(b⊗a or a⊗b).

    ``m`` is ab, or ba when ``reverse`` is set.
    """
    if a.unit is None:
        raise StructureError("operator needs a unital algebra")
    f = _field(c_one_ab, c_ab_one, c_swap, base=a.field)
    c1, c2, c3 = (sc.coerce(x, f) for x in (c_one_ab, c_ab_one, c_swap))
    n = a.dim
    unit = _vec(a.unit, f)
    basis = [la.basis_vector(n, i, f) for i in range(n)]

    def image(col):
        i, j = divmod(col, n)
        m = _vec(a.mul_basis(j, i) if reverse else a.mul_basis(i, j), f)
        last = la.tensor(basis[i], basis[j]) if keep_order else la.tensor(basis[j], basis[i])
        return _lin(f, n * n, [(c1, la.tensor(unit, m)), (c2, la.tensor(m, unit)), (-c3, last)])

    return la.from_images(n * n, image, f)


def build_assoc_R(a: alg.AssocAlgebra, alpha, beta, gamma) -> la.Matrix:
    """R(a⊗b) = α ab⊗1 + β 1⊗ab − γ a⊗b."""
    return _ansatz(a, beta, alpha, gamma, keep_order=True)


def classify_assoc_params(alpha, beta, gamma):
    """Which clause ("i", "ii", "iii") of the classification holds, else None.

    When α = β = γ ≠ 0 both (i) and (ii) hold; "i" is reported.
    """
    if alpha == gamma and gamma != 0 and beta != 0:
        return "i"
    if beta == gamma and gamma != 0 and alpha != 0:
        return "ii"
    if alpha == 0 and beta == 0 and gamma != 0:
        return "iii"
    return None


def invert_assoc_params(alpha, beta, gamma) -> ParamsAssoc:
    case = classify_assoc_params(alpha, beta, gamma)
    if case is None:
        raise NotYangBaxter(f"({alpha}, {beta}, {gamma}) matches no YB clause")
    if case == "iii":
        return ParamsAssoc(Fraction(0), Fraction(0), 1 / sc.coerce(gamma, sc.field_of(gamma)))
    one = sc.one(_field(alpha, beta, gamma))
    return ParamsAssoc(one / beta, one / alpha, one / gamma)


def baxterization_pair(a: alg.AssocAlgebra, q):
    """(R_{q,1/q,1/q}, R_{q,1/q,q}), a mutually inverse pair."""
    if q == 0:
        raise QZero("q must be nonzero")
    inv = sc.one(sc.field_of(q)) / q
    return build_assoc_R(a, q, inv, inv), build_assoc_R(a, q, inv, q)


def build_ansatz_R(a: alg.AssocAlgebra, alpha, beta, gamma) -> la.Matrix:
    """Colored ansatz at one color pair: α 1⊗ab + β ab⊗1 − γ b⊗a."""
    return _ansatz(a, alpha, beta, gamma)


def affine_coefficients(p, q):
    """(α, β, γ) = (p(u−v), q(u−v), pu−qv) as functions of the color pair."""
    return (
        lambda u, v: p * (u - v),
        lambda u, v: q * (u - v),
        lambda u, v: p * u - q * v,
    )


def build_colored_R(a: alg.AssocAlgebra, p, q, u, v) -> la.Matrix:
    """R(u,v)(a⊗b) = p(u−v) 1⊗ab + q(u−v) ab⊗1 − (pu−qv) b⊗a."""
    return _ansatz(a, p * (u - v), q * (u - v), p * u - q * v)


def colored_R_inverse(a: alg.AssocAlgebra, p, q, u, v) -> la.Matrix:
    p, q, u, v = _exact(p, q, u, v)
    if p * u == q * v or q * u == p * v:
        raise NonInvertibleColor(f"need pu != qv and qu != pv (p={p}, q={q}, u={u}, v={v})")
    den = (q * u - p * v) * (p * u - q * v)
    one = sc.one(_field(p, q, u, v))
    return _ansatz(
        a, q * (u - v) / den, p * (u - v) / den, one / (p * u - q * v), reverse=True
    )


def build_spectral_S(a: alg.AssocAlgebra, q, s) -> la.Matrix:
    """S(λ) with s = e^λ: (s−1) 1⊗ab + q(s−1) ab⊗1 − (s−q) b⊗a."""
    return _ansatz(a, s - 1, q * (s - 1), s - q)


def spectral_S_inverse(a: alg.AssocAlgebra, q, s) -> la.Matrix:
    q, s = _exact(q, s)
    if s == q or s * q == 1:
        raise NonInvertibleSpectral(f"s = e^lambda must avoid q and 1/q (s={s}, q={q})")
    den = (q * s - 1) * (s - q)
    one = sc.one(_field(q, s))
    return _ansatz(a, q * (s - 1) / den, (s - 1) / den, one / (s - q), reverse=True)


def build_wxz_assoc(a: alg.AssocAlgebra, lam, mu):
    """W = ab⊗1 + λ1⊗ab − b⊗a,  X = ab⊗1 + 1⊗ab − b⊗a,  Z = μab⊗1 + 1⊗ab − b⊗a."""
    f = _field(lam, mu)
    one = sc.one(f)
    W = _ansatz(a, lam, one, one)
    X = _ansatz(a, one, one, one)
    Z = _ansatz(a, one, mu, one)
    return W, X, Z


def build_wxz_from_colored(builder: Callable, s, t):
    """(R(s,s), R(s,t), R(t,t)) for any colored solution ``builder(u, v)``."""
    return builder(s, s), builder(s, t), builder(t, t)


# ---------------------------------------------------------------------------
# Lie / graded Lie families


def _require_central(g, z):
    if not alg.is_central(g, z):
        raise ZNotCentral("z is not in the center")


def _z_even(g: alg.GradedLieAlgebra, z):
    if any(x and g.degrees[i] != g.zero_degree for i, x in enumerate(z)):
        raise ZNotEvenDegree("z must be homogeneous of degree 0")


def _lie_operator(g, z, bracket_coef, swap_coef, *, z_first=False, bracket_reversed=False, swap=True):
    """x⊗y ↦ bracket_coef·([x,y]⊗z) + swap_coef(i,j)·(y⊗x or x⊗y)."""
    n = g.dim
    f = _field(bracket_coef, *([swap_coef(0, 0)] if n else []), base=g.field)
    zc = _vec(z, f)
    bc = sc.coerce(bracket_coef, f)
    basis = [la.basis_vector(n, i, f) for i in range(n)]

    def image(col):
        i, j = divmod(col, n)
        br = _vec(g.bracket_basis(j, i) if bracket_reversed else g.bracket_basis(i, j), f)
        first = la.tensor(zc, br) if z_first else la.tensor(br, zc)
        last = la.tensor(basis[j], basis[i]) if swap else la.tensor(basis[i], basis[j])
        return _lin(f, n * n, [(bc, first), (sc.coerce(swap_coef(i, j), f), last)])

    return la.from_images(n * n, image, f)


def _super(l):
    g = alg.as_graded(l)
    if not alg.is_super(g):
        raise StructureError("expected a Lie superalgebra (Z2, theta=(-1)^ab) or a Lie algebra")
    return g


def build_super_phi(l, z, alpha) -> la.Matrix:
    """x⊗y ↦ α[x,y]⊗z + (−1)^{|x||y|} y⊗x, z central of degree 0."""
    return build_super_phi_ab(l, z, alpha, 1)


def super_phi_inverse(l, z, alpha) -> la.Matrix:
    """x⊗y ↦ α z⊗[x,y] + (−1)^{|x||y|} y⊗x."""
    return super_phi_ab_inverse(l, z, alpha, 1)


def build_super_phi_ab(l, z, alpha, beta) -> la.Matrix:
    """x⊗y ↦ α[x,y]⊗z + (−1)^{|x||y|} β y⊗x."""
    if beta == 0:
        raise BetaZero("beta must be nonzero")
    g = _super(l)
    _require_central(g, z)
    _z_even(g, z)
    return _lie_operator(g, z, alpha, lambda i, j: beta * g.sign(i, j))


def super_phi_ab_inverse(l, z, alpha, beta) -> la.Matrix:
    """x⊗y ↦ (α/β²) z⊗[x,y] + (−1)^{|x||y|} (1/β) y⊗x."""
    if beta == 0:
        raise BetaZero("beta must be nonzero")
    g = _super(l)
    _require_central(g, z)
    _z_even(g, z)
    f = _field(alpha, beta, base=g.field)
    b = sc.coerce(beta, f)
    return _lie_operator(g, z, alpha / (b * b), lambda i, j: g.sign(i, j) / b, z_first=True)


def build_colored_super_R(l, z, aval, bval) -> la.Matrix:
    """R(u,v)(a⊗b) = α(u,v)[a,b]⊗z + β(u,v)(−1)^{|a||b|} a⊗b at one color pair.

    ``aval`` and ``bval`` are the already evaluated scalars α(u,v), β(u,v).
    """
    g = _super(l)
    _require_central(g, z)
    _z_even(g, z)
    return _lie_operator(g, z, aval, lambda i, j: bval * g.sign(i, j), swap=False)


def valuewise_coefficients(f_coeffs, g_coeffs):
    """α(u,v) = f(v), β(u,v) = g(v) for polynomials given lowest degree first."""

    def poly(cs):
        cs = [Fraction(c) if isinstance(c, (str, int)) else c for c in cs]

        def ev(x):
            acc = sc.zero(sc.field_of(x))
            for c in reversed(cs):
                acc = acc * x + c
            return acc

        return ev

    f, g = poly(f_coeffs), poly(g_coeffs)
    return (lambda u, v: f(v)), (lambda u, v: g(v))


def _homogeneous_degree(g: alg.GradedLieAlgebra, z):
    try:
        deg = g.degree_of(z)
    except StructureError as exc:
        raise ZNotHomogeneous(str(exc)) from exc
    return g.zero_degree if deg is None else deg


def build_gtheta_R(l, z, alpha) -> la.Matrix:
    """R(x⊗y) = α[x,y]⊗z + θ(a,b) x⊗y for homogeneous x ∈ L_a, y ∈ L_b."""
    g = alg.as_graded(l)
    _homogeneous_degree(g, z)
    _require_central(g, z)
    return _lie_operator(g, z, alpha, g.sign, swap=False)


def gtheta_R_inverse(l, z, alpha) -> la.Matrix:
    """R⁻¹(x⊗y) = α[y,x]⊗z + θ(b,a) x⊗y (valid when the θ-condition holds)."""
    g = alg.as_graded(l)
    _homogeneous_degree(g, z)
    _require_central(g, z)
    return _lie_operator(
        g, z, alpha, lambda i, j: g.sign(j, i), bracket_reversed=True, swap=False
    )


def build_classical_r(l: alg.LieAlgebra, z, alpha, *, check_central: bool = True) -> la.Matrix:
    """r(x⊗y) = [x,y]⊗z + α x⊗y.

    ``check_central=False`` skips the precondition so non-central z can be
    probed for a nonzero residual.
    """
    g = alg.as_graded(l)
    if check_central:
        _require_central(g, z)
    return _lie_operator(g, z, 1, lambda i, j: alpha, swap=False)


def build_wxz_poisson(p: alg.PoissonAlgebra):
    """W = {x,y}⊗1 + x⊗y,  X = 1⊗{x,y} + x⊗y,  Z = 1⊗x*y + x*y⊗1 − y⊗x."""
    a, br = p.product, p.bracket
    if a.unit is None:
        raise StructureError("the Poisson product must have a unit")
    if any(any(br.bracket(br.basis(i), a.unit)) for i in range(p.dim)):
        raise BracketUnitNonzero("{x, 1} must vanish for all x")
    f = p.field
    n = p.dim
    unit = _vec(a.unit, f)
    basis = [la.basis_vector(n, i, f) for i in range(n)]
    one = sc.one(f)

    def w_image(col):
        i, j = divmod(col, n)
        return _lin(f, n * n, [(one, la.tensor(br.bracket_basis(i, j), unit)),
                               (one, la.tensor(basis[i], basis[j]))])

    def x_image(col):
        i, j = divmod(col, n)
        return _lin(f, n * n, [(one, la.tensor(unit, br.bracket_basis(i, j))),
                               (one, la.tensor(basis[i], basis[j]))])

    W = la.from_images(n * n, w_image, f)
    X = la.from_images(n * n, x_image, f)
    Z = _ansatz(a, one, one, one)
    return W, X, Z
