"""Finite-dimensional algebra species given by structure constants.

Every structure stores dense constant tables as nested tuples:

* product / bracket  ``c[i][j][k]`` -- coefficient of e_k in e_i·e_j
* coproduct / cobracket ``d[k][i][j]`` -- coefficient of e_i⊗e_j in Δ(e_k)

Axiom checkers return a :class:`~yangbaxter.report.Report` naming each axiom
with a witness basis tuple on failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from . import scalar as sc
from .errors import StructureError, UnknownCatalogEntry
from .report import Report


def _dense3(n, data, field_):
    """Normalize constants given as a dense nested list or a sparse {(i,j,k): v} dict."""
    z = sc.zero(field_)
    if isinstance(data, dict):
        out = [[[z] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), v in data.items():
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise StructureError(f"index {(i, j, k)} out of range for dim {n}")
            out[i][j][k] = out[i][j][k] + sc.coerce(v, field_)
    else:
        if len(data) != n or any(len(r) != n or any(len(c) != n for c in r) for r in data):
            raise StructureError(f"constant table is not {n}x{n}x{n}")
        out = [[[sc.coerce(v, field_) for v in c] for c in r] for r in data]
    return tuple(tuple(tuple(c) for c in r) for r in out)


def _constants_field(data):
    vals = data.values() if isinstance(data, dict) else (v for r in data for c in r for v in c)
    return sc.join_fields(*(sc.field_of(Fraction(v) if isinstance(v, str) else v) for v in vals))


def _bilinear(table, n, x, y, field_):
    z = sc.zero(field_)
    out = [z] * n
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(table[i][j]):
                if c:
                    out[k] = out[k] + ab * c
    return tuple(out)


def _vec(n, v, field_):
    if v is None:
        return None
    if len(v) != n:
        raise StructureError(f"vector of length {len(v)} in dimension {n}")
    return tuple(sc.coerce(x, field_) for x in v)


class _Base:
    def basis(self, i):
        return la.basis_vector(self.dim, i, self.field)

    def name_of(self, i):
        return self.names[i] if self.names else f"e{i}"


# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True, eq=True)
class AssocAlgebra(_Base):
    dim: int
    constants: tuple
    unit: tuple | None = None
    field: str = "Q"
    names: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "constants", _dense3(self.dim, self.constants, self.field))
        object.__setattr__(self, "unit", _vec(self.dim, self.unit, self.field))
        object.__setattr__(self, "names", tuple(self.names))

    def mul(self, x, y):
        return _bilinear(self.constants, self.dim, x, y, self.field)

    def mul_basis(self, i, j):
        return self.constants[i][j]

    def multiplication_matrix(self) -> la.Matrix:
        """The product A⊗A → A as an n×n² matrix."""
        n = self.dim
        return la.Matrix.from_columns(
            [self.constants[i][j] for i in range(n) for j in range(n)], self.field
        )


@dataclass(frozen=True, eq=True)
class LieAlgebra(_Base):
    dim: int
    constants: tuple
    field: str = "Q"
    names: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "constants", _dense3(self.dim, self.constants, self.field))
        object.__setattr__(self, "names", tuple(self.names))

    def bracket(self, x, y):
        return _bilinear(self.constants, self.dim, x, y, self.field)

    def bracket_basis(self, i, j):
        return self.constants[i][j]


@dataclass(frozen=True, eq=True)
class GradedLieAlgebra(_Base):
    """(G,θ)-Lie algebra with G = Z_{d1} × ... × Z_{dr}.

    ``theta_gens[s][t]`` is θ(g_s, g_t) on the group generators; θ on all of
    G is the bicharacter extension.  Values must be roots of unity in Q(i).
    """

    dim: int
    constants: tuple
    group: tuple
    degrees: tuple
    theta_gens: tuple
    field: str = "Q"
    names: tuple = ()

    def __post_init__(self):
        group = tuple(int(d) for d in self.group)
        if any(d < 1 for d in group):
            raise StructureError("cyclic orders must be positive")
        degrees = tuple(tuple(int(x) for x in deg) for deg in self.degrees)
        if len(degrees) != self.dim:
            raise StructureError("one degree per basis vector is required")
        for deg in degrees:
            if len(deg) != len(group) or any(not 0 <= x < d for x, d in zip(deg, group)):
                raise StructureError(f"degree {deg} is not an element of Z/{group}")
        theta = [[v for v in row] for row in self.theta_gens]
        if len(theta) != len(group) or any(len(r) != len(group) for r in theta):
            raise StructureError("theta table must be r x r for r cyclic factors")
        theta = [[sc.from_json(v) if isinstance(v, (str, list, dict)) else v for v in r] for r in theta]
        for r in theta:
            for v in r:
                if not sc.is_root_of_unity(v):
                    raise StructureError(f"theta value {v} is not a root of unity in Q(i)")
        fld = self.field
        if any(isinstance(v, sc.Gaussian) and v.im != 0 for r in theta for v in r):
            fld = sc.join_fields(fld, "Qi")
        # real roots of unity are stored in whatever field the constants use
        theta = tuple(
            tuple(sc.coerce(v.re if isinstance(v, sc.Gaussian) and fld != "Qi" else v, fld) for v in r)
            for r in theta
        )
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "theta_gens", theta)
        object.__setattr__(self, "constants", _dense3(self.dim, self.constants, fld))
        object.__setattr__(self, "names", tuple(self.names))

    # -- group ------------------------------------------------------------

    def elements(self):
        return list(itertools.product(*(range(d) for d in self.group)))

    def add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.group))

    @property
    def zero_degree(self):
        return tuple(0 for _ in self.group)

    def theta(self, a, b):
        """Bicharacter extension  θ(a,b) = Π θ(g_s,g_t)^(a_s b_t)."""
        out = sc.one(self.field)
        for s, x in enumerate(a):
            for t, y in enumerate(b):
                if x and y:
                    out = out * self.theta_gens[s][t] ** (x * y)
        return out

    def occupied_degrees(self):
        return sorted(set(self.degrees))

    def degree_of(self, v):
        """Degree of a homogeneous vector, None for 0, raises if inhomogeneous."""
        degs = {self.degrees[i] for i, x in enumerate(v) if x}
        if not degs:
            return None
        if len(degs) > 1:
            raise StructureError("vector is not homogeneous")
        return degs.pop()

    def bracket(self, x, y):
        return _bilinear(self.constants, self.dim, x, y, self.field)

    def bracket_basis(self, i, j):
        return self.constants[i][j]

    def sign(self, i, j):
        """θ(|e_i|, |e_j|)."""
        return self.theta(self.degrees[i], self.degrees[j])


@dataclass(frozen=True, eq=True)
class Coalgebra(_Base):
    dim: int
    comult: tuple
    counit: tuple
    field: str = "Q"
    names: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "comult", _dense3(self.dim, self.comult, self.field))
        object.__setattr__(self, "counit", _vec(self.dim, self.counit, self.field))
        object.__setattr__(self, "names", tuple(self.names))

    def delta(self, k):
        """Δ(e_k) as a flat vector of length n²."""
        return tuple(x for row in self.comult[k] for x in row)

    def comultiplication_matrix(self) -> la.Matrix:
        return la.Matrix.from_columns([self.delta(k) for k in range(self.dim)], self.field)


@dataclass(frozen=True, eq=True)
class LieCoalgebra(_Base):
    dim: int
    cobracket: tuple
    field: str = "Q"
    names: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cobracket", _dense3(self.dim, self.cobracket, self.field))
        object.__setattr__(self, "names", tuple(self.names))

    def delta(self, k):
        return tuple(x for row in self.cobracket[k] for x in row)


@dataclass(frozen=True, eq=True)
class PoissonAlgebra:
    product: AssocAlgebra
    bracket: LieAlgebra

    def __post_init__(self):
        if self.product.dim != self.bracket.dim:
            raise StructureError("product and bracket live on different spaces")

    @property
    def dim(self):
        return self.product.dim

    @property
    def field(self):
        return self.product.field


# ---------------------------------------------------------------------------
# graded helpers


def trivially_graded(lie: LieAlgebra) -> GradedLieAlgebra:
    """Trivial grading (G = 0, θ ≡ 1); restricts super results to Lie algebras."""
    return GradedLieAlgebra(
        lie.dim, lie.constants, (), tuple(() for _ in range(lie.dim)), (), lie.field, lie.names
    )


def super_graded(dim, constants, parities, field="Q", names=()) -> GradedLieAlgebra:
    """Lie superalgebra: G = Z₂, θ(a,b) = (−1)^{ab}."""
    return GradedLieAlgebra(
        dim, constants, (2,), tuple((p,) for p in parities), ((-1,),), field, names
    )


def as_graded(l) -> GradedLieAlgebra:
    return l if isinstance(l, GradedLieAlgebra) else trivially_graded(l)


def is_super(g: GradedLieAlgebra) -> bool:
    """True when g is Z₂-graded with θ = (−1)^{ab}, or trivially graded."""
    if g.group == ():
        return True
    return g.group == (2,) and g.theta_gens[0][0] == -1


def parity(g: GradedLieAlgebra, i: int) -> int:
    return g.degrees[i][0] if g.group else 0


# ---------------------------------------------------------------------------
# axiom checks


def check_assoc(a: AssocAlgebra, require_unit: bool = True) -> Report:
    n, c = a.dim, a.constants
    rep = Report("associative algebra")
    witness = None
    for i, j, k in itertools.product(range(n), repeat=3):
        left = a.mul(c[i][j], a.basis(k))
        right = a.mul(a.basis(i), c[j][k])
        if left != right:
            witness = (i, j, k)
            break
    rep.add("associativity", witness is None, witness)
    if not require_unit:
        return rep
    if a.unit is None:
        rep.add("unit", False, detail="no unit given")
        return rep
    witness = None
    for i in range(n):
        e = a.basis(i)
        if a.mul(a.unit, e) != e or a.mul(e, a.unit) != e:
            witness = (i,)
            break
    rep.add("unit", witness is None, witness)
    return rep


def _check_lie_table(rep, n, c, bracket, basis):
    witness = None
    for i, j in itertools.product(range(n), repeat=2):
        if any(x != -y for x, y in zip(c[i][j], c[j][i])):
            witness = (i, j)
            break
    rep.add("antisymmetry", witness is None, witness)
    witness = None
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = basis(i), basis(j), basis(k)
        terms = (bracket(x, bracket(y, z)), bracket(y, bracket(z, x)), bracket(z, bracket(x, y)))
        if any(sum(t) for t in zip(*terms)):
            witness = (i, j, k)
            break
    rep.add("jacobi", witness is None, witness)
    return rep


def check_lie(l: LieAlgebra) -> Report:
    return _check_lie_table(Report("Lie algebra"), l.dim, l.constants, l.bracket, l.basis)


def check_color_function(g: GradedLieAlgebra) -> Report:
    rep = Report("color function")
    els = g.elements()
    witness = None
    for a, b, c in itertools.product(els, repeat=3):
        if g.theta(g.add(a, b), c) != g.theta(a, c) * g.theta(b, c):
            witness = (a, b, c)
            break
    rep.add("theta(a+b,c)=theta(a,c)theta(b,c)", witness is None, witness)
    witness = None
    for a, b, c in itertools.product(els, repeat=3):
        if g.theta(a, g.add(b, c)) != g.theta(a, b) * g.theta(a, c):
            witness = (a, b, c)
            break
    rep.add("theta(a,b+c)=theta(a,b)theta(a,c)", witness is None, witness)
    witness = None
    for a, b in itertools.product(els, repeat=2):
        if g.theta(a, b) * g.theta(b, a) != 1:
            witness = (a, b)
            break
    rep.add("theta(a,b)theta(b,a)=1", witness is None, witness)
    return rep


def check_graded_lie(g: GradedLieAlgebra) -> Report:
    n, c = g.dim, g.constants
    rep = Report("(G,theta)-Lie algebra")
    rep.checks.extend(check_color_function(g).checks)

    witness = None
    for i, j, k in itertools.product(range(n), repeat=3):
        if c[i][j][k] and g.degrees[k] != g.add(g.degrees[i], g.degrees[j]):
            witness = (i, j, k)
            break
    rep.add("graduation", witness is None, witness)

    witness = None
    for i, j in itertools.product(range(n), repeat=2):
        t = g.sign(i, j)
        if any(x != -t * y for x, y in zip(c[i][j], c[j][i])):
            witness = (i, j)
            break
    rep.add("braided antisymmetry", witness is None, witness)

    witness = None
    br = g.bracket
    for i, j, k in itertools.product(range(n), repeat=3):
        a, b, cc = g.degrees[i], g.degrees[j], g.degrees[k]
        x, y, z = g.basis(i), g.basis(j), g.basis(k)
        t1 = [g.theta(cc, a) * v for v in br(x, br(y, z))]
        t2 = [g.theta(b, cc) * v for v in br(z, br(x, y))]
        t3 = [g.theta(a, b) * v for v in br(y, br(z, x))]
        if any(p + q + r for p, q, r in zip(t1, t2, t3)):
            witness = (i, j, k)
            break
    rep.add("braided jacobi", witness is None, witness)
    return rep


def check_coalgebra(cc: Coalgebra) -> Report:
    n, d = cc.dim, cc.comult
    rep = Report("coalgebra")
    witness = None
    for k in range(n):
        for i, j, l in itertools.product(range(n), repeat=3):
            left = sum((d[k][m][l] * d[m][i][j] for m in range(n)), sc.zero(cc.field))
            right = sum((d[k][i][m] * d[m][j][l] for m in range(n)), sc.zero(cc.field))
            if left != right:
                witness = (k, i, j, l)
                break
        if witness:
            break
    rep.add("coassociativity", witness is None, witness)
    witness = None
    eps = cc.counit
    for k in range(n):
        for i in range(n):
            left = sum((eps[m] * d[k][m][i] for m in range(n)), sc.zero(cc.field))
            right = sum((eps[m] * d[k][i][m] for m in range(n)), sc.zero(cc.field))
            want = 1 if i == k else 0
            if left != want or right != want:
                witness = (k, i)
                break
        if witness:
            break
    rep.add("counit", witness is None, witness)
    return rep


def check_lie_coalgebra(m: LieCoalgebra) -> Report:
    n, d = m.dim, m.cobracket
    z = sc.zero(m.field)
    rep = Report("Lie coalgebra")
    witness = None
    for k, i, j in itertools.product(range(n), repeat=3):
        if d[k][i][j] != -d[k][j][i]:
            witness = (k, i, j)
            break
    rep.add("coantisymmetry", witness is None, witness)

    def iterated(k, i, j, l):
        # coefficient of e_i⊗e_j⊗e_l in (I⊗Δ)Δ(e_k)
        return sum((d[k][i][p] * d[p][j][l] for p in range(n)), z)

    witness = None
    for k, i, j, l in itertools.product(range(n), repeat=4):
        if iterated(k, i, j, l) + iterated(k, j, l, i) + iterated(k, l, i, j):
            witness = (k, i, j, l)
            break
    rep.add("cojacobi", witness is None, witness)
    return rep


def check_poisson(p: PoissonAlgebra, require_unit: bool = True) -> Report:
    rep = Report("Poisson algebra")
    rep.checks.extend(check_assoc(p.product, require_unit).checks)
    rep.checks.extend(check_lie(p.bracket).checks)
    n = p.dim
    mul, br = p.product.mul, p.bracket.bracket
    witness = None
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = (p.product.basis(t) for t in (i, j, k))
        left = br(x, mul(y, z))
        right = tuple(u + v for u, v in zip(mul(br(x, y), z), mul(y, br(x, z))))
        if left != right:
            witness = (i, j, k)
            break
    rep.add("leibniz", witness is None, witness)
    return rep


# ---------------------------------------------------------------------------
# center, duals


def _ad_system(l):
    # rows (j,k), column i: coefficient of e_k in [e_i, e_j]
    n = l.dim
    rows = [[l.constants[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    return la.Matrix.from_rows(rows, l.field)


def center(l):
    """Basis of Z(L) = {z : [z,x] = 0 for all x}.

    For graded input the basis is computed degree by degree, so every vector
    is homogeneous; use :func:`center_with_degrees` to get the degrees.
    """
    return [v for v, _ in center_with_degrees(l)]


def center_with_degrees(l):
    n = l.dim
    if not isinstance(l, GradedLieAlgebra):
        if n == 0:
            return []
        return [(v, None) for v in la.nullspace(_ad_system(l))]
    out = []
    z = sc.zero(l.field)
    for deg in l.occupied_degrees():
        idx = [i for i in range(n) if l.degrees[i] == deg]
        rows = [[l.constants[i][j][k] for i in idx] for j in range(n) for k in range(n)]
        for small in la.nullspace(la.Matrix.from_rows(rows, l.field)):
            v = [z] * n
            for i, x in zip(idx, small):
                v[i] = x
            out.append((tuple(v), deg))
    return out


def is_central(l, v) -> bool:
    return all(not any(l.bracket(v, l.basis(j))) for j in range(l.dim))


def dualize_assoc(a: AssocAlgebra) -> Coalgebra:
    """A ↦ A*: Δ(e_k*) = Σ c[i][j][k] e_i*⊗e_j*, ε = evaluation at 1_A."""
    n = a.dim
    if a.unit is None:
        raise StructureError("dualizing requires a unital algebra")
    d = [[[a.constants[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
    return Coalgebra(n, d, a.unit, a.field, tuple(f"{x}*" for x in a.names))


def dualize_coalgebra(c: Coalgebra) -> AssocAlgebra:
    n = c.dim
    m = [[[c.comult[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    names = tuple(x[:-1] if x.endswith("*") else f"{x}*" for x in c.names)
    return AssocAlgebra(n, m, c.counit, c.field, names)


def dualize_lie(l: LieAlgebra) -> LieCoalgebra:
    n = l.dim
    d = [[[l.constants[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
    return LieCoalgebra(n, d, l.field, tuple(f"{x}*" for x in l.names))


def dualize_lie_coalgebra(m: LieCoalgebra) -> LieAlgebra:
    n = m.dim
    f = [[[m.cobracket[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    names = tuple(x[:-1] if x.endswith("*") else f"{x}*" for x in m.names)
    return LieAlgebra(n, f, m.field, names)


def bracket_as_product(l: LieAlgebra) -> PoissonAlgebra:
    """Poisson structure with x*y = [x,y] (nonunital)."""
    return PoissonAlgebra(AssocAlgebra(l.dim, l.constants, None, l.field, l.names), l)


def check_remark_poisson(l: LieAlgebra) -> bool:
    """Whether L carries a Poisson structure with product equal to the bracket.

    That holds exactly when every bracket [e_i,e_j] is central.  In the
    positive case the nonunital Poisson axioms are re-checked as a self-test.
    """
    n = l.dim
    ok = all(is_central(l, l.bracket_basis(i, j)) for i in range(n) for j in range(n))
    if ok:
        rep = check_poisson(bracket_as_product(l), require_unit=False)
        if not rep.ok:
            raise AssertionError(f"central brackets but Poisson self-test failed:\n{rep}")
    return ok


# ---------------------------------------------------------------------------
# catalog


def _assoc_from_table(names, table, unit):
    n = len(names)
    idx = {x: i for i, x in enumerate(names)}
    consts = {}
    for (a, b), terms in table.items():
        for name, coef in terms.items():
            consts[(idx[a], idx[b], idx[name])] = coef
    return AssocAlgebra(n, consts, unit, "Q", names)


def _mat_units(n=2):
    names = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    consts = {}
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if j == k:
            consts[(i * n + j, k * n + l, i * n + l)] = 1
    return names, consts


def _lie_from_brackets(names, brackets):
    """Antisymmetric extension of brackets given for ordered pairs."""
    idx = {x: i for i, x in enumerate(names)}
    consts = {}
    for (a, b), terms in brackets.items():
        for name, coef in terms.items():
            consts[(idx[a], idx[b], idx[name])] = Fraction(coef)
            consts[(idx[b], idx[a], idx[name])] = -Fraction(coef)
    return LieAlgebra(len(names), consts, "Q", names)


def gl11() -> GradedLieAlgebra:
    """gl(1|1) with supercommutator [a,b] = ab − (−1)^{|a||b|} ba on 2×2 matrix units."""
    order = [(0, 0), (1, 1), (0, 1), (1, 0)]  # E11, E22, E12, E21
    names = ("E11", "E22", "E12", "E21")
    par = [0, 0, 1, 1]

    def unit(i, j):
        return [[1 if (r, c) == (i, j) else 0 for c in range(2)] for r in range(2)]

    def mm(x, y):
        return [[sum(x[r][k] * y[k][c] for k in range(2)) for c in range(2)] for r in range(2)]

    consts = {}
    for a, (i, j) in enumerate(order):
        for b, (k, l) in enumerate(order):
            s = (-1) ** (par[a] * par[b])
            p, q = mm(unit(i, j), unit(k, l)), mm(unit(k, l), unit(i, j))
            for c, (r, t) in enumerate(order):
                v = p[r][t] - s * q[r][t]
                if v:
                    consts[(a, b, c)] = v
    return super_graded(4, consts, par, "Q", names)


def _abelian(n):
    return LieAlgebra(n, {}, "Q", tuple(f"a{i + 1}" for i in range(n)))


def catalog(name: str):
    """Named example structure; see :data:`CATALOG_NAMES`."""
    key = name.strip().lower()
    if key.startswith("abelian"):
        digits = key[len("abelian"):].strip("()_ ")
        if digits and not digits.isdigit():
            raise UnknownCatalogEntry(name)
        n = int(digits) if digits else 3
        if n < 1:
            raise UnknownCatalogEntry(name)
        return _abelian(n)
    if key in ("ground", "k"):
        return AssocAlgebra(1, {(0, 0, 0): 1}, (1,), "Q", ("1",))
    if key == "dual_numbers":
        return _assoc_from_table(
            ("1", "x"),
            {("1", "1"): {"1": 1}, ("1", "x"): {"x": 1}, ("x", "1"): {"x": 1}},
            (1, 0),
        )
    if key == "split":
        return _assoc_from_table(
            ("1", "x"),
            {("1", "1"): {"1": 1}, ("1", "x"): {"x": 1}, ("x", "1"): {"x": 1}, ("x", "x"): {"1": 1}},
            (1, 0),
        )
    if key == "group_c2":
        return _assoc_from_table(
            ("e", "g"),
            {("e", "e"): {"e": 1}, ("e", "g"): {"g": 1}, ("g", "e"): {"g": 1}, ("g", "g"): {"e": 1}},
            (1, 0),
        )
    if key == "mat2":
        names, consts = _mat_units(2)
        return AssocAlgebra(4, consts, (1, 0, 0, 1), "Q", tuple(names))
    if key == "sl2":
        return _lie_from_brackets(
            ("e", "f", "h"),
            {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}},
        )
    if key == "heisenberg3":
        return _lie_from_brackets(("x", "y", "z"), {("x", "y"): {"z": 1}})
    if key == "gl11":
        return gl11()
    if key == "mat2_poisson":
        a = catalog("mat2")
        n = a.dim
        comm = {}
        for i, j, k in itertools.product(range(n), repeat=3):
            v = a.constants[i][j][k] - a.constants[j][i][k]
            if v:
                comm[(i, j, k)] = v
        return PoissonAlgebra(a, LieAlgebra(n, comm, "Q", a.names))
    raise UnknownCatalogEntry(name)


CATALOG_NAMES = (
    "ground",
    "dual_numbers",
    "split",
    "mat2",
    "group_c2",
    "sl2",
    "heisenberg3",
    "abelian(n)",
    "gl11",
    "mat2_poisson",
)

ASSOC_CATALOG = ("dual_numbers", "split", "group_c2", "mat2")


# ---------------------------------------------------------------------------
# JSON


def _sparse(table, n, field_):
    out = []
    for i, j, k in itertools.product(range(n), repeat=3):
        v = table[i][j][k]
        if v:
            out.append([i, j, k, _scalar_str(v, field_)])
    return out


def _scalar_str(v, field_):
    if field_ == "Q":
        return str(v)
    return sc.to_json(v, field_)


def _parse_sparse(entries):
    out = {}
    for i, j, k, v in entries:
        out[(int(i), int(j), int(k))] = sc.from_json(v)
    return out


def algebra_to_json(obj) -> dict:
    if isinstance(obj, PoissonAlgebra):
        d = algebra_to_json(obj.product)
        d["kind"] = "poisson"
        d["bracket"] = _sparse(obj.bracket.constants, obj.dim, obj.field)
        return d
    out = {"dim": obj.dim, "field": obj.field}
    if obj.names:
        out["names"] = list(obj.names)
    if isinstance(obj, AssocAlgebra):
        out["kind"] = "assoc"
        out["constants"] = _sparse(obj.constants, obj.dim, obj.field)
        if obj.unit is not None:
            out["unit"] = [_scalar_str(x, obj.field) for x in obj.unit]
    elif isinstance(obj, GradedLieAlgebra):
        out["kind"] = "graded_lie"
        out["constants"] = _sparse(obj.constants, obj.dim, obj.field)
        r = len(obj.group)
        out["grading"] = {
            "group": list(obj.group),
            "degrees": [list(d) for d in obj.degrees],
            "theta": [
                [s, t, _scalar_str(obj.theta_gens[s][t], obj.field)] for s in range(r) for t in range(r)
            ],
        }
    elif isinstance(obj, LieAlgebra):
        out["kind"] = "lie"
        out["constants"] = _sparse(obj.constants, obj.dim, obj.field)
    elif isinstance(obj, Coalgebra):
        out["kind"] = "coalg"
        n = obj.dim
        out["constants"] = [
            [k, i, j, _scalar_str(obj.comult[k][i][j], obj.field)]
            for k, i, j in itertools.product(range(n), repeat=3)
            if obj.comult[k][i][j]
        ]
        out["counit"] = [_scalar_str(x, obj.field) for x in obj.counit]
    elif isinstance(obj, LieCoalgebra):
        out["kind"] = "lie_coalg"
        n = obj.dim
        out["constants"] = [
            [k, i, j, _scalar_str(obj.cobracket[k][i][j], obj.field)]
            for k, i, j in itertools.product(range(n), repeat=3)
            if obj.cobracket[k][i][j]
        ]
    else:
        raise TypeError(f"cannot encode {type(obj).__name__}")
    return out


def algebra_from_json(obj: dict):
    """Decode Algebra JSON; raises StructureError on malformed input."""
    try:
        kind = obj["kind"]
        n = int(obj["dim"])
        consts = _parse_sparse(obj.get("constants", []))
        names = tuple(obj.get("names", ()))
        fld = obj.get("field") or (_constants_field(consts) if consts else "Q")
        if kind == "assoc":
            unit = [sc.from_json(x) for x in obj["unit"]] if "unit" in obj else None
            return AssocAlgebra(n, consts, unit, fld, names)
        if kind == "lie":
            return LieAlgebra(n, consts, fld, names)
        if kind == "graded_lie":
            gr = obj["grading"]
            group = tuple(int(d) for d in gr["group"])
            r = len(group)
            theta = [[1] * r for _ in range(r)]
            for s, t, v in gr.get("theta", []):
                theta[int(s)][int(t)] = sc.from_json(v)
            return GradedLieAlgebra(n, consts, group, gr["degrees"], theta, fld, names)
        if kind == "coalg":
            counit = [sc.from_json(x) for x in obj["counit"]]
            return Coalgebra(n, consts, counit, fld, names)
        if kind == "lie_coalg":
            return LieCoalgebra(n, consts, fld, names)
        if kind == "poisson":
            unit = [sc.from_json(x) for x in obj["unit"]] if "unit" in obj else None
            prod = AssocAlgebra(n, consts, unit, fld, names)
            br = LieAlgebra(n, _parse_sparse(obj.get("bracket", [])), fld, names)
            return PoissonAlgebra(prod, br)
    except StructureError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise StructureError(f"malformed algebra JSON: {exc}") from exc
    raise StructureError(f"unknown algebra kind {kind!r}")
