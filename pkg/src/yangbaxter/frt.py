"""Degree-2 FRT relations  R T₁T₂ = T₂T₁ R  and subspace comparison.

A quadratic element in the generators t_ij is a coefficient vector over the
n⁴ monomials t_ab·t_cd.  Generator t_ab has index a*n + b; the monomial
t_ab·t_cd has index (a*n + b)*n² + (c*n + d), i.e. lexicographic by factor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg as la
from . import scalar as sc
from .errors import DimensionError, FieldMismatchError, QZero

GENERATOR_NAMES_2 = ("a", "b", "c", "d")


def gen(n, a, b):
    return a * n + b


def mono(n, g1, g2):
    return g1 * n * n + g2


@dataclass(frozen=True)
class RelationSet:
    """Row-reduced basis of a subspace of the degree-2 component."""

    n: int
    basis: la.Matrix  # rows in RREF; n⁴ columns
    pivots: tuple

    @classmethod
    def from_rows(cls, n, rows, field):
        size = n ** 4
        if any(len(r) != size for r in rows):
            raise DimensionError(f"relations must have {size} coefficients")
        if not rows:
            return cls(n, la.zeros(0, size, field), ())
        red, piv = la.rref(la.Matrix.from_rows(rows, field))
        return cls(n, la.Matrix.from_rows([red.row(i) for i in range(len(piv))], field), piv)

    @property
    def field(self):
        return self.basis.field

    @property
    def rank(self):
        return len(self.pivots)

    def __len__(self):
        return self.rank

    def rows(self):
        return [self.basis.row(i) for i in range(self.rank)]

    def contains(self, vec) -> bool:
        return _reduce(self, vec) is None

    def specialize(self, q) -> "RelationSet":
        """Evaluate a Q(q) relation set at a rational q (rank may drop)."""
        if self.field != "Qq":
            raise FieldMismatchError("specialize needs a Q(q) relation set")
        rows = [[x.evaluate(q) for x in r] for r in self.rows()]
        return RelationSet.from_rows(self.n, rows, "Q")

    def format(self) -> list:
        return [format_quadratic(self.n, r) for r in self.rows()]


def _reduce(rs: RelationSet, vec):
    """Remainder of vec modulo the span, or None if it lies in the span."""
    v = list(vec)
    for i, p in enumerate(rs.pivots):
        if v[p]:
            f = v[p]
            row = rs.basis.row(i)
            v = [x - f * y if y else x for x, y in zip(v, row)]
    return None if not any(v) else tuple(v)


def monomial_name(n, m):
    g1, g2 = divmod(m, n * n)
    return _gen_name(n, g1) + _gen_name(n, g2)


def _gen_name(n, g):
    if n == 2:
        return GENERATOR_NAMES_2[g]
    a, b = divmod(g, n)
    return f"t{a + 1}{b + 1}"


def format_quadratic(n, vec) -> str:
    terms = []
    for m, c in enumerate(vec):
        if not c:
            continue
        name = monomial_name(n, m)
        s = str(c)
        if s == "1":
            terms.append(name)
        elif s == "-1":
            terms.append(f"-{name}")
        else:
            terms.append(f"({s})*{name}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


# ---------------------------------------------------------------------------
# relation extraction


def frt_relation_vectors(R: la.Matrix):
    """The n⁴ entries of R T₁T₂ − T₂T₁ R as quadratic forms in t_ij.

    Entry ((i,k),(j,l)) equals Σ_{m,p} R[(i,k),(m,p)] t_mj t_pl − Σ_{m,p} t_kp t_im R[(m,p),(j,l)].
    """
    n = R.tensor_dim
    size = n ** 4
    z = sc.zero(R.field)
    out = []
    for i, k, j, l in itertools.product(range(n), repeat=4):
        v = [z] * size
        row = i * n + k
        col = j * n + l
        for m, p in itertools.product(range(n), repeat=2):
            c = R[row, m * n + p]
            if c:
                idx = mono(n, gen(n, m, j), gen(n, p, l))
                v[idx] = v[idx] + c
            c = R[m * n + p, col]
            if c:
                idx = mono(n, gen(n, k, p), gen(n, i, m))
                v[idx] = v[idx] - c
        out.append(v)
    return out


def frt_relations(R: la.Matrix) -> RelationSet:
    return RelationSet.from_rows(R.tensor_dim, frt_relation_vectors(R), R.field)


def paper_matrix(q, eta) -> la.Matrix:
    """The dimension-two R-matrix with rows (1,0,0,0), (0,1,0,0), (0,1−q,q,0), (η,0,0,−q)."""
    if q == 0:
        raise QZero("q must be nonzero")
    if eta not in (0, 1):
        raise ValueError("eta must be 0 or 1")
    return la.Matrix.from_rows(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 1 - q, q, 0], [eta, 0, 0, -q]],
        sc.join_fields(sc.field_of(q)),
    )


def _rel(n, field, terms):
    v = [sc.zero(field)] * (n ** 4)
    names = {x: i for i, x in enumerate(GENERATOR_NAMES_2)}
    for coef, word in terms:
        idx = mono(n, names[word[0]], names[word[1]])
        v[idx] = v[idx] + sc.coerce(coef, field)
    return v


def paper_relation_vectors(q, eta):
    """The eight listed commutation relations, each ``lhs = rhs`` stored as lhs − rhs."""
    f = sc.field_of(q)
    one = sc.one(f)
    if eta == 0:
        rels = [
            [(one, "ba"), (-q, "ab")],                                   # ba = q ab
            [(one, "ac"), (-one, "ca")],                                 # ac = ca
            [(one, "ad"), (-one, "da"), (q - 1, "cb")],                  # [a,d] = (1-q) cb
            [(1 + q, "bb")],                                             # (1+q) b² = 0
            [(one, "bc"), (-q, "cb")],                                   # bc = q cb
            [(one, "bd"), (q, "db")],                                    # bd = -q db
            [(1 + q, "cc")],                                             # (1+q) c² = 0
            [(one, "dc"), (one, "cd")],                                  # dc = -cd
        ]
    elif eta == 1:
        rels = [
            [(one, "ba"), (-q, "ab")],                                   # ba = q ab
            [(one, "ab"), (-one, "dc"), (-one, "cd")],                   # ab = dc + cd
            [(one, "ac"), (-one, "ca"), (-one, "db")],                   # [a,c] = db
            [(one, "aa"), (-one, "dd"), (-(1 + q), "cc")],               # a² - d² = (1+q) c²
            [(one, "ad"), (-one, "da"), (q - 1, "cb")],                  # [a,d] = (1-q) cb
            [(one, "bb")],                                               # b² = 0
            [(one, "bc"), (-q, "cb")],                                   # bc = q cb
            [(one, "bd"), (q, "db")],                                    # bd = -q db
        ]
    else:
        raise ValueError("eta must be 0 or 1")
    return [_rel(2, f, r) for r in rels]


def paper_relation_list(q, eta) -> RelationSet:
    if q == 0:
        raise QZero("q must be nonzero")
    return RelationSet.from_rows(2, paper_relation_vectors(q, eta), sc.field_of(q))


# ---------------------------------------------------------------------------
# comparison


@dataclass(frozen=True)
class SpanComparison:
    relation: str  # "equal" | "s1<s2" | "s2<s1" | "incomparable"
    rank1: int
    rank2: int
    joint_rank: int
    witness_1_not_in_2: tuple | None
    witness_2_not_in_1: tuple | None


def compare_spans(s1: RelationSet, s2: RelationSet) -> SpanComparison:
    if s1.field != s2.field:
        raise FieldMismatchError("relation sets over different fields")
    if s1.n != s2.n:
        raise DimensionError("relation sets for different generator counts")
    w12 = next((r for r in s1.rows() if not s2.contains(r)), None)
    w21 = next((r for r in s2.rows() if not s1.contains(r)), None)
    joint = RelationSet.from_rows(s1.n, s1.rows() + s2.rows(), s1.field).rank
    if w12 is None and w21 is None:
        rel = "equal"
    elif w12 is None:
        rel = "s1<s2"
    elif w21 is None:
        rel = "s2<s1"
    else:
        rel = "incomparable"
    return SpanComparison(rel, s1.rank, s2.rank, joint, w12, w21)


# ---------------------------------------------------------------------------
# coalgebra compatibility at degree two


def coproduct_quadratic(n, vec):
    """δ applied to a quadratic element, with δ(t_ij) = Σ_k t_ik ⊗ t_kj.

    Returns an n⁴ × n⁴ matrix M with M[m1, m2] the coefficient of m1 ⊗ m2.
    """
    size = n ** 4
    field = sc.field_of(vec[0]) if vec else "Q"
    z = sc.zero(field)
    out = [[z] * size for _ in range(size)]
    for m, c in enumerate(vec):
        if not c:
            continue
        g1, g2 = divmod(m, n * n)
        a, b = divmod(g1, n)
        cc, d = divmod(g2, n)
        for k, l in itertools.product(range(n), repeat=2):
            left = mono(n, gen(n, a, k), gen(n, cc, l))
            right = mono(n, gen(n, k, b), gen(n, l, d))
            out[left][right] = out[left][right] + c
    return la.Matrix.from_rows(out, field)


def _quotient_map(rs: RelationSet) -> la.Matrix:
    """Projection of the degree-2 component onto a complement of the span.

    Row r of the result reads off the r-th non-pivot coordinate after
    reduction modulo the relation basis.
    """
    size = rs.n ** 4
    free = [c for c in range(size) if c not in rs.pivots]
    z, o = sc.zero(rs.field), sc.one(rs.field)
    cols = []
    for c in range(size):
        e = [z] * size
        e[c] = o
        red = _reduce(rs, e)
        red = red if red is not None else (z,) * size
        cols.append([red[f] for f in free])
    return la.Matrix.from_columns(cols, rs.field) if free else la.zeros(0, size, rs.field)


def is_coideal_compatible(rs: RelationSet) -> bool:
    """Whether δ(rel) ∈ Rel⊗M + M⊗Rel for every basis relation."""
    P = _quotient_map(rs)
    if P.rows == 0:
        return True
    for r in rs.rows():
        D = coproduct_quadratic(rs.n, r)
        if not (P @ D @ P.T).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# JSON


def relations_to_json(rs: RelationSet) -> dict:
    return {
        "n": rs.n,
        "field": rs.field,
        "rank": rs.rank,
        "pivots": list(rs.pivots),
        "relations": [[sc.to_json(x, rs.field) for x in r] for r in rs.rows()],
        "text": rs.format(),
    }


def relations_from_json(obj: dict) -> RelationSet:
    field = obj.get("field", "Q")
    rows = [[sc.from_json(x, field) for x in r] for r in obj["relations"]]
    return RelationSet.from_rows(int(obj["n"]), rows, field)


# ---------------------------------------------------------------------------
# exploratory: which two-dimensional algebra data give the matrix above?


@dataclass(frozen=True)
class SourceHit:
    algebra: str
    params: tuple
    form: str
    change_of_basis: tuple


def _small_invertibles(entries=(-1, 0, 1)):
    for a, b, c, d in itertools.product(entries, repeat=4):
        if a * d - b * c:
            yield la.Matrix.from_rows([[a, b], [c, d]], "Q")


def search_assoc_sources(q, eta, algebras=("dual_numbers", "split", "group_c2"), coeffs=None):
    """Try build_assoc_R on small algebras, up to τ-composition and Q⊗Q conjugation.

    ``q`` should be a concrete rational.  Coefficients default to a handful
    of simple expressions in q.  Returns every exact match; an empty list
    means nothing in the searched box reproduces the target.
    """
    from . import algebras as alg
    from . import constructors as con

    q = sc.coerce(q, "Q")
    target = paper_matrix(q, eta)
    if coeffs is None:
        coeffs = sorted({sc.coerce(x, "Q") for x in (1, -1, q, -q, 1 / q, -1 / q, 1 - q, q - 1, 1 + q)})
    tau = la.twist(2, "Q")
    changes = [(Q, la.kron(Q, Q)) for Q in _small_invertibles()]
    ident = la.identity(4, "Q")

    def invariants(M):
        return (sum(M[i, i] for i in range(4)), la.rank(M - ident), la.rank(M + q * ident))

    want = invariants(target)
    hits = []
    for name in algebras:
        a = alg.catalog(name)
        for al, be, ga in itertools.product(coeffs, repeat=3):
            R = con.build_assoc_R(a, al, be, ga)
            for form, M in (("R", R), ("tau*R", tau @ R), ("R*tau", R @ tau)):
                if invariants(M) != want:
                    continue
                for Q, QQ in changes:
                    if QQ @ M == target @ QQ:
                        hits.append(SourceHit(name, (al, be, ga), form, tuple(Q.row(0) + Q.row(1))))
    return hits
