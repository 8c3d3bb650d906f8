"""Dense exact matrices and the tensor-leg machinery for V⊗V and V⊗V⊗V.

Tensor convention: the basis vector e_i⊗e_j of V⊗V has flat index ``i*n + j``
and e_i⊗e_j⊗e_k of V⊗V⊗V has index ``(i*n + j)*n + k``.  Column ``c`` of an
operator holds the coordinates of the image of basis vector ``c``.
"""

from __future__ import annotations

from math import isqrt

from . import scalar as sc
from .errors import DimensionError, FieldMismatchError, SingularMatrixError


class Matrix:
    """Immutable dense matrix over one exact field.

    ``Matrix`` also plays the role of an operator on V⊗V (side n²) or on V
    (side n); see :attr:`tensor_dim`.
    """

    __slots__ = ("rows", "cols", "field", "_data")

    def __init__(self, rows: int, cols: int, entries, field: str = "Q"):
        if field not in sc.FIELDS:
            raise ValueError(f"unknown field {field!r}")
        entries = [sc.coerce(x, field) for x in entries]
        if len(entries) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries, got {len(entries)}")
        data = tuple(tuple(entries[r * cols:(r + 1) * cols]) for r in range(rows))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, data, field):
        # trusted constructor: data already a tuple of tuples in ``field``
        m = object.__new__(cls)
        object.__setattr__(m, "rows", len(data))
        object.__setattr__(m, "cols", len(data[0]) if data else 0)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "_data", data)
        return m

    @classmethod
    def from_rows(cls, rows, field: str | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if field is None:
            field = sc.join_fields(*(sc.field_of(x) for r in rows for x in r)) if rows else "Q"
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r], field)

    @classmethod
    def from_columns(cls, columns, field: str | None = None) -> "Matrix":
        return cls.from_rows(list(zip(*columns)), field)

    # -- access -----------------------------------------------------------

    def __getitem__(self, idx):
        r, c = idx
        return self._data[r][c]

    def row(self, r):
        return self._data[r]

    def column(self, c):
        return tuple(row[c] for row in self._data)

    def tolist(self):
        return [list(r) for r in self._data]

    @property
    def entries(self):
        return tuple(x for r in self._data for x in r)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def tensor_dim(self) -> int:
        """n such that the matrix acts on V⊗V with dim V = n."""
        n = isqrt(self.rows)
        if n * n != self.rows or self.rows != self.cols:
            raise DimensionError(f"{self.rows}x{self.cols} is not an operator on V⊗V")
        return n

    # -- arithmetic -------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        self._same(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.field,
        )

    def __sub__(self, other):
        self._same(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.field,
        )

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.field)

    def scale(self, c) -> "Matrix":
        c = sc.coerce(c, self.field)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._data), self.field)

    def __rmul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        zero = sc.zero(self.field)
        # skip zeros: lifted operators are very sparse
        sparse = [[(j, b) for j, b in enumerate(r) if b] for r in other._data]
        out = []
        for r in self._data:
            acc = [zero] * other.cols
            for k, a in enumerate(r):
                if a:
                    for j, b in sparse[k]:
                        acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return Matrix._raw(tuple(out), self.field)

    def apply(self, vec):
        """Matrix times a coordinate vector (returns a tuple)."""
        if len(vec) != self.cols:
            raise DimensionError("vector length mismatch")
        zero = sc.zero(self.field)
        vec = [sc.coerce(x, self.field) for x in vec]
        out = []
        for r in self._data:
            acc = zero
            for a, x in zip(r, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self._data)) if self.rows else (), self.field)

    T = property(transpose)

    def map(self, fn, field: str | None = None) -> "Matrix":
        """Apply ``fn`` entrywise (e.g. specialize q in a Q(q) matrix)."""
        field = field or self.field
        return Matrix(self.rows, self.cols, [fn(x) for x in self.entries], field)

    def to_field(self, field: str) -> "Matrix":
        return Matrix(self.rows, self.cols, self.entries, field)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(a for r in self._data for a in r)

    def first_nonzero(self):
        """(row, col, value) of the first nonzero entry in row-major order, or None."""
        for i, r in enumerate(self._data):
            for j, a in enumerate(r):
                if a:
                    return (i, j, a)
        return None

    def nnz(self) -> int:
        return sum(1 for r in self._data for a in r if a)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self._data == other._data

    def __hash__(self):
        return hash((self.field, self._data))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.field})"

    def __str__(self):
        cells = [[str(a) for a in r] for r in self._data]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


# ---------------------------------------------------------------------------
# constructors


def zeros(rows: int, cols: int | None = None, field: str = "Q") -> Matrix:
    cols = rows if cols is None else cols
    z = sc.zero(field)
    return Matrix._raw(tuple((z,) * cols for _ in range(rows)), field)


def identity(n: int, field: str = "Q") -> Matrix:
    z, o = sc.zero(field), sc.one(field)
    return Matrix._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field)


def diag(values, field: str | None = None) -> Matrix:
    values = list(values)
    n = len(values)
    return Matrix.from_rows(
        [[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field
    )


def permutation(perm, field: str = "Q") -> Matrix:
    """Matrix sending basis vector ``j`` to basis vector ``perm[j]``."""
    n = len(perm)
    z, o = sc.zero(field), sc.one(field)
    rows = [[z] * n for _ in range(n)]
    for j, i in enumerate(perm):
        rows[i][j] = o
    return Matrix._raw(tuple(tuple(r) for r in rows), field)


def from_images(size: int, image, field: str) -> Matrix:
    """Build a matrix whose column ``c`` is ``image(c)`` (a length-``size`` sequence)."""
    cols = [[sc.coerce(x, field) for x in image(c)] for c in range(size)]
    return Matrix._raw(tuple(tuple(col[r] for col in cols) for r in range(size)), field)


def basis_vector(n: int, i: int, field: str = "Q"):
    z, o = sc.zero(field), sc.one(field)
    return tuple(o if k == i else z for k in range(n))


def tensor(u, v):
    """Coordinates of u⊗v under the flat convention."""
    return tuple(a * b for a in u for b in v)


# ---------------------------------------------------------------------------
# tensor legs


def kron(a: Matrix, b: Matrix) -> Matrix:
    a._same(b)
    zero = sc.zero(a.field)
    zrow = (zero,) * b.cols
    data = []
    for ra in a._data:
        for rb in b._data:
            row = []
            for x in ra:
                # zero and unit entries are common in lifts; avoid the product
                row.extend(zrow if not x else rb if x == 1 else (x * y for y in rb))
            data.append(tuple(row))
    return Matrix._raw(tuple(data), a.field)


def twist(n: int, field: str = "Q") -> Matrix:
    """The flip τ(v⊗w) = w⊗v on V⊗V, dim V = n."""
    if n < 1:
        raise DimensionError("dimension must be positive")
    return permutation([j * n + i for i in range(n) for j in range(n)], field)


def lift12(R: Matrix) -> Matrix:
    n = R.tensor_dim
    return kron(R, identity(n, R.field))


def lift23(R: Matrix) -> Matrix:
    n = R.tensor_dim
    return kron(identity(n, R.field), R)


def lift13(R: Matrix) -> Matrix:
    """(I⊗τ)(R⊗I)(I⊗τ), built entrywise: R¹³[(i,j,k),(a,j,c)] = R[(i,k),(a,c)]."""
    n = R.tensor_dim
    zero = sc.zero(R.field)
    data = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                src = R._data[i * n + k]
                row = [zero] * (n ** 3)
                for a in range(n):
                    for c in range(n):
                        row[(a * n + j) * n + c] = src[a * n + c]
                data.append(tuple(row))
    return Matrix._raw(tuple(data), R.field)


def yb_commutator(R: Matrix, S: Matrix, T: Matrix) -> Matrix:
    """[R,S,T] = R¹²S¹³T²³ − T²³S¹³R¹² (all three on the same V⊗V)."""
    if not (R.shape == S.shape == T.shape):
        raise DimensionError("YB commutator needs operators on the same V⊗V")
    r12, s13, t23 = lift12(R), lift13(S), lift23(T)
    return r12 @ s13 @ t23 - t23 @ s13 @ r12


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def conjugate(R: Matrix, Q: Matrix) -> Matrix:
    """Basis change (Q⊗Q) R (Q⊗Q)⁻¹."""
    qq = kron(Q, Q)
    return qq @ R @ invert(qq)


# ---------------------------------------------------------------------------
# elimination


def rref(m: Matrix):
    """Reduced row-echelon form and the tuple of pivot columns."""
    rows = [list(r) for r in m._data]
    pivots = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv if x else x for x in rows[r]]
        piv = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return Matrix._raw(tuple(tuple(x) for x in rows), m.field) if rows else m, tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix):
    """Basis of {v : m v = 0}, one vector per free column, in canonical form."""
    red, pivots = rref(m)
    z, o = sc.zero(m.field), sc.one(m.field)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [z] * m.cols
        v[f] = o
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        basis.append(tuple(v))
    return basis


def invert(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination; raises SingularMatrixError."""
    if m.rows != m.cols:
        raise DimensionError("only square matrices are invertible")
    n = m.rows
    aug = Matrix._raw(
        tuple(r + identity(n, m.field)._data[i] for i, r in enumerate(m._data)), m.field
    )
    red, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise SingularMatrixError("matrix is singular")
    return Matrix._raw(tuple(r[n:] for r in red._data), m.field)


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


# ---------------------------------------------------------------------------
# JSON


def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "field": m.field,
        "entries": [sc.to_json(x, m.field) for x in m.entries],
    }


def matrix_from_json(obj: dict) -> Matrix:
    field = obj.get("field", "Q")
    entries = [sc.from_json(x, field) for x in obj["entries"]]
    return Matrix(int(obj["rows"]), int(obj["cols"]), entries, field)
