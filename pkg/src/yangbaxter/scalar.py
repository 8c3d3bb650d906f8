"""Exact scalars for the three supported ground fields.

* ``Q``  -- :class:`fractions.Fraction`
* ``Qi`` -- :class:`Gaussian`, a Gaussian rational ``re + im*i``
* ``Qq`` -- :class:`RatFunc`, a reduced quotient of polynomials in one
  formal variable ``q`` with rational coefficients

Python ints and Fractions are accepted as operands everywhere (they are the
prime field).  Mixing ``Qi`` with ``Qq`` raises :class:`FieldMismatchError`.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from numbers import Rational

from .errors import FieldMismatchError

FIELDS = ("Q", "Qi", "Qq")


# ---------------------------------------------------------------------------
# Gaussian rationals


class Gaussian:
    """Gaussian rational ``re + im*i`` with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Gaussian):
            re, im = re.re, re.im + Fraction(im)
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian is immutable")

    @staticmethod
    def _lift(x):
        if isinstance(x, Gaussian):
            return x
        if isinstance(x, (int, Fraction)):
            return Gaussian(x)
        if isinstance(x, RatFunc):
            raise FieldMismatchError("cannot mix Q(i) and Q(q) scalars")
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return Gaussian(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        p = self * o.conjugate()
        return Gaussian(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return (Gaussian(1) / self) ** (-k)
        out, base = Gaussian(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, RatFunc) else NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


I = Gaussian(0, 1)


# ---------------------------------------------------------------------------
# Polynomials over Q (coefficient tuples, lowest degree first, trimmed)


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim(
        (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)
    )


def poly_neg(a):
    return tuple(-x for x in a)


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    lead = b[-1]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        quot[shift] = f
        for k, y in enumerate(b):
            a[k + shift] -= f * y
        a = list(_trim(a))
    return _trim(quot), tuple(a)


def poly_monic(a):
    if not a:
        return a
    lead = a[-1]
    return tuple(x / lead for x in a)


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_str(a, var="q"):
    if not a:
        return "0"
    terms = []
    for k, c in enumerate(a):
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Rational functions Q(q)


class RatFunc:
    """Element of Q(q), kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(Fraction(1),), _reduced=False):
        if isinstance(num, (int, Fraction)):
            num = (Fraction(num),)
        if isinstance(den, (int, Fraction)):
            den = (Fraction(den),)
        num = _trim(Fraction(x) for x in num)
        den = _trim(Fraction(x) for x in den)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(q)")
        if not _reduced:
            if not num:
                den = (Fraction(1),)
            else:
                g = poly_gcd(num, den)
                if len(g) > 1:
                    num = poly_divmod(num, g)[0]
                    den = poly_divmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num = tuple(x / lead for x in num)
                den = tuple(x / lead for x in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def q(cls):
        """The formal variable."""
        return cls((0, 1))

    @staticmethod
    def _lift(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc(x)
        if isinstance(x, Gaussian):
            raise FieldMismatchError("cannot mix Q(q) and Q(i) scalars")
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(poly_add(self.num, o.num), self.den)
        return RatFunc(
            poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den)),
            poly_mul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(poly_neg(self.num), self.den, _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return RatFunc()
        return RatFunc(poly_mul(self.num, o.num), poly_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatFunc(poly_mul(self.num, o.den), poly_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return (RatFunc(1) / self) ** (-k)
        out, base = RatFunc(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return NotImplemented
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den == (1,) and len(self.num) <= 1:
            return hash(self.num[0] if self.num else Fraction(0))
        return hash((self.num, self.den))

    def evaluate(self, x) -> Fraction:
        """Specialize ``q := x`` (raises ZeroDivisionError at a pole)."""
        d = poly_eval(self.den, Fraction(x))
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at q={x}")
        return poly_eval(self.num, Fraction(x)) / d

    def is_constant(self):
        return len(self.num) <= 1 and self.den == (1,)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        n = poly_str(self.num)
        if self.den == (1,):
            return n
        return f"({n})/({poly_str(self.den)})"


# ---------------------------------------------------------------------------
# field bookkeeping


def field_of(x) -> str:
    if isinstance(x, Gaussian):
        return "Qi"
    if isinstance(x, RatFunc):
        return "Qq"
    if isinstance(x, Rational):
        return "Q"
    raise TypeError(f"not an exact scalar: {x!r}")


def zero(field: str):
    return {"Q": Fraction(0), "Qi": Gaussian(0), "Qq": RatFunc()}[field]


def one(field: str):
    return {"Q": Fraction(1), "Qi": Gaussian(1), "Qq": RatFunc(1)}[field]


def coerce(x, field: str):
    """Promote ``x`` into ``field``. Only Q -> Qi and Q -> Qq are allowed."""
    if isinstance(x, str):
        x = Fraction(x)
    src = field_of(x)
    if src == field:
        return Fraction(x) if field == "Q" else x
    if src != "Q":
        raise FieldMismatchError(f"cannot convert a {src} scalar to {field}")
    if field == "Qi":
        return Gaussian(x)
    if field == "Qq":
        return RatFunc(Fraction(x))
    if field == "Q":
        return Fraction(x)
    raise ValueError(f"unknown field {field!r}")


def join_fields(*fields: str) -> str:
    """Smallest field containing all arguments."""
    fs = set(fields) - {"Q"}
    if not fs:
        return "Q"
    if len(fs) > 1:
        raise FieldMismatchError("Q(i) and Q(q) never mix")
    return fs.pop()


def is_root_of_unity(x) -> bool:
    """True for the values 1, -1, i, -i (the only roots of unity in Q(i))."""
    if isinstance(x, RatFunc):
        if not x.is_constant():
            return False
        x = x.num[0] if x.num else Fraction(0)
    g = Gaussian(x)
    return g in (Gaussian(1), Gaussian(-1), Gaussian(0, 1), Gaussian(0, -1))


# ---------------------------------------------------------------------------
# JSON encoding


def _frac_pair(x: Fraction):
    return [str(x.numerator), str(x.denominator)]


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_json(x, field: str | None = None):
    field = field or field_of(x)
    x = coerce(x, field)
    if field == "Q":
        return _frac_pair(x)
    if field == "Qi":
        return [_frac_pair(x.re), _frac_pair(x.im)]
    return {"num": [_frac_str(c) for c in x.num], "den": [_frac_str(c) for c in x.den]}


def from_json(obj, field: str | None = None):
    """Inverse of :func:`to_json`; also accepts a bare ``"a/b"`` string."""
    if isinstance(obj, str):
        val = Fraction(obj)
    elif isinstance(obj, (int,)):
        val = Fraction(obj)
    elif isinstance(obj, dict):
        val = RatFunc(
            tuple(Fraction(c) for c in obj["num"]), tuple(Fraction(c) for c in obj.get("den", ["1"]))
        )
    elif isinstance(obj, list) and len(obj) == 2 and all(isinstance(p, list) for p in obj):
        re, im = (Fraction(int(p[0]), int(p[1])) for p in obj)
        val = Gaussian(re, im)
    elif isinstance(obj, list) and len(obj) == 2:
        val = Fraction(int(obj[0]), int(obj[1]))
    else:
        raise ValueError(f"cannot decode scalar {obj!r}")
    return coerce(val, field) if field else val


# ---------------------------------------------------------------------------
# text input


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def parse_scalar(text: str, field: str | None = None):
    """Parse an arithmetic expression such as ``3/4``, ``1+2*i`` or ``(1-q)/q``.

    Integer literals, the names ``i`` and ``q``, + - * / and integer powers
    are accepted.  The result is promoted to ``field`` when given.
    """

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id in ("i", "q"):
            return I if node.id == "i" else RatFunc.q()
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
            e = ev(node.right)
            if not (isinstance(e, Fraction) and e.denominator == 1):
                raise ValueError("exponent must be an integer")
            return ev(node.left) ** int(e)
        raise ValueError(f"unsupported syntax in {text!r}")

    try:
        val = ev(ast.parse(text.strip(), mode="eval"))
    except SyntaxError as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc
    return coerce(val, field) if field else val
