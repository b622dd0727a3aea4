"""Dense matrices over exact rings and Gauss-Jordan linear solving."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .poly import Poly
from .rational import RationalFn
from .scalar import ONE, ZERO, GaussQ, as_scalar


class Matrix:
    """Rectangular matrix; entries are GaussQ, Poly or RationalFn."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = [list(r) for r in data]
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        if any(len(r) != self.cols for r in data):
            raise ValueError("ragged matrix")
        self.data = data

    @classmethod
    def zeros(cls, n, m=None, zero=ZERO):
        m = n if m is None else m
        return cls([[zero] * m for _ in range(n)])

    @classmethod
    def identity(cls, n, one=ONE, zero=ZERO):
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n, i, j, c=ONE):
        """Matrix unit E_ij (1-based indices) scaled by ``c``."""
        out = cls.zeros(n)
        out.data[i - 1][j - 1] = as_scalar(c) if not isinstance(c, (Poly, RationalFn)) else c
        return out

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.data])

    def to_poly(self) -> "Matrix":
        return self.map(Poly.coerce)

    def __add__(self, o):
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, o.data)])

    def __sub__(self, o):
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, o.data)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, o):
        if isinstance(o, Matrix):
            return self.matmul(o)
        return self.map(lambda x: x * o)

    def __rmul__(self, o):
        return self.map(lambda x: o * x)

    def matmul(self, o: "Matrix") -> "Matrix":
        if self.cols != o.rows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.data:
            row = []
            for j in range(o.cols):
                acc = None
                for k, a in enumerate(r):
                    if not a:
                        continue
                    b = o.data[k][j]
                    if not b:
                        continue
                    acc = a * b if acc is None else acc + a * b
                row.append(acc if acc is not None else _zero_like(r[0], o.data[0][j]))
            out.append(row)
        return Matrix(out)

    def commutator(self, o: "Matrix") -> "Matrix":
        return self.matmul(o) - o.matmul(self)

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self.data)])

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def __eq__(self, o):
        if not isinstance(o, Matrix) or (self.rows, self.cols) != (o.rows, o.cols):
            return NotImplemented if not isinstance(o, Matrix) else False
        return all(a == b for r, s in zip(self.data, o.data) for a, b in zip(r, s))

    __hash__ = None

    def diff(self, var: str) -> "Matrix":
        return self.map(lambda x: x.diff(var))

    def subs(self, mapping) -> "Matrix":
        return self.map(lambda x: x.subs(mapping) if hasattr(x, "subs") else x)

    def nilpotency_index(self, limit=None):
        """Smallest k with M^k = 0, or None if not nilpotent (k <= dimension)."""
        limit = limit or self.rows + 1
        p = self
        for k in range(1, limit + 1):
            if p.is_zero():
                return k
            p = p.matmul(self)
        return None

    def is_diagonal(self) -> bool:
        return all(not self.data[i][j] for i in range(self.rows) for j in range(self.cols) if i != j)

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.data) + "]"

    def pretty(self) -> str:
        cells = [[x.pretty() if hasattr(x, "pretty") else str(x) for x in r] for r in self.data]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("  ".join(c.rjust(w) for c in r) for r in cells)


def _zero_like(*xs):
    if any(isinstance(x, RationalFn) for x in xs):
        return RationalFn(0)
    if any(isinstance(x, Poly) for x in xs):
        return Poly.const(0)
    return ZERO


def nilpotent_exp(m: Matrix) -> Matrix:
    """exp(m) as a finite sum; raises ValueError if m is not nilpotent."""
    k = m.nilpotency_index()
    if k is None:
        raise ValueError("matrix is not nilpotent")
    m = m.to_poly()
    out = Matrix.identity(m.rows, Poly.const(1), Poly.const(0))
    p = out
    for n in range(1, k):
        p = p.matmul(m)
        out = out + p.map(lambda x, n=n: x.scale(ONE / factorial(n)))
    return out


# linear solving -----------------------------------------------------------------

@dataclass
class LinearSolution:
    status: str  # "solution" | "parametric" | "infeasible"
    rank: int
    pivots: list
    particular: list | None = None
    kernel: list = field(default_factory=list)
    witness: list | None = None  # row combination y with y·A = 0, y·b != 0

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def _field(x):
    if isinstance(x, (Poly, RationalFn)):
        r = RationalFn.coerce(x)
        if r.is_poly() and r.num.is_constant():
            return r.num.constant_term()
        return r
    return as_scalar(x)


def _inv(x):
    return ONE / x if isinstance(x, GaussQ) else RationalFn(1) / x


def _sparse_rref(rows, ncols):
    """Gauss-Jordan on sparse rows (dicts col -> value); pivots in columns < ncols.

    Returns (reduced rows in pivot order followed by the remaining rows, pivots).
    """
    rows = [dict(r) for r in rows]
    pivots = []
    done = []
    for c in range(ncols):
        p = next((i for i, row in enumerate(rows) if c in row), None)
        if p is None:
            continue
        prow = rows.pop(p)
        inv = _inv(prow[c])
        prow = {k: _field(v * inv) for k, v in prow.items()}
        prow = {k: v for k, v in prow.items() if v}
        for group in (rows, done):
            for i, row in enumerate(group):
                f = row.get(c)
                if f is None:
                    continue
                new = dict(row)
                for k, v in prow.items():
                    w = _field(new.get(k, ZERO) - f * v)
                    if w:
                        new[k] = w
                    else:
                        new.pop(k, None)
                group[i] = new
        done.append(prow)
        pivots.append(c)
    return done + rows, pivots


def rref(rows, ncols):
    """In-place reduced row echelon form of dense rows; returns pivot columns."""
    width = len(rows[0]) if rows else 0
    sparse = [{k: _field(v) for k, v in enumerate(r) if v} for r in rows]
    out, pivots = _sparse_rref(sparse, ncols)
    for i, row in enumerate(out):
        rows[i] = [row.get(k, ZERO) for k in range(width)]
    return pivots


def solve_linear(A, b=None, ncols=None) -> LinearSolution:
    """Solve ``A x = b`` exactly.

    ``A`` is a :class:`Matrix` or list of rows (dense lists, or sparse
    ``{column: value}`` dicts together with ``ncols``); ``b`` defaults to zero.  The
    result reports rank, a particular solution, a kernel basis, or -- when
    inconsistent -- a witness row combination certifying infeasibility.
    """
    rows = A.data if isinstance(A, Matrix) else A
    m = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if m else 0
    n = ncols
    b = [ZERO] * m if b is None else list(b)
    aug = []
    for i, (r, bi) in enumerate(zip(rows, b)):
        items = r.items() if isinstance(r, dict) else enumerate(r)
        row = {k: _field(v) for k, v in items if v}
        if bi:
            row[n] = _field(bi)
        row[n + 1 + i] = ONE
        aug.append(row)
    red, pivots = _sparse_rref(aug, n)
    rank = len(pivots)
    for row in red[rank:]:
        if row.get(n):
            return LinearSolution("infeasible", rank, pivots,
                                  witness=[row.get(n + 1 + i, ZERO) for i in range(m)])
    x = [ZERO] * n
    for i, c in enumerate(pivots):
        x[c] = red[i].get(n, ZERO)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    kernel = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for i, c in enumerate(pivots):
            e = red[i].get(f)
            if e:
                v[c] = _field(-e)
        kernel.append(v)
    return LinearSolution("parametric" if kernel else "solution", rank, pivots, x, kernel)


def rank(A) -> int:
    rows = [[_field(x) for x in r] for r in (A.data if isinstance(A, Matrix) else A)]
    if not rows:
        return 0
    return len(rref(rows, len(rows[0])))


__all__ = ["Matrix", "LinearSolution", "solve_linear", "rank", "rref", "nilpotent_exp"]
