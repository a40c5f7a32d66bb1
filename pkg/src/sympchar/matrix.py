"""Dense exact matrices over the scalar tower, with the usual field
algorithms (elimination, determinants, kernels) and the characteristic
polynomials used throughout the package.

Characteristic polynomials follow the convention ``phi_M(t) = det(M - tE)``,
so the leading coefficient is ``(-1)**dim``.  This is the convention under
which the Pfaffian polynomials of this package square to characteristic
polynomials without a sign correction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    IrrationalSpectrum,
    NotSquare,
    ScalarKindMismatch,
    SingularMatrix,
    SizeMismatch,
)
from .scalars import (
    BiPoly,
    RatFun,
    UniPoly,
    bipoly_interpolate2d,
    to_fraction,
    upoly_interpolate,
    upoly_rational_roots,
)

__all__ = [
    "Matrix",
    "Subspace",
    "det",
    "rank",
    "rref",
    "inverse",
    "solve",
    "charpoly",
    "kernel_basis",
    "eigenspace",
    "generalized_eigenspace",
    "apply_poly",
    "is_diagonalizable",
    "two_endo_charpoly",
    "FIELD_KINDS",
]

FIELD_KINDS = ("rational", "ratfun")

_ZERO = {
    "rational": Fraction(0),
    "unipoly": UniPoly((), "s"),
    "bipoly": BiPoly(),
    "ratfun": RatFun(0),
}
_ONE = {
    "rational": Fraction(1),
    "unipoly": UniPoly((1,), "s"),
    "bipoly": BiPoly((1,)),
    "ratfun": RatFun(1),
}
_RANK = {"rational": 0, "unipoly": 1, "ratfun": 2, "bipoly": 2}


def kind_of(x) -> str:
    if isinstance(x, RatFun):
        return "ratfun"
    if isinstance(x, BiPoly):
        return "bipoly"
    if isinstance(x, UniPoly):
        return "unipoly"
    return "rational"


def coerce(x, kind: str):
    """Embed a scalar into ``kind`` (rationals go anywhere, Q[s] into Q(s) or Q[s,t])."""
    src = kind_of(x)
    if src == "rational":
        x = to_fraction(x)
    if src == kind:
        return x
    if src == "rational":
        if kind == "unipoly":
            return UniPoly((x,), "s")
        if kind == "bipoly":
            return BiPoly((x,))
        if kind == "ratfun":
            return RatFun(x)
        return x
    if src == "unipoly":
        if kind == "ratfun":
            return RatFun(x)
        if kind == "bipoly":
            return BiPoly.from_unipoly(x)
        if kind == "rational" and x.is_constant():
            return x.constant_value()
    if src == "ratfun" and kind == "rational" and x.is_constant():
        return x.constant_value()
    raise ScalarKindMismatch(f"cannot convert {src} scalar to {kind}")


class Matrix:
    """Immutable dense matrix; every entry has the same scalar kind."""

    __slots__ = ("rows", "kind")

    def __init__(self, rows: Iterable[Iterable], kind: str | None = None):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrices must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix rows")
        if kind is None:
            kinds = {kind_of(x) for r in rows for x in r}
            kind = max(kinds, key=_RANK.__getitem__)
            if kinds == {"ratfun", "bipoly"}:
                raise ScalarKindMismatch("mixed Q(s) and Q[s,t] entries")
        self.kind = kind
        self.rows = tuple(tuple(coerce(x, kind) for x in r) for r in rows)

    @classmethod
    def _wrap(cls, rows, kind: str) -> "Matrix":
        m = object.__new__(cls)
        m.rows = tuple(tuple(r) for r in rows)
        m.kind = kind
        return m

    # constructors
    @classmethod
    def identity(cls, n: int, kind: str = "rational") -> "Matrix":
        return cls.scalar(n, _ONE[kind], kind)

    @classmethod
    def scalar(cls, n: int, c, kind: str | None = None) -> "Matrix":
        kind = kind or kind_of(c)
        c = coerce(c, kind)
        z = _ZERO[kind]
        return cls._wrap([[c if i == j else z for j in range(n)] for i in range(n)], kind)

    @classmethod
    def zeros(cls, r: int, c: int | None = None, kind: str = "rational") -> "Matrix":
        c = r if c is None else c
        z = _ZERO[kind]
        return cls._wrap([[z] * c for _ in range(r)], kind)

    @classmethod
    def diag(cls, values: Sequence, kind: str | None = None) -> "Matrix":
        values = list(values)
        kind = kind or max((kind_of(v) for v in values), key=_RANK.__getitem__)
        z = _ZERO[kind]
        vals = [coerce(v, kind) for v in values]
        n = len(vals)
        return cls._wrap([[vals[i] if i == j else z for j in range(n)] for i in range(n)], kind)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], kind: str | None = None) -> "Matrix":
        columns = [list(c) for c in columns]
        return cls([list(r) for r in zip(*columns)], kind)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        rows = []
        for brow in blocks:
            for i in range(brow[0].nrows):
                rows.append([x for b in brow for x in b.rows[i]])
        return cls(rows)

    # shape and access
    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [tuple(c) for c in zip(*self.rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix._wrap(zip(*self.rows), self.kind)

    def transpose(self) -> "Matrix":
        return self.T

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._wrap([[self.rows[i][j] for j in cols] for i in rows], self.kind)

    def to_kind(self, kind: str) -> "Matrix":
        if kind == self.kind:
            return self
        return Matrix._wrap([[coerce(x, kind) for x in r] for r in self.rows], kind)

    def map(self, fn, kind: str | None = None) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows], kind)

    def evaluate(self, s=None, t=None) -> "Matrix":
        """Substitute rationals for ``s`` and/or ``t`` in polynomial entries."""
        if self.kind == "rational":
            return self
        if self.kind == "bipoly":
            if s is None or t is None:
                raise ValueError("both s and t are needed for a Q[s,t] matrix")
            return Matrix._wrap([[x(s, t) for x in r] for r in self.rows], "rational")
        value = s if s is not None else t
        return Matrix._wrap([[x(to_fraction(value)) for x in r] for r in self.rows], "rational")

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def trace(self):
        if not self.is_square():
            raise NotSquare("trace of a non-square matrix")
        acc = _ZERO[self.kind]
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    # arithmetic
    def _unify(self, other: "Matrix") -> tuple["Matrix", "Matrix", str]:
        if self.kind == other.kind:
            return self, other, self.kind
        kind = max(self.kind, other.kind, key=_RANK.__getitem__)
        return self.to_kind(kind), other.to_kind(kind), kind

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise SizeMismatch(f"cannot add {self.shape} and {other.shape}")
        a, b, kind = self._unify(other)
        return Matrix._wrap(
            [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)], kind
        )

    def __neg__(self):
        return Matrix._wrap([[-x for x in r] for r in self.rows], self.kind)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise SizeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        a, b, kind = self._unify(other)
        z = _ZERO[kind]
        bcols = list(zip(*b.rows))
        out = []
        for r in a.rows:
            row = []
            for c in bcols:
                acc = z
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix._wrap(out, kind)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        kind = max(self.kind, kind_of(other), key=_RANK.__getitem__)
        c = coerce(other, kind)
        return Matrix._wrap([[coerce(x, kind) * c for x in r] for r in self.rows], kind)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if not self.is_square():
            raise NotSquare("power of a non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        result = Matrix.identity(self.nrows, self.kind)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product."""
        z = _ZERO[self.kind]
        out = []
        for r in self.rows:
            acc = z
            for x, y in zip(r, v):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def commutes_with(self, other: "Matrix") -> bool:
        return self @ other == other @ self

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"

    __str__ = __repr__


def _require_square(M: Matrix) -> None:
    if not M.is_square():
        raise NotSquare(f"expected a square matrix, got shape {M.shape}")


def _require_field(M: Matrix) -> Matrix:
    if M.kind == "unipoly":
        return M.to_kind("ratfun")
    if M.kind not in FIELD_KINDS:
        raise ScalarKindMismatch(f"{M.kind} entries do not form a field")
    return M


def _rref_rows(rows: list[list], ncols: int) -> list[int]:
    """In-place reduced row echelon form; returns pivot columns.

    Columns are scanned left to right and the pivot is the first nonzero entry
    at or below the current row, so the result is deterministic.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c] if not isinstance(rows[r][c], RatFun) else rows[r][c].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y if y else x for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return pivots


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    M = _require_field(M)
    rows = [list(r) for r in M.rows]
    pivots = _rref_rows(rows, M.ncols)
    return Matrix._wrap(rows, M.kind), pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def det(M: Matrix):
    """Exact determinant by pivoted elimination over Q or Q(s)."""
    _require_square(M)
    M = _require_field(M)
    rows = [list(r) for r in M.rows]
    n = len(rows)
    result = _ONE[M.kind]
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return _ZERO[M.kind]
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        piv = rows[c][c]
        result = result * piv
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def inverse(M: Matrix) -> Matrix:
    _require_square(M)
    M = _require_field(M)
    n = M.nrows
    one, zero = _ONE[M.kind], _ZERO[M.kind]
    rows = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(M.rows)]
    pivots = _rref_rows(rows, n)
    if len(pivots) < n:
        raise SingularMatrix("matrix is not invertible")
    return Matrix._wrap([r[n:] for r in rows], M.kind)


def solve(A: Matrix, B: Matrix) -> Matrix:
    """Solve ``A X = B`` for ``X`` when ``A`` has full column rank and a solution exists."""
    A = _require_field(A)
    if A.nrows != B.nrows:
        raise SizeMismatch("right-hand side has the wrong number of rows")
    B = B.to_kind(A.kind) if B.kind != A.kind else B
    n, k = A.ncols, B.ncols
    rows = [list(a) + list(b) for a, b in zip(A.rows, B.rows)]
    pivots = _rref_rows(rows, n)
    if pivots != list(range(n)):
        raise SingularMatrix("coefficient matrix does not have full column rank")
    if any(any(x for x in r[n:]) for r in rows[n:]):
        raise SingularMatrix("system is inconsistent")
    return Matrix._wrap([r[n:] for r in rows[:n]], A.kind)


class Subspace:
    """Subspace of K^dim given by a basis of linearly independent column vectors."""

    __slots__ = ("dim", "basis", "kind")

    def __init__(self, dim: int, basis: Sequence[Sequence] = (), kind: str | None = None):
        self.dim = dim
        basis = [tuple(v) for v in basis]
        if any(len(v) != dim for v in basis):
            raise SizeMismatch("basis vector length differs from the ambient dimension")
        if kind is None:
            kind = max((kind_of(x) for v in basis for x in v), default="rational",
                       key=_RANK.__getitem__)
        self.kind = kind
        self.basis = tuple(tuple(coerce(x, kind) for x in v) for v in basis)
        if self.basis and rank(self.matrix()) != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")

    @classmethod
    def span(cls, dim: int, vectors: Sequence[Sequence], kind: str | None = None) -> "Subspace":
        """Subspace spanned by arbitrary vectors (dependencies removed)."""
        vectors = [tuple(v) for v in vectors]
        if not vectors:
            return cls(dim, (), kind or "rational")
        kind = kind or max((kind_of(x) for v in vectors for x in v), key=_RANK.__getitem__)
        if kind == "unipoly":
            kind = "ratfun"
        M = Matrix.from_columns(vectors, kind)
        _, pivots = rref(M)
        return cls(dim, [vectors[j] for j in pivots], kind)

    @classmethod
    def whole(cls, dim: int, kind: str = "rational") -> "Subspace":
        return cls(dim, Matrix.identity(dim, kind).columns(), kind)

    @classmethod
    def zero(cls, dim: int, kind: str = "rational") -> "Subspace":
        return cls(dim, (), kind)

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        """Basis vectors as the columns of a ``dim x rank`` matrix."""
        if not self.basis:
            raise ValueError("the zero subspace has no basis matrix")
        return Matrix.from_columns(self.basis, self.kind)

    def to_kind(self, kind: str) -> "Subspace":
        if kind == self.kind:
            return self
        return Subspace(self.dim, self.basis, kind)

    def contains(self, v: Sequence) -> bool:
        if not any(v):
            return True
        if not self.basis:
            return False
        return rank(Matrix.from_columns(list(self.basis) + [tuple(v)])) == len(self.basis)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.dim != other.dim:
            raise SizeMismatch("subspaces of different ambient spaces")
        return Subspace.span(self.dim, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.dim != other.dim:
            raise SizeMismatch("subspaces of different ambient spaces")
        kind = max(self.kind, other.kind, key=_RANK.__getitem__)
        if not self.basis or not other.basis:
            return Subspace.zero(self.dim, kind)
        A = self.to_kind(kind).matrix()
        B = other.to_kind(kind).matrix()
        stacked = Matrix._wrap([list(a) + [-x for x in b] for a, b in zip(A.rows, B.rows)], kind)
        ker = kernel_basis(stacked)
        p = len(self.basis)
        vecs = [A.apply(x[:p]) for x in ker.basis]
        return Subspace(self.dim, vecs, kind)

    __and__ = intersect

    def is_invariant_under(self, M: Matrix) -> bool:
        return all(self.contains(M.apply(v)) for v in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.dim == other.dim
            and len(self.basis) == len(other.basis)
            and self.issubset(other)
        )

    def __hash__(self):
        return hash((self.dim, len(self.basis)))

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis)
        return f"Subspace(dim={self.dim}, basis=[{vecs}])"


def kernel_basis(M: Matrix) -> Subspace:
    """Null space basis read off the reduced row echelon form.

    One vector per free column: 1 in that column, minus the pivot-row entries
    in the pivot columns.
    """
    R, pivots = rref(M)
    n = M.ncols
    one, zero = _ONE[R.kind], _ZERO[R.kind]
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -R.rows[i][f]
        basis.append(v)
    return Subspace(n, basis, R.kind)


def eigenspace(M: Matrix, lam) -> Subspace:
    _require_square(M)
    return kernel_basis(M - Matrix.scalar(M.nrows, lam, M.kind))


def generalized_eigenspace(M: Matrix, q) -> Subspace:
    """Kernel of ``(M - qE)**dim``.  Polynomial entries are lifted to Q(s)."""
    _require_square(M)
    kind = max(M.kind, kind_of(q), key=_RANK.__getitem__)
    if kind == "unipoly":
        kind = "ratfun"
    if kind not in FIELD_KINDS:
        raise ScalarKindMismatch(f"generalized eigenspaces need field entries, got {kind}")
    n = M.nrows
    if M.kind in ("rational", "unipoly") and kind_of(q) in ("rational", "unipoly") \
            and kind == "ratfun":
        # power in the ring Q[s] first; one lift to Q(s) at the end is cheaper
        ring = M.to_kind("unipoly") - Matrix.scalar(n, coerce(q, "unipoly"), "unipoly")
        shifted = (ring**n).to_kind("ratfun")
    else:
        shifted = (M.to_kind(kind) - Matrix.scalar(n, q, kind)) ** n
    return kernel_basis(shifted)


def charpoly(M: Matrix) -> UniPoly:
    """``det(M - tE)``, by evaluation at ``0..dim`` and interpolation."""
    _require_square(M)
    if M.kind != "rational":
        raise ScalarKindMismatch("charpoly expects a rational matrix")
    n = M.nrows
    nodes = list(range(n + 1))
    values = [det(M - Matrix.scalar(n, c)) for c in nodes]
    return upoly_interpolate(nodes, values, "t")


def apply_poly(p, M: Matrix) -> Matrix:
    """Evaluate ``p`` at the square matrix ``M`` by Horner's rule.

    ``p`` is a :class:`UniPoly`, or a :class:`BiPoly` whose ``t`` is replaced
    by ``M`` (its ``s``-coefficients then multiply as scalars of Q[s]).
    """
    _require_square(M)
    n = M.nrows
    if isinstance(p, BiPoly):
        if M.kind not in ("rational", "unipoly"):
            raise ScalarKindMismatch("BiPoly can only be applied to matrices over Q or Q[s]")
        M = M.to_kind("unipoly")
        coeffs = p.coeffs
        kind = "unipoly"
    elif isinstance(p, UniPoly):
        coeffs = p.coeffs
        kind = M.kind
    else:
        raise ScalarKindMismatch(f"cannot apply {type(p).__name__} to a matrix")
    acc = Matrix.zeros(n, n, kind)
    for c in reversed(coeffs):
        acc = acc @ M + Matrix.scalar(n, c, kind)
    return acc


def is_diagonalizable(M: Matrix) -> bool:
    """Diagonalizability over Q; a non-split characteristic polynomial is an error."""
    _require_square(M)
    roots, splits = upoly_rational_roots(charpoly(M))
    if not splits:
        raise IrrationalSpectrum("characteristic polynomial does not split over Q")
    return sum(len(eigenspace(M, lam)) for lam in roots) == M.nrows


def two_endo_charpoly(M: Matrix, N: Matrix) -> BiPoly:
    """Characteristic polynomial in ``t`` of ``(M - sE)(N - sE)`` over Q[s].

    Computed as ``det((M - sE)(N - sE) - tE)`` on the integer grid
    ``[0, 2n] x [0, n]`` followed by interpolation.
    """
    _require_square(M)
    _require_square(N)
    if M.shape != N.shape:
        raise SizeMismatch(f"{M.shape} and {N.shape} differ")
    n = M.nrows
    values = []
    for sv in range(2 * n + 1):
        shift = Matrix.scalar(n, sv)
        prod = (M - shift) @ (N - shift)
        values.append([det(prod - Matrix.scalar(n, tv)) for tv in range(n + 1)])
    return bipoly_interpolate2d(values, (2 * n, n))
