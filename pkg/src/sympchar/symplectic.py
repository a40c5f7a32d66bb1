"""Symplectic forms, adjoints, orthogonal complements and symplectic bases.

Vectors are column coordinates in the working basis of ``Q^{2n}`` and a form
is given by its Gram matrix ``G``, so ``omega(v, w) = v^T G w``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import (
    DegenerateForm,
    NotAlternating,
    NotLagrangian,
    NotSelfAdjoint,
    NotTransverse,
    SingularMatrix,
    SizeMismatch,
)
from .matrix import Matrix, Subspace, det, inverse, kernel_basis, kind_of, solve
from .pfaffian import is_alternating, pfaffian_bipoly, pfaffian_field
from .scalars import BiPoly, UniPoly

__all__ = [
    "SymplecticForm",
    "SymplecticBasis",
    "standard_form",
    "form_for",
    "adjoint",
    "symplectic_basis",
    "perp",
    "classify_subspace",
    "lagrangian_complete",
    "restrict_form",
    "restrict_map",
    "is_symplectic_map",
    "is_self_adjoint",
    "is_symplectically_normal",
    "pf_omega",
    "random_symplectic",
]

SubspaceClass = Literal["symplectic", "isotropic", "coisotropic", "lagrangian", "generic"]


@dataclass(frozen=True)
class SymplecticForm:
    """Nondegenerate alternating form on Q^dim, stored as its Gram matrix."""

    gram: Matrix

    def __post_init__(self):
        G = self.gram
        if G.kind != "rational":
            object.__setattr__(self, "gram", G.to_kind("rational"))
            G = self.gram
        if not G.is_square() or G.nrows % 2:
            raise DegenerateForm(f"a symplectic Gram matrix must be square of even size, got {G.shape}")
        if not is_alternating(G):
            raise NotAlternating("Gram matrix is not alternating")
        if det(G) == 0:
            raise DegenerateForm("Gram matrix is degenerate")

    @property
    def dim(self) -> int:
        return self.gram.nrows

    @property
    def n(self) -> int:
        return self.gram.nrows // 2

    def __call__(self, v: Sequence, w: Sequence):
        Gw = self.gram.apply(w)
        acc = 0
        for x, y in zip(v, Gw):
            if x and y:
                acc = acc + x * y
        return acc

    def is_standard(self) -> bool:
        return self.gram == standard_form(self.n).gram


@dataclass(frozen=True)
class SymplecticBasis:
    """Columns ``e_1..e_n, f_1..f_n`` of ``matrix`` form a symplectic basis."""

    matrix: Matrix

    @property
    def n(self) -> int:
        return self.matrix.ncols // 2

    @property
    def e(self) -> list[tuple]:
        return self.matrix.columns()[: self.n]

    @property
    def f(self) -> list[tuple]:
        return self.matrix.columns()[self.n:]

    def interleaved(self) -> Matrix:
        """Columns reordered as ``e_1, f_1, ..., e_n, f_n``."""
        cols = self.matrix.columns()
        n = self.n
        return Matrix.from_columns([cols[k] for i in range(n) for k in (i, n + i)])

    def gram(self, form: SymplecticForm) -> Matrix:
        return self.matrix.T @ form.gram @ self.matrix


def standard_form(n: int) -> SymplecticForm:
    """Gram matrix ``[[0, E_n], [-E_n, 0]]``."""
    if n < 1:
        raise ValueError("n must be positive")
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = 1
        rows[n + i][i] = -1
    return SymplecticForm(Matrix(rows))


def form_for(M: Matrix, form: SymplecticForm | None) -> SymplecticForm:
    """Return ``form``, defaulting to the standard form of ``M``'s size; check sizes."""
    if not M.is_square():
        raise SizeMismatch(f"expected a square matrix, got {M.shape}")
    if form is None:
        if M.nrows % 2:
            raise SizeMismatch("odd-dimensional matrix has no symplectic form")
        return standard_form(M.nrows // 2)
    if form.dim != M.nrows:
        raise SizeMismatch(f"matrix of size {M.nrows} against a form on Q^{form.dim}")
    return form


def adjoint(M: Matrix, form: SymplecticForm | None = None) -> Matrix:
    """Symplectic adjoint ``G^{-1} M^T G``: ``omega(Mv, w) = omega(v, M* w)``."""
    form = form_for(M, form)
    G = form.gram
    return inverse(G) @ M.T @ G


def is_self_adjoint(M: Matrix, form: SymplecticForm | None = None) -> bool:
    return adjoint(M, form) == M


def is_symplectically_normal(M: Matrix, form: SymplecticForm | None = None) -> bool:
    A = adjoint(M, form)
    return M @ A == A @ M


def is_symplectic_map(P: Matrix, form: SymplecticForm | None = None) -> bool:
    form = form_for(P, form)
    return P.T @ form.gram @ P == form.gram


def symplectic_basis(form: SymplecticForm) -> SymplecticBasis:
    """Symplectic Gram-Schmidt.

    Take the first remaining vector ``v`` and the first ``u`` with
    ``omega(v, u) != 0``; set ``f = u / omega(v, u)``; project every other
    vector onto the complement of ``span{v, f}``; repeat.
    """
    remaining = list(Matrix.identity(form.dim).columns())
    es, fs = [], []
    while remaining:
        v = remaining.pop(0)
        k = next((i for i, u in enumerate(remaining) if form(v, u)), None)
        if k is None:
            raise DegenerateForm("form is degenerate on the remaining subspace")
        u = remaining.pop(k)
        c = form(v, u)
        f = tuple(x / c for x in u)
        projected = []
        for x in remaining:
            a, b = form(x, f), form(x, v)
            projected.append(tuple(xi - a * vi + b * fi for xi, vi, fi in zip(x, v, f)))
        remaining = projected
        es.append(v)
        fs.append(f)
    return SymplecticBasis(Matrix.from_columns(es + fs))


def perp(W: Subspace, form: SymplecticForm) -> Subspace:
    """``{v : omega(v, w) = 0 for all w in W}``."""
    if W.dim != form.dim:
        raise SizeMismatch(f"subspace of Q^{W.dim} against a form on Q^{form.dim}")
    if not W.basis:
        return Subspace.whole(form.dim)
    G = form.gram.to_kind(W.kind)
    constraints = Matrix([G.apply(w) for w in W.basis], W.kind)
    return kernel_basis(constraints)


def classify_subspace(W: Subspace, form: SymplecticForm) -> SubspaceClass:
    P = perp(W, form)
    if W == P:
        return "lagrangian"
    if len(W & P) == 0:
        return "symplectic"
    if W.issubset(P):
        return "isotropic"
    if P.issubset(W):
        return "coisotropic"
    return "generic"


def lagrangian_complete(L1: Subspace, L2: Subspace, form: SymplecticForm) -> SymplecticBasis:
    """Extend the stored basis ``e`` of ``L1`` by ``f`` in ``L2`` to a symplectic basis.

    The functionals dual to ``e`` that vanish on ``L2`` are realized as
    ``omega(., f_j)`` with ``f_j`` in ``L2``: with ``A[i][k] = omega(e_i, g_k)``
    for a basis ``g`` of ``L2``, the coefficients of ``f`` are ``A^{-1}``.
    """
    for L in (L1, L2):
        if classify_subspace(L, form) != "lagrangian":
            raise NotLagrangian("subspace is not Lagrangian")
    if len(L1 & L2):
        raise NotTransverse("Lagrangian subspaces intersect nontrivially")
    es, gs = list(L1.basis), list(L2.basis)
    A = Matrix([[form(e, g) for g in gs] for e in es])
    C = inverse(A)
    Gm = Matrix.from_columns(gs)
    fs = (Gm @ C).columns()
    return SymplecticBasis(Matrix.from_columns(es + fs))


def restrict_form(form: SymplecticForm, W: Subspace) -> SymplecticForm:
    """The form restricted to ``W``, in coordinates of ``W``'s stored basis."""
    B = W.matrix()
    try:
        return SymplecticForm(B.T @ form.gram @ B)
    except (DegenerateForm, NotAlternating) as exc:
        raise DegenerateForm("subspace is not symplectic") from exc


def restrict_map(M: Matrix, W: Subspace) -> Matrix:
    """Matrix of ``M|_W`` in the coordinates of ``W``'s stored basis."""
    B = W.matrix()
    try:
        return solve(B, M @ B)
    except SingularMatrix as exc:
        raise ValueError("subspace is not invariant under the map") from exc


def pf_omega(
    A: Matrix,
    basis: SymplecticBasis | None = None,
    form: SymplecticForm | None = None,
    bounds: tuple[int, int] | None = None,
):
    """Pfaffian of ``Omega_A = (omega(v_i, A v_j))`` in the interleaved order
    ``(e_1, f_1, ..., e_n, f_n)``; normalized so that the identity gives 1.

    ``A`` may have rational entries, polynomial entries in ``t`` or in ``s``,
    or entries in Q[s, t]; the result has the matching type.
    """
    form = form_for(A, form)
    basis = symplectic_basis(form) if basis is None else basis
    V = basis.interleaved()
    Omega = V.T @ form.gram @ A @ V
    try:
        if Omega.kind == "rational":
            return pfaffian_field(Omega)
        if Omega.kind == "ratfun":
            raise SizeMismatch("pf_omega does not accept Q(s) entries")
        variables = {x.var for r in A.rows for x in r if kind_of(x) == "unipoly" and x.degree > 0}
        result = pfaffian_bipoly(Omega.to_kind("bipoly"), bounds)
    except NotAlternating as exc:
        raise NotSelfAdjoint("omega_A is not alternating: A is not self-adjoint") from exc
    if Omega.kind == "unipoly":
        if variables == {"t"}:
            return UniPoly([c.coefficient(0) for c in result.coeffs], "t")
        return result.coefficient(0)
    return result


def _unimodular(n: int, rng: random.Random, bound: int = 3) -> Matrix:
    while True:
        a = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for _ in range(2 * n):
            if n == 1:
                break
            i, j = rng.sample(range(n), 2)
            k = rng.choice((-1, 1))
            a[i] = [x + k * y for x, y in zip(a[i], a[j])]
        if rng.random() < 0.5:
            a[0] = [-x for x in a[0]]
        if all(abs(x) <= bound for r in a for x in r):
            return Matrix(a)


def _symmetric(n: int, rng: random.Random, bound: int = 3) -> Matrix:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(-bound, bound)
    return Matrix(a)


def random_symplectic(n: int, seed: int) -> Matrix:
    """Random element of Sp(2n, Q) for the standard form, deterministic per seed.

    Product of a lower shear ``[[E, 0], [S, E]]``, a block
    ``[[A, 0], [0, A^{-T}]]`` with unimodular ``A``, and an upper shear
    ``[[E, S'], [0, E]]``; ``S, S'`` symmetric.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    E, O = Matrix.identity(n), Matrix.zeros(n)
    S1, S2 = _symmetric(n, rng), _symmetric(n, rng)
    A = _unimodular(n, rng)
    lower = Matrix.block([[E, O], [S1, E]])
    middle = Matrix.block([[A, O], [O, inverse(A).T]])
    upper = Matrix.block([[E, S2], [O, E]])
    return lower @ middle @ upper
