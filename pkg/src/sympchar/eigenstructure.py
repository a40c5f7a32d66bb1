"""Pair eigenspaces of two endomorphisms and the decompositions they give.

For endomorphisms ``M, N`` and scalars ``lam, mu`` the pair space is

    V_{M,N}(lam, mu) = (V_M(lam) & V_N(mu)) + (V_M(mu) & V_N(lam))

with ``V_X(c)`` the generalized eigenspace.  For commuting ``M, N`` these
spaces are exactly the generalized eigenspaces of ``(M - sE)(N - sE)`` over
Q(s); with ``N = M*`` they split a symplectic space into symplectically
orthogonal symplectic pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    FactorizationFailed,
    NotCommuting,
    NotSymplecticallyNormal,
    RatFunDimensionExceeded,
    SizeMismatch,
)
from .matrix import (
    Matrix,
    Subspace,
    eigenspace,
    generalized_eigenspace,
    inverse,
    two_endo_charpoly,
)
from .scalars import UniPoly, to_fraction
from .scp import PairFactorization, scp, scp_factor_pairs
from .symplectic import SymplecticForm, adjoint, form_for, is_symplectically_normal

__all__ = [
    "PairDecomposition",
    "MAX_RATFUN_DIM",
    "pair_space",
    "product_sum_pair_space",
    "ratfun_pair_space",
    "pair_decomposition",
    "ratfun_projections",
    "sympl_pair_decomposition",
    "eigen_pair_witness",
]

# Guardrail on the ambient dimension for computations over Q(s).
MAX_RATFUN_DIM = 6


@dataclass(frozen=True)
class PairDecomposition:
    """Direct sum ``V = sum_i spaces[i]`` with ``pairs[i] = (lam_i, mu_i, m_i)``
    and ``projections[i]`` the projection onto ``spaces[i]`` along the others."""

    pairs: tuple[tuple[Fraction, Fraction, int], ...]
    spaces: tuple[Subspace, ...]
    projections: tuple[Matrix, ...]


def _check_pair(M: Matrix, N: Matrix) -> None:
    if not M.is_square() or M.shape != N.shape:
        raise SizeMismatch(f"need square matrices of one size, got {M.shape} and {N.shape}")


def _check_commuting(M: Matrix, N: Matrix) -> None:
    _check_pair(M, N)
    if not M.commutes_with(N):
        raise NotCommuting("M and N do not commute")


def _guard(dim: int, max_dim: int | None) -> None:
    limit = MAX_RATFUN_DIM if max_dim is None else max_dim
    if dim > limit:
        raise RatFunDimensionExceeded(
            f"Q(s) computations are limited to dimension {limit}; got {dim}"
        )


def pair_space(M: Matrix, N: Matrix, lam, mu) -> Subspace:
    _check_pair(M, N)
    lam, mu = to_fraction(lam), to_fraction(mu)
    first = generalized_eigenspace(M, lam) & generalized_eigenspace(N, mu)
    if lam == mu:
        return first
    return first + (generalized_eigenspace(M, mu) & generalized_eigenspace(N, lam))


def product_sum_pair_space(M: Matrix, N: Matrix, lam, mu) -> Subspace:
    """``V_{MN}(lam*mu) & V_{M+N}(lam+mu)`` for commuting ``M, N``."""
    _check_commuting(M, N)
    lam, mu = to_fraction(lam), to_fraction(mu)
    return generalized_eigenspace(M @ N, lam * mu) & generalized_eigenspace(M + N, lam + mu)


def _shifted_product(M: Matrix, N: Matrix) -> Matrix:
    s = Matrix.scalar(M.nrows, UniPoly.x("s"), "unipoly")
    return (M.to_kind("unipoly") - s) @ (N.to_kind("unipoly") - s)


def ratfun_pair_space(M: Matrix, N: Matrix, lam, mu, max_dim: int | None = None) -> Subspace:
    """Generalized eigenspace of ``(M - sE)(N - sE)`` at ``(lam - s)(mu - s)`` over Q(s)."""
    _check_commuting(M, N)
    _guard(M.nrows, max_dim)
    q = UniPoly.from_roots((to_fraction(lam), to_fraction(mu)), "s")
    return generalized_eigenspace(_shifted_product(M, N), q)


def _projections(spaces: Sequence[Subspace]) -> tuple[Matrix, ...]:
    vectors = [v for W in spaces for v in W.basis]
    kind = spaces[0].kind
    B = Matrix.from_columns(vectors, kind)
    Binv = inverse(B)
    out = []
    start = 0
    n = B.nrows
    for W in spaces:
        stop = start + len(W)
        sel = Matrix.diag([1 if start <= i < stop else 0 for i in range(n)], kind)
        out.append(B @ sel @ Binv)
        start = stop
    return tuple(out)


def _factorization(M: Matrix, N: Matrix) -> PairFactorization:
    return scp_factor_pairs(two_endo_charpoly(M, N))


def pair_decomposition(M: Matrix, N: Matrix) -> PairDecomposition:
    """``V`` as the direct sum of the ``m_i``-dimensional pair spaces of a
    commuting pair whose two-endomorphism characteristic polynomial splits."""
    _check_commuting(M, N)
    fac = _factorization(M, N)
    spaces = tuple(pair_space(M, N, lam, mu) for lam, mu, _ in fac.factors)
    for W, (lam, mu, m) in zip(spaces, fac.factors):
        if len(W) != m:
            raise FactorizationFailed(
                f"pair space for ({lam}, {mu}) has dimension {len(W)}, expected {m}"
            )
    return PairDecomposition(fac.factors, spaces, _projections(spaces))


def ratfun_projections(M: Matrix, N: Matrix, max_dim: int | None = None) -> list[Matrix]:
    """Projections over Q(s) onto the generalized eigenspaces of ``(M - sE)(N - sE)``,
    in the same order as :func:`pair_decomposition`."""
    _check_commuting(M, N)
    _guard(M.nrows, max_dim)
    fac = _factorization(M, N)
    spaces = [ratfun_pair_space(M, N, lam, mu, max_dim) for lam, mu, _ in fac.factors]
    return list(_projections(spaces))


def sympl_pair_decomposition(M: Matrix, form: SymplecticForm | None = None) -> PairDecomposition:
    """Symplectically orthogonal decomposition of ``V`` into the spaces
    ``V_{M,M*}(lam_i, mu_i)`` of dimension ``2 m_i``."""
    form = form_for(M, form)
    if not is_symplectically_normal(M, form):
        raise NotSymplecticallyNormal("M does not commute with its symplectic adjoint")
    fac = scp_factor_pairs(scp(M, form))
    Madj = adjoint(M, form)
    spaces = tuple(pair_space(M, Madj, lam, mu) for lam, mu, _ in fac.factors)
    for W, (lam, mu, m) in zip(spaces, fac.factors):
        if len(W) != 2 * m:
            raise FactorizationFailed(
                f"pair space for ({lam}, {mu}) has dimension {len(W)}, expected {2 * m}"
            )
    return PairDecomposition(fac.factors, spaces, _projections(spaces))


def eigen_pair_witness(M: Matrix, form: SymplecticForm | None, lam, mu) -> tuple | None:
    """A nonzero vector of ``E_M(lam) & E_{M*}(mu)`` when
    ``chi(s, (lam - s)(mu - s))`` vanishes identically, else ``None``."""
    form = form_for(M, form)
    if not is_symplectically_normal(M, form):
        raise NotSymplecticallyNormal("M does not commute with its symplectic adjoint")
    lam, mu = to_fraction(lam), to_fraction(mu)
    q = UniPoly.from_roots((lam, mu), "s")
    if scp(M, form).value.subs_t(q):
        return None
    W = eigenspace(M, lam) & eigenspace(adjoint(M, form), mu)
    if not W.basis:
        raise FactorizationFailed("pair root without a common eigenvector")
    return W.basis[0]
