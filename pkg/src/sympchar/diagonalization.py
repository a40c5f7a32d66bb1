"""Symplectic diagonalization and the symplectic similarity decision.

A symplectically normal, diagonalizable ``M`` has a symplectic eigenbasis
``(e_1..e_n, f_1..f_n)`` with ``M e_i = lam_i e_i`` and ``M f_i = mu_i f_i``,
and the pairs ``{lam_i, mu_i}`` are read off ``chi_M``.  Two such maps are
symplectically similar exactly when their ``chi`` agree; the witness is a
composition of the two eigenbases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eigenstructure import sympl_pair_decomposition
from .errors import (
    EqualPairValues,
    NotDiagonalizable,
    NotSymplecticallyDiagonalizable,
    NotSymplecticallyNormal,
    RepeatedPairFactor,
)
from .matrix import Matrix, eigenspace, inverse, is_diagonalizable
from .scp import scp, scp_factor_pairs
from .symplectic import (
    SymplecticBasis,
    SymplecticForm,
    adjoint,
    form_for,
    is_symplectically_normal,
    lagrangian_complete,
    restrict_form,
    restrict_map,
    symplectic_basis,
)

__all__ = [
    "SymplecticDiagonalization",
    "symplectic_diagonalize",
    "symplectically_similar",
    "normal_pair_basis",
    "distinct_pair_eigenbasis",
]


@dataclass(frozen=True)
class SymplecticDiagonalization:
    """Symplectic basis (columns ``e_1..e_n, f_1..f_n``) diagonalizing ``M``.

    ``basis.matrix^{-1} M basis.matrix = diag(lam_1..lam_n, mu_1..mu_n)``.
    """

    basis: SymplecticBasis
    pairs: tuple[tuple[Fraction, Fraction], ...]

    @property
    def P(self) -> Matrix:
        return self.basis.matrix

    def diagonal(self) -> Matrix:
        return Matrix.diag([lam for lam, _ in self.pairs] + [mu for _, mu in self.pairs])


def _require_normal(M: Matrix, form: SymplecticForm) -> None:
    if not is_symplectically_normal(M, form):
        raise NotSymplecticallyNormal("M does not commute with its symplectic adjoint")


def symplectic_diagonalize(M: Matrix, form: SymplecticForm | None = None) -> SymplecticDiagonalization:
    """Symplectic eigenbasis of a symplectically normal diagonalizable ``M``.

    Works one pair space ``W`` at a time, in coordinates of ``W``: for
    ``lam != mu`` the eigenspaces ``E_M(lam) & E_{M*}(mu)`` and
    ``E_M(mu) & E_{M*}(lam)`` are transverse Lagrangians of ``W`` and are
    completed to a symplectic basis; for ``lam == mu``, ``M|_W = lam E`` and any
    symplectic basis of ``W`` will do.
    """
    form = form_for(M, form)
    _require_normal(M, form)
    if not is_diagonalizable(M):
        raise NotDiagonalizable("M is not diagonalizable over Q")
    decomp = sympl_pair_decomposition(M, form)
    es, fs, pairs = [], [], []
    for (lam, mu, m), W in zip(decomp.pairs, decomp.spaces):
        B = W.matrix()
        form_w = restrict_form(form, W)
        M_w = restrict_map(M, W)
        if lam == mu:
            if M_w != Matrix.scalar(M_w.nrows, lam):
                raise NotDiagonalizable(f"M is not scalar on the pair space of {lam}")
            local = symplectic_basis(form_w)
        else:
            adj_w = adjoint(M_w, form_w)
            L1 = eigenspace(M_w, lam) & eigenspace(adj_w, mu)
            L2 = eigenspace(M_w, mu) & eigenspace(adj_w, lam)
            local = lagrangian_complete(L1, L2, form_w)
        es += (B @ Matrix.from_columns(local.e)).columns()
        fs += (B @ Matrix.from_columns(local.f)).columns()
        pairs += [(lam, mu)] * m
    basis = SymplecticBasis(Matrix.from_columns(es + fs))
    result = SymplecticDiagonalization(basis, tuple(pairs))
    assert M @ result.P == result.P @ result.diagonal()
    return result


def _diagonalize_or_refuse(M: Matrix, form: SymplecticForm) -> SymplecticDiagonalization:
    try:
        return symplectic_diagonalize(M, form)
    except (NotSymplecticallyNormal, NotDiagonalizable) as exc:
        raise NotSymplecticallyDiagonalizable(str(exc)) from exc


def symplectically_similar(
    M: Matrix, N: Matrix, form: SymplecticForm | None = None
) -> tuple[bool, Matrix | None]:
    """Decide whether ``P^{-1} M P = N`` for some ``P`` preserving the form.

    Both maps must be symplectically diagonalizable.  Returns the verdict and,
    when similar, a witness ``P`` (checked before it is returned).
    """
    form = form_for(M, form)
    form_for(N, form)
    dm = _diagonalize_or_refuse(M, form)
    dn = _diagonalize_or_refuse(N, form)
    if scp(M, form) != scp(N, form):
        return False, None
    # both pair sequences are in canonical order, so the diagonals agree
    assert dm.pairs == dn.pairs
    P = dm.P @ inverse(dn.P)
    G = form.gram
    assert P.T @ G @ P == G
    assert M @ P == P @ N
    return True, P


def _distinct_factors(M: Matrix, form: SymplecticForm):
    fac = scp_factor_pairs(scp(M, form))
    if any(m > 1 for _, _, m in fac.factors):
        raise RepeatedPairFactor("chi_M has a repeated pair factor")
    return fac


def normal_pair_basis(
    M: Matrix, form: SymplecticForm | None = None
) -> tuple[SymplecticBasis, tuple[tuple[Fraction, Fraction], ...]]:
    """Symplectic basis on which ``M M*`` and ``M + M*`` are diagonal.

    Needs symplectic normality and ``n`` pairwise distinct pair factors; ``M``
    itself may fail to be diagonalizable.  Each pair space is a symplectic
    plane and any symplectic basis of it works.
    """
    form = form_for(M, form)
    _require_normal(M, form)
    _distinct_factors(M, form)
    decomp = sympl_pair_decomposition(M, form)
    es, fs = [], []
    for W in decomp.spaces:
        w1, w2 = W.basis
        c = form(w1, w2)
        es.append(w1)
        fs.append(tuple(x / c for x in w2))
    pairs = tuple((lam, mu) for lam, mu, _ in decomp.pairs)
    return SymplecticBasis(Matrix.from_columns(es + fs)), pairs


def distinct_pair_eigenbasis(M: Matrix, form: SymplecticForm | None = None) -> SymplecticDiagonalization:
    """Symplectic basis with ``M e_i = lam_i e_i``, ``M* e_i = mu_i e_i``,
    ``M f_i = mu_i f_i``, ``M* f_i = lam_i f_i`` when all pair factors are
    distinct and ``lam_i != mu_i``."""
    form = form_for(M, form)
    _require_normal(M, form)
    fac = _distinct_factors(M, form)
    if any(lam == mu for lam, mu, _ in fac.factors):
        raise EqualPairValues("some pair factor has lam == mu")
    Madj = adjoint(M, form)
    es, fs = [], []
    for lam, mu, _ in fac.factors:
        e = (eigenspace(M, lam) & eigenspace(Madj, mu)).basis[0]
        f = (eigenspace(M, mu) & eigenspace(Madj, lam)).basis[0]
        c = form(e, f)
        es.append(e)
        fs.append(tuple(x / c for x in f))
    pairs = tuple((lam, mu) for lam, mu, _ in fac.factors)
    return SymplecticDiagonalization(SymplecticBasis(Matrix.from_columns(es + fs)), pairs)
