"""The Pfaffian characteristic polynomial ``psi_A(t)`` of a self-adjoint map and
the symplectic characteristic polynomial ``chi_M(s, t)``.

``chi_M(s, t)`` is the Pfaffian, in an interleaved symplectic basis, of the
alternating form ``(v, w) -> omega((M - s)v, (M - s)w) - t*omega(v, w)``.
It is a polynomial of degree ``n`` in ``t`` and ``2n`` in ``s`` whose square is
the characteristic polynomial of ``(M - sE)(M* - sE)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import (
    FactorizationFailed,
    NonSplitSpectrum,
    NotAFactor,
    NotSelfAdjoint,
    RelationNotSatisfied,
)
from .matrix import Matrix, charpoly, inverse
from .pfaffian import pfaffian_bipoly
from .scalars import BiPoly, UniPoly, bipoly_div_exact, upoly_rational_roots
from .symplectic import (
    SymplecticForm,
    adjoint,
    form_for,
    is_self_adjoint,
    is_symplectic_map,
    pf_omega,
    symplectic_basis,
)

__all__ = [
    "ScpPolynomial",
    "PairFactorization",
    "psi",
    "scp",
    "scp_factor_pairs",
    "scp_special_square",
    "pair_factor_string",
]


@dataclass(frozen=True)
class ScpPolynomial:
    """``chi_M(s, t)`` together with the half-dimension ``n``."""

    value: BiPoly
    n: int

    def __post_init__(self):
        if self.value.deg_t != self.n:
            raise ValueError(f"t-degree {self.value.deg_t} differs from n = {self.n}")
        if self.value.coefficient(self.n) != (-1) ** self.n:
            raise ValueError("coefficient of t^n must be (-1)^n")

    def coefficient(self, k: int) -> UniPoly:
        """``a_k(s)``, the coefficient of ``t**k``."""
        return self.value.coefficient(k)

    def __call__(self, s, t):
        return self.value(s, t)

    def __eq__(self, other):
        if isinstance(other, ScpPolynomial):
            return self.value == other.value
        if isinstance(other, BiPoly):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)


def pair_factor_string(lam: Fraction, mu: Fraction) -> str:
    def lin(x: Fraction) -> str:
        return f"({x}-s)" if x >= 0 else f"(-{-x}-s)"

    return f"({lin(lam)}*{lin(mu)}-t)"


@dataclass(frozen=True)
class PairFactorization:
    """``chi = prod {(lam_i - s)(mu_i - s) - t}^{m_i}`` with ``lam_i <= mu_i``,
    factors in ascending lexicographic order."""

    factors: tuple[tuple[Fraction, Fraction, int], ...]

    def product(self) -> BiPoly:
        p = BiPoly((1,))
        for lam, mu, m in self.factors:
            p = p * BiPoly.pair_factor(lam, mu) ** m
        return p

    def pairs(self) -> list[tuple[Fraction, Fraction]]:
        """Pairs repeated according to multiplicity."""
        return [(lam, mu) for lam, mu, m in self.factors for _ in range(m)]

    def __str__(self):
        parts = []
        for lam, mu, m in self.factors:
            f = pair_factor_string(lam, mu)
            parts.append(f if m == 1 else f"{f}^{m}")
        return "*".join(parts) if parts else "1"


def psi(A: Matrix, form: SymplecticForm | None = None) -> UniPoly:
    """``psi_A(t) = Pf_omega(omega_{A - tE})`` for self-adjoint ``A``."""
    form = form_for(A, form)
    if not is_self_adjoint(A, form):
        raise NotSelfAdjoint("psi is defined for self-adjoint maps only")
    n = A.nrows
    shifted = A.to_kind("unipoly") - Matrix.scalar(n, UniPoly.x("t"), "unipoly")
    return pf_omega(shifted, form=form, bounds=(0, 1))


def scp(M: Matrix, form: SymplecticForm | None = None) -> ScpPolynomial:
    """Symplectic characteristic polynomial ``chi_M(s, t)``."""
    form = form_for(M, form)
    V = symplectic_basis(form).interleaved()
    dim = M.nrows
    X = (M.to_kind("unipoly") - Matrix.scalar(dim, UniPoly.x("s"), "unipoly")) @ V
    pulled = (X.T @ form.gram @ X).to_kind("bipoly")
    J = (V.T @ form.gram @ V).to_kind("bipoly")
    omega = pulled - J * BiPoly.t()
    return ScpPolynomial(pfaffian_bipoly(omega, (2, 1)), dim // 2)


def _factor_pairs(p: BiPoly) -> PairFactorization:
    base = p.subs_t(0)
    roots, splits = upoly_rational_roots(base)
    if not splits:
        raise NonSplitSpectrum("chi(s, 0) does not split over Q")
    if base.degree != 2 * p.deg_t:
        raise FactorizationFailed("s-degree of chi(s, 0) is not twice the t-degree")
    avail = dict(roots)
    values = sorted(avail)
    rest = p
    factors = []
    for i, lam in enumerate(values):
        for mu in values[i:]:
            m = 0
            while avail[lam] >= (2 if lam == mu else 1) and avail[mu] >= 1:
                try:
                    rest = bipoly_div_exact(rest, BiPoly.pair_factor(lam, mu))
                except NotAFactor:
                    break
                avail[lam] -= 1
                avail[mu] -= 1
                m += 1
            if m:
                factors.append((lam, mu, m))
    if rest != 1:
        raise FactorizationFailed(
            f"not a product of pair factors (unresolved part: {rest})"
        )
    return PairFactorization(tuple(factors))


def scp_factor_pairs(chi: ScpPolynomial | BiPoly) -> PairFactorization:
    """Factor into ``(lam - s)(mu - s) - t`` factors with rational ``lam, mu``.

    Candidate pairs come from the rational roots of ``chi(s, 0)`` and are peeled
    off by exact division in canonical order; each candidate has degree one in
    ``t``, hence is irreducible, so greedy peeling is exact.
    """
    p = chi.value if isinstance(chi, ScpPolynomial) else chi
    return _factor_pairs(p)


def _compose(p: UniPoly, q: BiPoly) -> BiPoly:
    acc = BiPoly()
    for c in reversed(p.coeffs):
        acc = acc * q + c
    return acc


SpecialKind = Literal["self-adjoint", "anti-self-adjoint", "symplectic"]


def scp_special_square(
    M: Matrix, form: SymplecticForm | None = None, kind: SpecialKind = "self-adjoint"
) -> BiPoly:
    """Closed form of ``chi_M(s, t)**2`` when ``M* = M``, ``M* = -M`` or ``M* = M^{-1}``."""
    form = form_for(M, form)
    n = form.n
    s = BiPoly.s()
    t = BiPoly.t()
    if kind == "self-adjoint":
        if adjoint(M, form) != M:
            raise RelationNotSatisfied("M is not self-adjoint")
        phi = charpoly(M)
        # phi(s - u) phi(s + u) is even in u; u**2 becomes t
        u = t
        prod = _compose(phi, s - u) * _compose(phi, s + u)
        if any(prod.coefficient(k) for k in range(1, prod.deg_t + 1, 2)):
            raise RelationNotSatisfied("odd powers of sqrt(t) survived")
        return BiPoly([prod.coefficient(k) for k in range(0, prod.deg_t + 1, 2)])
    if kind == "anti-self-adjoint":
        if adjoint(M, form) != -M:
            raise RelationNotSatisfied("M is not anti-self-adjoint")
        return _compose(charpoly(M @ M), s * s - t)
    if kind == "symplectic":
        if not is_symplectic_map(M, form):
            raise RelationNotSatisfied("M does not preserve the form")
        phi = charpoly(M + inverse(M))
        w = s * s - t + 1
        acc = BiPoly()
        for k, c in enumerate(phi.coeffs):
            if c:
                acc = acc + (w**k) * (s ** (2 * n - k)) * c
        return acc
    raise ValueError(f"unknown relation kind {kind!r}")
