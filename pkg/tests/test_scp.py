import random
from fractions import Fraction as F

import pytest

from gen import conjugate, rand_matrix, self_adjoint_pair
from sympchar.errors import FactorizationFailed, NonSplitSpectrum, NotSelfAdjoint, RelationNotSatisfied
from sympchar.matrix import Matrix, apply_poly, charpoly, det, two_endo_charpoly
from sympchar.scalars import BiPoly, UniPoly
from sympchar.scp import PairFactorization, psi, scp, scp_factor_pairs, scp_special_square
from sympchar.symplectic import adjoint, pf_omega, random_symplectic

S, T = BiPoly.s(), BiPoly.t()
t = UniPoly.x("t")
DIAG4 = Matrix.diag([1, 2, 3, 4])
DIAG4_CHI = BiPoly.pair_factor(1, 3) * BiPoly.pair_factor(2, 4)


def test_psi_examples():
    assert psi(Matrix.scalar(2, 2)) == 2 - t
    A = DIAG4 @ adjoint(DIAG4)
    assert A == Matrix.diag([3, 8, 3, 8])
    assert psi(A) == (3 - t) * (8 - t)
    assert apply_poly(psi(A), A).is_zero()
    with pytest.raises(NotSelfAdjoint):
        psi(Matrix([[1, 1], [0, 2]]))


def test_scp_examples():
    assert scp(Matrix.diag([1, 2])) == BiPoly.pair_factor(1, 2)
    assert scp(DIAG4) == DIAG4_CHI
    assert scp(Matrix([[0, 1], [0, 0]])) == S * S - T


def test_scp_definition_route():
    """Pullback-Gram computation against ``Pf_omega((M - s)(M* - s) - t)``."""
    rng = random.Random(0)
    for n in (1, 2):
        for _ in range(4):
            M = rand_matrix(2 * n, rng)
            s = Matrix.scalar(2 * n, UniPoly.x("s"), "unipoly")
            X = (M.to_kind("unipoly") - s) @ (adjoint(M).to_kind("unipoly") - s)
            A = X.to_kind("bipoly") - Matrix.scalar(2 * n, T, "bipoly")
            assert pf_omega(A, bounds=(2, 1)) == scp(M).value


def test_scp_pointwise():
    """chi(s0, t0) is the Pfaffian of the shifted product at a rational point."""
    rng = random.Random(1)
    M = rand_matrix(4, rng)
    Ms = adjoint(M)
    chi = scp(M)
    for s0, t0 in [(0, 0), (F(1, 2), -3), (2, 7)]:
        E = Matrix.identity(4)
        A = (M - E * s0) @ (Ms - E * s0) - E * t0
        assert chi(s0, t0) == pf_omega(A)


def test_scp_leading_and_constant():
    rng = random.Random(2)
    for n in (1, 2, 3):
        M = rand_matrix(2 * n, rng)
        chi = scp(M)
        assert chi.coefficient(n) == (-1) ** n
        assert chi.value.subs_t(0) == charpoly(M).with_var("s")
        assert chi.value.subs_s(0) == psi(M @ adjoint(M))


def test_factor_examples():
    fac = scp_factor_pairs(DIAG4_CHI)
    assert fac.factors == ((1, 3, 1), (2, 4, 1))
    assert str(fac) == "((1-s)*(3-s)-t)*((2-s)*(4-s)-t)"
    fac = scp_factor_pairs(scp(Matrix.identity(4)))
    assert fac.factors == ((1, 1, 2),)
    with pytest.raises(FactorizationFailed):
        scp_factor_pairs(S**4 - (1 + 2 * S**2) * T + T**2)
    with pytest.raises(NonSplitSpectrum):
        scp_factor_pairs(scp(Matrix([[0, -1], [1, 0]])))


def test_factor_recovers_planted_pairs():
    rng = random.Random(3)
    for seed in range(10):
        n = 1 + seed % 3
        lam = [F(rng.randint(-3, 3), rng.choice((1, 2))) for _ in range(2 * n)]
        M = conjugate(Matrix.diag(lam), random_symplectic(n, seed))
        fac = scp_factor_pairs(scp(M))
        assert fac.product() == scp(M).value
        expected = sorted(tuple(sorted((lam[i], lam[n + i]))) for i in range(n))
        assert sorted(fac.pairs()) == expected


def test_negative_pair_rendering():
    fac = PairFactorization(((F(-1), F(1, 2), 1),))
    assert str(fac) == "((-1-s)*(1/2-s)-t)"


def test_special_square_examples():
    E = Matrix.identity(2)
    assert scp_special_square(E, kind="self-adjoint") == ((1 - S) ** 2 - T) ** 2
    R = Matrix([[0, 1], [-1, 0]])
    assert adjoint(R) == -R
    assert scp_special_square(R, kind="anti-self-adjoint") == (S * S - T + 1) ** 2
    assert scp(R).value ** 2 == (S * S - T + 1) ** 2
    D = Matrix.diag([2, F(1, 2)])
    assert scp_special_square(D, kind="symplectic") == BiPoly.pair_factor(2, F(1, 2)) ** 2
    with pytest.raises(RelationNotSatisfied):
        scp_special_square(Matrix([[1, 1], [0, 2]]), kind="self-adjoint")


def test_special_squares_random():
    rng = random.Random(4)
    for n in (1, 2):
        A, B = self_adjoint_pair(n, rng)
        for X in (A, B):
            assert scp(X).value ** 2 == scp_special_square(X, kind="self-adjoint")
        M = rand_matrix(2 * n, rng)
        K = M - adjoint(M)
        assert scp(K).value ** 2 == scp_special_square(K, kind="anti-self-adjoint")
        P = random_symplectic(n, rng.randint(0, 10**6))
        assert scp(P).value ** 2 == scp_special_square(P, kind="symplectic")


def test_square_is_two_endo_charpoly():
    rng = random.Random(5)
    for n in (1, 2):
        M = rand_matrix(2 * n, rng)
        assert scp(M).value ** 2 == two_endo_charpoly(M, adjoint(M))


def test_psi_square_is_charpoly():
    rng = random.Random(6)
    for n in (1, 2, 3):
        A, B = self_adjoint_pair(n, rng)
        for X in (A, B):
            assert psi(X) ** 2 == charpoly(X)
            assert psi(X)(0) == pf_omega(X)
    M = rand_matrix(4, rng)
    assert psi(M @ adjoint(M))(0) == det(M)
