import random
from fractions import Fraction as F

import pytest

from gen import rand_invertible, rand_matrix
from sympchar.errors import DegenerateForm, NotAlternating, NotTransverse
from sympchar.matrix import Matrix, Subspace, det
from sympchar.symplectic import (
    SymplecticForm,
    adjoint,
    classify_subspace,
    is_self_adjoint,
    is_symplectic_map,
    is_symplectically_normal,
    lagrangian_complete,
    perp,
    pf_omega,
    random_symplectic,
    standard_form,
    symplectic_basis,
)

J1 = standard_form(1)
J2 = standard_form(2)


def unit(i, dim=4):
    return tuple(int(i == k) for k in range(dim))


e1, e2, f1, f2 = unit(0), unit(1), unit(2), unit(3)


def test_standard_form():
    assert J1.gram == Matrix([[0, 1], [-1, 0]])
    assert J2.gram == Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    assert J2(e1, f1) == 1 and J2(f1, e1) == -1 and J2(e1, f2) == 0


def test_form_validation():
    with pytest.raises(NotAlternating):
        SymplecticForm(Matrix([[0, 1], [1, 0]]))
    with pytest.raises(DegenerateForm):
        SymplecticForm(Matrix.zeros(2))


def test_adjoint_examples():
    assert adjoint(Matrix([[1, 2], [3, 4]])) == Matrix([[4, -2], [-3, 1]])
    assert adjoint(Matrix.identity(4)) == Matrix.identity(4)
    assert adjoint(Matrix.diag([1, 2, 3, 4])) == Matrix.diag([3, 4, 1, 2])


def test_adjoint_block_formula():
    rng = random.Random(0)
    M = rand_matrix(4, rng)
    A, B = M.submatrix([0, 1], [0, 1]), M.submatrix([0, 1], [2, 3])
    C, D = M.submatrix([2, 3], [0, 1]), M.submatrix([2, 3], [2, 3])
    assert adjoint(M) == Matrix.block([[D.T, -B.T], [-C.T, A.T]])


def test_adjoint_defining_identity():
    rng = random.Random(1)
    G = rand_invertible(4, rng)
    form = SymplecticForm(G.T @ J2.gram @ G)
    for _ in range(5):
        M = rand_matrix(4, rng)
        Ms = adjoint(M, form)
        assert adjoint(Ms, form) == M
        for _ in range(3):
            v, w = [rng.randint(-3, 3) for _ in range(4)], [rng.randint(-3, 3) for _ in range(4)]
            assert form(M.apply(v), w) == form(v, Ms.apply(w))


def test_symplectic_basis_examples():
    assert symplectic_basis(J2).matrix == Matrix.identity(4)
    b = symplectic_basis(SymplecticForm(Matrix([[0, 2], [-2, 0]])))
    assert b.e == [(1, 0)] and b.f == [(0, F(1, 2))]


def test_symplectic_basis_random_congruence():
    rng = random.Random(2)
    for _ in range(10):
        B = rand_invertible(4, rng)
        form = SymplecticForm(B.T @ J2.gram @ B)
        assert symplectic_basis(form).gram(form) == J2.gram


def test_perp_examples():
    assert perp(Subspace.span(2, [(1, 0)]), J1) == Subspace.span(2, [(1, 0)])
    assert len(perp(Subspace.whole(4), J2)) == 0
    assert perp(Subspace.span(4, [e1, f1]), J2) == Subspace.span(4, [e2, f2])


def test_perp_dimension():
    rng = random.Random(3)
    for k in range(5):
        W = Subspace.span(4, [[rng.randint(-2, 2) for _ in range(4)] for _ in range(k)])
        P = perp(W, J2)
        assert len(W) + len(P) == 4
        assert perp(P, J2) == W


def test_classify():
    assert classify_subspace(Subspace.span(4, [e1, f1]), J2) == "symplectic"
    assert classify_subspace(Subspace.span(4, [e1, e2]), J2) == "lagrangian"
    assert classify_subspace(Subspace.span(4, [e1]), J2) == "isotropic"
    assert classify_subspace(Subspace.span(4, [e1, e2, f1]), J2) == "coisotropic"


def test_lagrangian_complete_examples():
    b = lagrangian_complete(Subspace.span(4, [e1, e2]), Subspace.span(4, [f1, f2]), J2)
    assert b.f == [f1, f2]
    b = lagrangian_complete(Subspace.span(2, [(1, 0)]), Subspace.span(2, [(1, 1)]), J1)
    assert b.f == [(1, 1)] and J1(b.e[0], b.f[0]) == 1
    L = Subspace.span(4, [e1, e2])
    with pytest.raises(NotTransverse):
        lagrangian_complete(L, L, J2)


def test_symplectic_map_examples():
    assert is_symplectic_map(Matrix.identity(2))
    assert is_symplectic_map(Matrix.diag([2, F(1, 2)]))
    assert not is_symplectic_map(Matrix.diag([2, 2]))


def test_normality_examples():
    assert is_symplectically_normal(Matrix.diag([1, 2, 3, 4]))
    assert is_symplectically_normal(Matrix.identity(4))
    # every 2x2 matrix M has M M* = det(M) E, so it is normal for n = 1
    M = Matrix([[1, 1], [0, 1]])
    assert M @ adjoint(M) == Matrix.scalar(2, det(M))
    assert is_symplectically_normal(M)
    assert not is_symplectically_normal(Matrix([[1, 1, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4]]))


def test_pf_omega_examples():
    assert pf_omega(Matrix.identity(4)) == 1
    assert pf_omega(Matrix.scalar(2, 2)) == 2
    M = Matrix.diag([1, 2, 3, 4])
    assert pf_omega(M @ adjoint(M)) == 24 == det(M)


def test_pf_omega_square_is_det():
    rng = random.Random(4)
    for _ in range(10):
        M = rand_matrix(4, rng)
        A = M @ adjoint(M)
        assert is_self_adjoint(A)
        assert pf_omega(A) ** 2 == det(A)
        assert pf_omega(A) == det(M)


def test_random_symplectic():
    P = random_symplectic(1, 5)
    assert det(P) == 1 and P.T @ J1.gram @ P == J1.gram
    assert random_symplectic(2, 9) == random_symplectic(2, 9)
    for seed in range(20):
        for n in (1, 2, 3):
            assert is_symplectic_map(random_symplectic(n, seed))
