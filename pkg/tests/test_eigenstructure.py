import random

import pytest

from gen import conjugate, rand_invertible
from sympchar.eigenstructure import (
    eigen_pair_witness,
    pair_decomposition,
    pair_space,
    product_sum_pair_space,
    ratfun_pair_space,
    ratfun_projections,
    sympl_pair_decomposition,
)
from sympchar.errors import NotCommuting, NotSymplecticallyNormal, RatFunDimensionExceeded
from sympchar.matrix import Matrix, Subspace, inverse
from sympchar.symplectic import adjoint, classify_subspace, random_symplectic, standard_form

DIAG4 = Matrix.diag([1, 2, 3, 4])
ADJ4 = Matrix.diag([3, 4, 1, 2])
E2, E4 = Matrix.identity(2), Matrix.identity(4)
e1, e2, f1, f2 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def test_pair_space_examples():
    assert adjoint(DIAG4) == ADJ4
    assert pair_space(DIAG4, ADJ4, 1, 3) == Subspace.span(4, [e1, f1])
    assert len(pair_space(DIAG4, ADJ4, 1, 4)) == 0
    assert pair_space(E4, E4, 1, 1) == Subspace.whole(4)


def test_product_sum_examples():
    assert product_sum_pair_space(DIAG4, ADJ4, 1, 3) == Subspace.span(4, [e1, f1])
    assert product_sum_pair_space(E4, E4, 1, 1) == Subspace.whole(4)
    with pytest.raises(NotCommuting):
        product_sum_pair_space(Matrix([[0, 1], [0, 0]]), Matrix([[0, 0], [1, 0]]), 0, 0)


def test_ratfun_pair_space_examples():
    W = ratfun_pair_space(DIAG4, ADJ4, 1, 3)
    assert W == Subspace.span(4, [e1, f1]).to_kind("ratfun")
    assert len(ratfun_pair_space(DIAG4, ADJ4, 1, 4)) == 0
    assert len(ratfun_pair_space(E4, E4, 1, 1)) == 4
    with pytest.raises(RatFunDimensionExceeded):
        ratfun_pair_space(DIAG4, ADJ4, 1, 3, max_dim=2)


def test_pair_decomposition_examples():
    d = pair_decomposition(DIAG4, ADJ4)
    assert d.spaces == (Subspace.span(4, [e1, f1]), Subspace.span(4, [e2, f2]))
    P1, P2 = d.projections
    assert P1 + P2 == E4 and P1 @ P2 == Matrix.zeros(4)
    d = pair_decomposition(E2, E2)
    assert d.projections == (E2,)
    d = pair_decomposition(Matrix.diag([1, 1]), Matrix.diag([1, 1]))
    assert d.pairs == ((1, 1, 2),) and d.projections == (E2,)


def test_ratfun_projections_examples():
    Q = ratfun_projections(DIAG4, ADJ4)
    assert Q[0].to_kind("rational") == Matrix.diag([1, 0, 1, 0])
    assert Q == [P.to_kind("ratfun") for P in pair_decomposition(DIAG4, ADJ4).projections]
    assert ratfun_projections(E4, E4)[0].to_kind("rational") == E4


def test_random_commuting_pair():
    rng = random.Random(0)
    B = rand_invertible(4, rng)
    M = conjugate(Matrix.diag([1, 2, 1, 3]), B)
    N = conjugate(Matrix.diag([2, 1, 0, 3]), B)
    d = pair_decomposition(M, N)
    Q = ratfun_projections(M, N)
    for (lam, mu, m), W, P, q in zip(d.pairs, d.spaces, d.projections, Q):
        assert product_sum_pair_space(M, N, lam, mu) == W
        assert len(ratfun_pair_space(M, N, lam, mu)) == len(W) == m
        assert q.to_kind("rational") == P
    assert sum(d.projections, Matrix.zeros(4)) == E4


def test_sympl_decomposition_examples():
    d = sympl_pair_decomposition(DIAG4)
    assert [(lam, mu) for lam, mu, _ in d.pairs] == [(1, 3), (2, 4)]
    assert d.spaces == (Subspace.span(4, [e1, f1]), Subspace.span(4, [e2, f2]))
    d = sympl_pair_decomposition(E4)
    assert d.pairs == ((1, 1, 2),) and d.spaces == (Subspace.whole(4),)
    with pytest.raises(NotSymplecticallyNormal):
        sympl_pair_decomposition(Matrix([[1, 1, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4]]))


def test_sympl_decomposition_conjugated():
    J = standard_form(2)
    for seed in range(5):
        P = random_symplectic(2, seed)
        M = conjugate(DIAG4, P)
        d = sympl_pair_decomposition(M)
        assert [(lam, mu) for lam, mu, _ in d.pairs] == [(1, 3), (2, 4)]
        Pinv = inverse(P)
        for W, base in zip(d.spaces, ([e1, f1], [e2, f2])):
            assert W == Subspace.span(4, [Pinv.apply(v) for v in base])
            assert classify_subspace(W, J) == "symplectic"
        W1, W2 = d.spaces
        assert all(J(v, w) == 0 for v in W1.basis for w in W2.basis)


def test_eigen_pair_witness_examples():
    J = standard_form(2)
    v = eigen_pair_witness(DIAG4, J, 1, 3)
    assert Subspace.span(4, [v]) == Subspace.span(4, [e1])
    assert eigen_pair_witness(DIAG4, J, 1, 2) is None
    v = eigen_pair_witness(E4, J, 1, 1)
    assert any(v)
