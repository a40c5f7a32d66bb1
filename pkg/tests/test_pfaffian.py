import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from gen import rand_alternating
from sympchar.errors import NotAlternating
from sympchar.matrix import Matrix, det
from sympchar.pfaffian import is_alternating, pfaffian_bipoly, pfaffian_expand, pfaffian_field
from sympchar.scalars import BiPoly


def test_small_examples():
    assert pfaffian_field(Matrix([[0, 1], [-1, 0]])) == 1
    J = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    assert pfaffian_field(J) == 1


def test_generic_4x4():
    a, b, c, d, e, f = 2, 3, 5, 7, 11, 13
    A = Matrix([[0, a, b, c], [-a, 0, d, e], [-b, -d, 0, f], [-c, -e, -f, 0]])
    assert pfaffian_field(A) == a * f - b * e + c * d == pfaffian_expand(A)


def test_odd_size_and_zero():
    assert pfaffian_field(Matrix.zeros(4)) == 0
    with pytest.raises(NotAlternating):
        pfaffian_field(Matrix([[1, 0], [0, 0]]))
    assert not is_alternating(Matrix([[0, 1], [1, 0]]))


def test_bipoly_examples():
    S, T = BiPoly.s(), BiPoly.t()
    # (M - s)*omega - t*omega for M = diag(1, 2) in the basis (e, f)
    entry = (1 - S) * (2 - S) - T
    A = Matrix([[0, entry], [-entry, 0]])
    assert pfaffian_bipoly(A, (2, 1)) == entry


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10**6))
def test_agrees_with_expansion(n, seed):
    A = rand_alternating(2 * n, random.Random(seed))
    assert pfaffian_field(A) == pfaffian_expand(A)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_square_is_det(n, seed):
    A = rand_alternating(2 * n, random.Random(seed))
    assert pfaffian_field(A) ** 2 == det(A)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10**6))
def test_congruence(n, seed):
    rng = random.Random(seed)
    A = rand_alternating(2 * n, rng)
    B = Matrix([[rng.randint(-2, 2) for _ in range(2 * n)] for _ in range(2 * n)])
    assert pfaffian_field(B @ A @ B.T) == det(B) * pfaffian_field(A)


def test_bipoly_matches_pointwise():
    rng = random.Random(7)
    S, T = BiPoly.s(), BiPoly.t()
    for _ in range(5):
        A0, A1, A2 = (rand_alternating(4, rng) for _ in range(3))
        A = A0.to_kind("bipoly") + A1.to_kind("bipoly") * S + A2.to_kind("bipoly") * T
        p = pfaffian_bipoly(A, (1, 1))
        for x, y in [(0, 0), (2, -1), (F(1, 3), 4)]:
            assert p(x, y) == pfaffian_field(A0 + A1 * x + A2 * y)
