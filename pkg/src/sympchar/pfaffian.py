"""Pfaffians of alternating matrices.

Over a field the Pfaffian is computed by skew elimination: simultaneous
row/column operations with unit determinant leave it unchanged, and a
transposition of two indices flips its sign.  Polynomial matrices over
Q[s, t] go through evaluation on an integer grid and interpolation.
"""

from __future__ import annotations

from .errors import DegreeBoundExceeded, NotAlternating, OddSize, ScalarKindMismatch
from .matrix import FIELD_KINDS, Matrix, _ONE, _ZERO
from .scalars import BiPoly, bipoly_interpolate2d

__all__ = ["is_alternating", "pfaffian_field", "pfaffian_bipoly", "pfaffian_expand"]


def is_alternating(A: Matrix) -> bool:
    if not A.is_square():
        return False
    n = A.nrows
    rows = A.rows
    for i in range(n):
        if rows[i][i]:
            return False
        for j in range(i + 1, n):
            if rows[i][j] != -rows[j][i]:
                return False
    return True


def _check(A: Matrix) -> None:
    if A.nrows % 2 or A.ncols % 2:
        raise OddSize(f"Pfaffian needs even size, got {A.shape}")
    if not is_alternating(A):
        raise NotAlternating("matrix is not alternating")


def pfaffian_field(A: Matrix):
    """Pfaffian of an alternating matrix over Q or Q(s)."""
    _check(A)
    if A.kind not in FIELD_KINDS:
        raise ScalarKindMismatch(f"pfaffian_field needs field entries, got {A.kind}")
    n = A.nrows
    a = [list(r) for r in A.rows]
    result = _ONE[A.kind]
    for k in range(0, n - 1, 2):
        p = next((j for j in range(k + 1, n) if a[k][j]), None)
        if p is None:
            return _ZERO[A.kind]
        if p != k + 1:
            q = k + 1
            a[q], a[p] = a[p], a[q]
            for row in a:
                row[q], row[p] = row[p], row[q]
            result = -result
        piv = a[k][k + 1]
        result = result * piv
        # congruence L A L^T with L = E - sum_i c_i e_i e_{k+1}^T clears row/col k
        c = [None] * n
        for i in range(k + 2, n):
            if a[k][i]:
                c[i] = a[k][i] / piv
        r1 = a[k + 1]
        for i in range(k + 2, n):
            ci = c[i]
            ai = a[i]
            ai1 = ai[k + 1]
            for j in range(i + 1, n):
                cj = c[j]
                v = ai[j]
                if ci is not None and r1[j]:
                    v = v - ci * r1[j]
                if cj is not None and ai1:
                    v = v - cj * ai1
                ai[j] = v
                a[j][i] = -v
    return result


def pfaffian_expand(A: Matrix):
    """Pfaffian by recursive expansion along the first row (exponential time)."""
    _check(A)
    return _expand(A.rows, tuple(range(A.nrows)), _ONE[A.kind], _ZERO[A.kind])


def _expand(rows, idx: tuple, one, zero):
    if not idx:
        return one
    i = idx[0]
    acc = zero
    sign = 1
    for pos in range(1, len(idx)):
        j = idx[pos]
        if rows[i][j]:
            rest = idx[1:pos] + idx[pos + 1:]
            term = rows[i][j] * _expand(rows, rest, one, zero)
            acc = acc + term if sign > 0 else acc - term
        sign = -sign
    return acc


def pfaffian_bipoly(A: Matrix, bounds: tuple[int, int] | None = None) -> BiPoly:
    """Pfaffian of an alternating matrix over Q[s, t].

    ``bounds`` are per-entry degree bounds ``(d_s, d_t)``; when omitted they are
    read off the entries.  The Pfaffian has degrees at most ``bounds * size/2``,
    so it is sampled on that integer grid and interpolated.
    """
    if A.kind in ("rational", "unipoly"):
        A = A.to_kind("bipoly")
    if A.kind != "bipoly":
        raise ScalarKindMismatch(f"pfaffian_bipoly needs Q[s,t] entries, got {A.kind}")
    _check(A)
    actual = (
        max(x.deg_s for r in A.rows for x in r),
        max(x.deg_t for r in A.rows for x in r),
    )
    if bounds is None:
        bounds = (max(actual[0], 0), max(actual[1], 0))
    elif actual[0] > bounds[0] or actual[1] > bounds[1]:
        raise DegreeBoundExceeded(f"entry degrees {actual} exceed bounds {tuple(bounds)}")
    half = A.nrows // 2
    d_s, d_t = bounds[0] * half, bounds[1] * half
    values = [
        [pfaffian_field(A.evaluate(sv, tv)) for tv in range(d_t + 1)]
        for sv in range(d_s + 1)
    ]
    return bipoly_interpolate2d(values, (d_s, d_t))
