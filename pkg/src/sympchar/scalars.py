"""Exact scalars: rationals, polynomials in ``s`` or ``t``, polynomials in
``(s, t)`` and the rational function field Q(s).

Rationals are :class:`fractions.Fraction`.  The polynomial types are small
immutable dense containers; degrees in this library stay low (at most a few
dozen), so nothing fancier than schoolbook arithmetic is needed.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from sympy import divisors

from .errors import (
    BothZero,
    DegreeBoundExceeded,
    DivisionByZeroPoly,
    DuplicateNode,
    InsufficientNodes,
    NotAFactor,
    ScalarKindMismatch,
    ZeroDenominator,
    ZeroPolynomial,
)

__all__ = [
    "Fraction",
    "UniPoly",
    "BiPoly",
    "RatFun",
    "upoly_divrem",
    "upoly_gcd",
    "upoly_rational_roots",
    "upoly_interpolate",
    "bipoly_div_exact",
    "bipoly_interpolate2d",
    "ratfun_normalize",
    "to_fraction",
]


def to_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, _RationalABC, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _is_number(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _strip(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_terms(terms: Iterable[tuple[Fraction, str]]) -> str:
    """Join ``(coefficient, monomial)`` pairs into ``a*x^2 - x + 1/2`` form."""
    out = []
    for c, mono in terms:
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _fmt_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_rational(a)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


class UniPoly:
    """Polynomial in one variable (``'s'`` or ``'t'``) with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``var**k``.  The zero polynomial has an
    empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        if var not in ("s", "t"):
            raise ValueError(f"unknown variable {var!r}")
        self.var = var
        self.coeffs = _strip([to_fraction(c) for c in coeffs])

    @classmethod
    def const(cls, c, var: str = "t") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def x(cls, var: str = "t") -> "UniPoly":
        return cls((0, 1), var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "t") -> "UniPoly":
        """Return prod (r - var), the sign convention of det(M - var*E)."""
        p = cls((1,), var)
        for r in roots:
            p = p * cls((to_fraction(r), -1), var)
        return p

    # basic queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coefficient(0)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        a = self.coeffs[-1]
        return UniPoly([c / a for c in self.coeffs], self.var)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0) if _is_number(x) else x * 0
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def compose(self, q: "UniPoly") -> "UniPoly":
        acc = UniPoly((), q.var)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise ScalarKindMismatch(
                    f"cannot combine polynomials in {self.var} and {other.var}"
                )
            return other
        if _is_number(other):
            return UniPoly((other,), self.var)
        return NotImplemented

    def _var_with(self, other: "UniPoly") -> str:
        return self.var if self.degree > 0 or other.degree <= 0 else other.var

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = [
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        ]
        return UniPoly(out, self._var_with(other))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if _is_number(other):
            c = to_fraction(other)
            return UniPoly([c * a for a in self.coeffs], self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly((), self._var_with(other))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out, self._var_with(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly((1,), self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if _is_number(other):
            c = to_fraction(other)
            if c == 0:
                raise DivisionByZeroPoly("division by zero")
            return UniPoly([a / c for a in self.coeffs], self.var)
        if isinstance(other, UniPoly) and other.is_constant():
            return self / other.constant_value()
        return NotImplemented

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return upoly_divrem(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if _is_number(other):
            return self.degree <= 0 and self.coefficient(0) == other
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        return self.degree <= 0 or self.var == other.var

    def __hash__(self):
        if self.degree <= 0:
            return hash(self.coefficient(0))
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"UniPoly({[_fmt_rational(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self):
        terms = [
            (c, _power(self.var, k))
            for k, c in reversed(list(enumerate(self.coeffs)))
            if c
        ]
        return _render_terms(terms)


def upoly_divrem(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Euclidean division: ``a = b*q + r`` with ``deg r < deg b``."""
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    if a.degree > 0 and b.degree > 0 and a.var != b.var:
        raise ScalarKindMismatch("polynomials in different variables")
    var = a.var if a.degree > 0 else b.var
    r = list(a.coeffs)
    db = b.degree
    lb = b.coeffs[-1]
    if len(r) - 1 < db:
        return UniPoly((), var), UniPoly(r, var)
    q = [Fraction(0)] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        c = c / lb
        q[k - db] = c
        for j, bc in enumerate(b.coeffs):
            r[k - db + j] -= c * bc
    return UniPoly(q, var), UniPoly(r[:db], var)


def upoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, upoly_divrem(a, b)[1].monic()
    return a.monic()


def _primitive_integer_coeffs(p: UniPoly) -> list[int]:
    from math import gcd, lcm

    den = 1
    for c in p.coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]


def upoly_rational_roots(p: UniPoly) -> tuple[dict[Fraction, int], bool]:
    """Rational roots of ``p`` with multiplicities, and whether ``p`` splits over Q.

    Candidates come from the rational root theorem applied to the primitive
    integer form; each multiplicity is certified by repeated exact division.
    """
    if not p:
        raise ZeroPolynomial("the zero polynomial has every root")
    roots: dict[Fraction, int] = {}
    q = p
    k = 0
    while q.coeffs[0] == 0:
        q = UniPoly(q.coeffs[1:], q.var)
        k += 1
    if k:
        roots[Fraction(0)] = k
    if q.degree > 0:
        ints = _primitive_integer_coeffs(q)
        nums = divisors(abs(ints[0]))
        dens = divisors(abs(ints[-1]))
        candidates = sorted(
            {Fraction(sgn * a, b) for a in nums for b in dens for sgn in (1, -1)}
        )
        for r in candidates:
            linear = UniPoly((-r, 1), q.var)
            m = 0
            while q.degree > 0:
                quo, rem = upoly_divrem(q, linear)
                if rem:
                    break
                q = quo
                m += 1
            if m:
                roots[r] = m
            if q.degree <= 0:
                break
    splits = sum(roots.values()) == p.degree
    return dict(sorted(roots.items())), splits


def _check_nodes(nodes: Sequence[Fraction]) -> None:
    if len(set(nodes)) != len(nodes):
        raise DuplicateNode(f"interpolation nodes are not distinct: {list(nodes)}")


def upoly_interpolate(nodes: Sequence, values: Sequence, var: str = "t") -> UniPoly:
    """Unique polynomial of degree < len(nodes) through the given samples."""
    nodes = [to_fraction(x) for x in nodes]
    values = [v if isinstance(v, UniPoly) else to_fraction(v) for v in values]
    if len(nodes) != len(values):
        raise InsufficientNodes("node and value counts differ")
    _check_nodes(nodes)
    # Newton divided differences, then expand in the monomial basis.
    dd = list(values)
    n = len(nodes)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j])
    result = UniPoly((), var)
    for i in range(n - 1, -1, -1):
        result = result * UniPoly((-nodes[i], 1), var) + dd[i]
    return result


class BiPoly:
    """Polynomial in ``(s, t)``: dense in ``t`` with :class:`UniPoly` coefficients in ``s``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        out = []
        for c in coeffs:
            if isinstance(c, UniPoly):
                if c.degree > 0 and c.var != "s":
                    raise ScalarKindMismatch("BiPoly coefficients must be polynomials in s")
                out.append(c if c.var == "s" else c.with_var("s"))
            else:
                out.append(UniPoly((c,), "s"))
        self.coeffs = _strip(out)

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls((c,))

    @classmethod
    def s(cls) -> "BiPoly":
        return cls((UniPoly((0, 1), "s"),))

    @classmethod
    def t(cls) -> "BiPoly":
        return cls((0, 1))

    @classmethod
    def from_unipoly(cls, p: UniPoly) -> "BiPoly":
        if p.var == "s" or p.degree <= 0:
            return cls((p.with_var("s"),))
        return cls(p.coeffs)

    @classmethod
    def pair_factor(cls, lam, mu) -> "BiPoly":
        """(lam - s)(mu - s) - t."""
        q = UniPoly.from_roots((lam, mu), "s")
        return cls((q, -1))

    @property
    def deg_t(self) -> int:
        return len(self.coeffs) - 1

    @property
    def deg_s(self) -> int:
        return max((c.degree for c in self.coeffs), default=-1)

    def coefficient(self, k: int) -> UniPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else UniPoly((), "s")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return self.deg_t <= 0 and self.deg_s <= 0

    def terms(self):
        """Yield ``(t_degree, s_degree, coefficient)`` for the nonzero monomials."""
        for k, c in enumerate(self.coeffs):
            for j, a in enumerate(c.coeffs):
                if a:
                    yield k, j, a

    def __call__(self, s, t):
        acc = None
        for c in reversed(self.coeffs):
            cs = c(s)
            acc = cs if acc is None else acc * t + cs
        return Fraction(0) if acc is None else acc

    def subs_s(self, value) -> UniPoly:
        """Substitute a rational for ``s``; result is a polynomial in ``t``."""
        return UniPoly([c(to_fraction(value)) for c in self.coeffs], "t")

    def subs_t(self, value):
        """Substitute for ``t``.  A rational gives a polynomial in ``s``; so does
        a polynomial in ``s``."""
        if _is_number(value):
            value = UniPoly((value,), "s")
        acc = UniPoly((), "s")
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return BiPoly.from_unipoly(other)
        if _is_number(other):
            return BiPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        zero = UniPoly((), "s")
        return BiPoly(
            [(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return BiPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if _is_number(other) or (isinstance(other, UniPoly) and other.var == "s") or (
            isinstance(other, UniPoly) and other.degree <= 0
        ):
            return BiPoly([c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BiPoly()
        out = [UniPoly((), "s")] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if _is_number(other):
            c = to_fraction(other)
            if c == 0:
                raise DivisionByZeroPoly("division by zero")
            return BiPoly([a / c for a in self.coeffs])
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_constant():
            return hash(self.coefficient(0).coefficient(0))
        return hash(("bipoly", self.coeffs))

    def __repr__(self):
        return f"BiPoly({str(self)!r})"

    def __str__(self):
        """Expanded form, descending in ``t`` and then in ``s``."""
        terms = []
        for k in range(self.deg_t, -1, -1):
            c = self.coeffs[k]
            for j in range(c.degree, -1, -1):
                a = c.coeffs[j]
                if a:
                    mono = "*".join(m for m in (_power("s", j), _power("t", k)) if m)
                    terms.append((a, mono))
        return _render_terms(terms)


def bipoly_div_exact(a: BiPoly, b: BiPoly) -> BiPoly:
    """Exact quotient ``a / b`` in Q[s, t]; raises :class:`NotAFactor` otherwise.

    Long division in ``t`` over the domain Q[s]: if ``b`` divides ``a`` then
    every leading coefficient division along the way is exact in Q[s].
    """
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    r = list(a.coeffs)
    db = b.deg_t
    lb = b.coeffs[-1]
    if len(r) - 1 < db:
        if r:
            raise NotAFactor("divisor has higher t-degree than dividend")
        return BiPoly()
    q = [UniPoly((), "s")] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        quo, rem = upoly_divrem(c, lb)
        if rem:
            raise NotAFactor("leading coefficient division is not exact")
        q[k - db] = quo
        for j, bc in enumerate(b.coeffs):
            r[k - db + j] = r[k - db + j] - quo * bc
    if any(r[:db]):
        raise NotAFactor("nonzero remainder")
    return BiPoly(q)


def bipoly_interpolate2d(
    values: Sequence[Sequence],
    bounds: tuple[int, int],
    s_nodes: Sequence | None = None,
    t_nodes: Sequence | None = None,
) -> BiPoly:
    """Recover a polynomial from samples ``values[i][j] = p(s_i, t_j)``.

    Nodes default to the consecutive integers ``0, 1, 2, ...`` on each axis.
    """
    d_s, d_t = bounds
    rows = len(values)
    cols = len(values[0]) if rows else 0
    if any(len(row) != cols for row in values):
        raise InsufficientNodes("ragged sample grid")
    s_nodes = list(range(rows)) if s_nodes is None else [to_fraction(x) for x in s_nodes]
    t_nodes = list(range(cols)) if t_nodes is None else [to_fraction(x) for x in t_nodes]
    if len(s_nodes) != rows or len(t_nodes) != cols:
        raise InsufficientNodes("node lists do not match the sample grid")
    if rows < d_s + 1 or cols < d_t + 1:
        raise InsufficientNodes(
            f"need a {d_s + 1}x{d_t + 1} grid, got {rows}x{cols}"
        )
    _check_nodes(s_nodes)
    _check_nodes(t_nodes)
    # interpolate each row in t, then each t-coefficient in s
    per_row = [upoly_interpolate(t_nodes, row, "t") for row in values]
    width = max((p.degree for p in per_row), default=-1) + 1
    coeffs = []
    for k in range(width):
        coeffs.append(upoly_interpolate(s_nodes, [p.coefficient(k) for p in per_row], "s"))
    result = BiPoly(coeffs)
    if result.deg_t > d_t or result.deg_s > d_s:
        raise DegreeBoundExceeded(
            f"samples need degrees ({result.deg_s}, {result.deg_t}) > bounds {bounds}"
        )
    return result


class RatFun:
    """Element of Q(s): reduced numerator over a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, _normalized: bool = False):
        if _normalized:
            self.num, self.den = num, den
            return
        r = ratfun_normalize(num, den)
        self.num, self.den = r.num, r.den

    @classmethod
    def _raw(cls, num: UniPoly, den: UniPoly) -> "RatFun":
        return cls(num, den, _normalized=True)

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coefficient(0)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDenominator(f"pole at s = {x}")
        return self.num(x) / d

    @staticmethod
    def _lift(other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, UniPoly):
            return RatFun._raw(other.with_var("s"), UniPoly((1,), "s"))
        if _is_number(other):
            return RatFun._raw(UniPoly((other,), "s"), UniPoly((1,), "s"))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return ratfun_normalize(self.num + o.num, self.den)
        return ratfun_normalize(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.num or not o.num:
            return RatFun._raw(UniPoly((), "s"), UniPoly((1,), "s"))
        # cross-cancel before multiplying to keep degrees down
        g1 = upoly_gcd(self.num, o.den)
        g2 = upoly_gcd(o.num, self.den)
        num = (self.num // g1) * (o.num // g2)
        den = (self.den // g2) * (o.den // g1)
        lc = den.lc()
        return RatFun._raw(num / lc, den / lc)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise ZeroDenominator("inverse of zero in Q(s)")
        lc = self.num.lc()
        return RatFun._raw(self.den / lc, self.num / lc)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFun._raw(self.num**k, self.den**k)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den.degree == 0:
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({str(self)!r})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


def ratfun_normalize(num, den=1) -> RatFun:
    """Reduced representative with a monic denominator."""
    num = num.with_var("s") if isinstance(num, UniPoly) else UniPoly((num,), "s")
    den = den.with_var("s") if isinstance(den, UniPoly) else UniPoly((den,), "s")
    if not den:
        raise ZeroDenominator("zero denominator")
    if not num:
        return RatFun._raw(UniPoly((), "s"), UniPoly((1,), "s"))
    if den.degree > 0:
        g = upoly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
    lc = den.lc()
    return RatFun._raw(num / lc, den / lc)
