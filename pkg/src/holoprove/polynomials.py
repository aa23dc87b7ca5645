"""Exact polynomial arithmetic over the rationals.

Everything downstream (series expansion, the certificate search, the
recurrence extraction) reduces to arithmetic in Q[z] and Q[z][w].  Both
rings get a dense representation: the polynomials in play are short
(degree ten or so at the very worst), so plain coefficient tuples beat
anything clever.

``Rational`` is :class:`fractions.Fraction`, which already maintains the
gcd-reduced, positive-denominator normal form needed here.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Iterator, Union

Rational = Fraction

Scalar = Union[int, Fraction]


def _frac(value: Scalar) -> Fraction:
    if isinstance(value, float):
        # Binary floats are not exact rational inputs; refuse them rather
        # than silently importing rounding error.
        raise TypeError("float coefficients are not exact; use Fraction")
    return value if isinstance(value, Fraction) else Fraction(value)


def fraction_content(values: Iterable[Fraction]) -> Fraction:
    """Positive rational c with values/c integers of gcd 1 (0 if all zero)."""
    num = 0
    den = 1
    for v in values:
        num = gcd(num, v.numerator)
        den = lcm(den, v.denominator)
    return Fraction(num, den)


class UPoly:
    """Dense univariate polynomial over ``Fraction``.

    ``coeffs[i]`` holds the coefficient of the i-th power.  The trailing
    coefficient is always nonzero; the zero polynomial stores an empty
    tuple and reports degree -1.  Each polynomial carries a variable tag
    ("z" for series variables, "n" for recurrence coefficients); mixing
    tags in arithmetic is a usage error.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "z"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    @classmethod
    def zero(cls, var: str = "z") -> UPoly:
        return cls((), var)

    @classmethod
    def one(cls, var: str = "z") -> UPoly:
        return cls((1,), var)

    @classmethod
    def constant(cls, value: Scalar, var: str = "z") -> UPoly:
        return cls((value,), var)

    @classmethod
    def variable(cls, var: str = "z") -> UPoly:
        return cls((0, 1), var)

    @property
    def degree(self) -> int:
        """Degree, with -1 as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of the i-th power; zero outside the stored range."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check_var(self, other: UPoly) -> None:
        if self.var != other.var:
            raise ValueError(
                f"variable mismatch: {self.var!r} vs {other.var!r}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.var))

    def __neg__(self) -> UPoly:
        return UPoly((-c for c in self.coeffs), self.var)

    def _coerce(self, other: Union[UPoly, Scalar]) -> UPoly | None:
        if isinstance(other, UPoly):
            self._check_var(other)
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly.constant(other, self.var)
        return None

    def __add__(self, other: Union[UPoly, Scalar]) -> UPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UPoly(
            (self.coefficient(i) + o.coefficient(i) for i in range(n)),
            self.var,
        )

    __radd__ = __add__

    def __sub__(self, other: Union[UPoly, Scalar]) -> UPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> UPoly:
        return (-self) + other

    def __mul__(self, other: Union[UPoly, Scalar]) -> UPoly:
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return UPoly((c * a for a in self.coeffs), self.var)
        if not isinstance(other, UPoly):
            return NotImplemented
        self._check_var(other)
        if self.is_zero() or other.is_zero():
            return UPoly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return UPoly(out, self.var)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> UPoly:
        c = _frac(scalar)
        if c == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return self * (1 / c)

    def __pow__(self, exponent: int) -> UPoly:
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = UPoly.one(self.var)
        for _ in range(exponent):
            result = result * self
        return result

    def divrem(self, other: UPoly) -> tuple[UPoly, UPoly]:
        """Quotient and remainder with deg(rem) < deg(other)."""
        self._check_var(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.degree < other.degree:
            return UPoly.zero(self.var), self
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = self.degree - other.degree
        quot = [Fraction(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[other.degree + k] / lead
            quot[k] = c
            if c:
                for i, oc in enumerate(other.coeffs):
                    rem[i + k] -= c * oc
        return UPoly(quot, self.var), UPoly(rem[: other.degree], self.var)

    def exact_div(self, other: UPoly) -> UPoly:
        q, r = self.divrem(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def divides(self, other: UPoly) -> bool:
        """True when self divides other exactly (zero divides only zero)."""
        if self.is_zero():
            return other.is_zero()
        return other.divrem(self)[1].is_zero()

    def derivative(self) -> UPoly:
        return UPoly(
            (i * c for i, c in enumerate(self.coeffs) if i > 0), self.var
        )

    def __call__(self, x: Scalar) -> Fraction:
        value = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shifted_arg(self, delta: Scalar) -> UPoly:
        """The polynomial p(var + delta)."""
        shift = UPoly((_frac(delta), 1), self.var)
        acc = UPoly.zero(self.var)
        for c in reversed(self.coeffs):
            acc = acc * shift + c
        return acc

    def content(self) -> Fraction:
        return fraction_content(self.coeffs)

    def primitive(self) -> UPoly:
        """Integer coefficients with gcd 1; sign of the input is kept."""
        if self.is_zero():
            return self
        return self / self.content()

    def equals_up_to_scalar(self, other: UPoly) -> bool:
        if self.var != other.var:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.degree != other.degree:
            return False
        ratio = other.leading() / self.leading()
        return other == self * ratio

    def __str__(self) -> str:
        from .polytext import format_upoly

        return format_upoly(self)

    def __repr__(self) -> str:
        return f"UPoly({[str(c) for c in self.coeffs]}, var={self.var!r})"


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic-free gcd: primitive with positive leading coefficient."""
    a._check_var(b)
    while not b.is_zero():
        a, b = b, a.divrem(b)[1]
    if a.is_zero():
        return a
    a = a.primitive()
    if a.leading() < 0:
        a = -a
    return a


def squarefree_part(p: UPoly) -> UPoly:
    """p with repeated factors collapsed; primitive, positive leading."""
    if p.is_zero():
        return p
    if p.degree == 0:
        return UPoly.one(p.var)
    g = upoly_gcd(p, p.derivative())
    q = p.exact_div(g).primitive()
    if q.leading() < 0:
        q = -q
    return q


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: UPoly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicity, sorted by root.

    Candidates come from the rational root theorem applied to the
    primitive integer form; each is confirmed by evaluation and its
    multiplicity by repeated exact deflation.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every rational as a root")
    roots: list[tuple[Fraction, int]] = []
    # Root at zero first: strip the power of the variable.
    val = 0
    while p.coefficient(val) == 0:
        val += 1
    if val:
        roots.append((Fraction(0), val))
        p = UPoly(p.coeffs[val:], p.var)
    if p.degree < 1:
        return roots
    prim = p.primitive()
    trailing = prim.coefficient(0).numerator
    leading = prim.leading().numerator
    candidates = sorted(
        {
            sign * Fraction(dp, dq)
            for dp in _divisors(trailing)
            for dq in _divisors(leading)
            for sign in (1, -1)
        }
    )
    linear = UPoly.variable(p.var)
    for r in candidates:
        mult = 0
        while prim.degree >= 1 and prim(r) == 0:
            prim = prim.exact_div(linear - r)
            mult += 1
        if mult:
            roots.append((r, mult))
    roots.sort(key=lambda pair: pair[0])
    return roots


class BiPoly:
    """Polynomial in w with UPoly-in-z coefficients, dense in w.

    ``wcoeffs[j]`` is the z-polynomial multiplying the j-th power of w;
    the top entry is nonzero, and the zero polynomial stores no entries
    (w-degree sentinel -1).
    """

    __slots__ = ("wcoeffs",)

    def __init__(self, wcoeffs: Iterable[Union[UPoly, Scalar]] = ()):
        cs = []
        for c in wcoeffs:
            if not isinstance(c, UPoly):
                c = UPoly.constant(c, "z")
            elif c.var != "z":
                raise ValueError("BiPoly coefficients must use variable 'z'")
            cs.append(c)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.wcoeffs: tuple[UPoly, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> BiPoly:
        return cls(())

    @classmethod
    def one(cls) -> BiPoly:
        return cls((UPoly.one(),))

    @classmethod
    def from_upoly(cls, p: UPoly) -> BiPoly:
        return cls((p,))

    @classmethod
    def w(cls) -> BiPoly:
        return cls((UPoly.zero(), UPoly.one()))

    @property
    def deg_w(self) -> int:
        return len(self.wcoeffs) - 1

    def wcoeff(self, j: int) -> UPoly:
        if 0 <= j < len(self.wcoeffs):
            return self.wcoeffs[j]
        return UPoly.zero()

    def is_zero(self) -> bool:
        return not self.wcoeffs

    def __bool__(self) -> bool:
        return bool(self.wcoeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.wcoeffs == other.wcoeffs

    def __hash__(self) -> int:
        return hash(self.wcoeffs)

    def __neg__(self) -> BiPoly:
        return BiPoly(tuple(-c for c in self.wcoeffs))

    def __add__(self, other: BiPoly) -> BiPoly:
        if not isinstance(other, BiPoly):
            return NotImplemented
        n = max(len(self.wcoeffs), len(other.wcoeffs))
        return BiPoly(self.wcoeff(j) + other.wcoeff(j) for j in range(n))

    def __sub__(self, other: BiPoly) -> BiPoly:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union[BiPoly, UPoly, Scalar]) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            other = UPoly.constant(other, "z")
        if isinstance(other, UPoly):
            return BiPoly(c * other for c in self.wcoeffs)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BiPoly.zero()
        out = [UPoly.zero() for _ in range(len(self.wcoeffs) + len(other.wcoeffs) - 1)]
        for i, a in enumerate(self.wcoeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.wcoeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> BiPoly:
        c = _frac(scalar)
        if c == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return self * (1 / c)

    def times_w(self) -> BiPoly:
        """Multiply by w (shift the w-coefficients up by one)."""
        if self.is_zero():
            return self
        return BiPoly((UPoly.zero(),) + self.wcoeffs)

    def partial_w(self) -> BiPoly:
        return BiPoly(j * c for j, c in enumerate(self.wcoeffs) if j > 0)

    def partial_z(self) -> BiPoly:
        return BiPoly(c.derivative() for c in self.wcoeffs)

    def evaluate(self, z_value: Scalar, w_value: Scalar) -> Fraction:
        zv = _frac(z_value)
        wv = _frac(w_value)
        acc = Fraction(0)
        for c in reversed(self.wcoeffs):
            acc = acc * wv + c(zv)
        return acc

    def iter_coefficients(self) -> Iterator[Fraction]:
        for c in self.wcoeffs:
            yield from c.coeffs

    def content(self) -> Fraction:
        return fraction_content(self.iter_coefficients())

    def __str__(self) -> str:
        from .polytext import format_bipoly

        return format_bipoly(self)

    def __repr__(self) -> str:
        return f"BiPoly({list(self.wcoeffs)!r})"


def _det(rows: list[list[UPoly]]) -> UPoly:
    """Determinant by cofactor expansion; fine for the tiny matrices here."""
    n = len(rows)
    if n == 0:
        return UPoly.one()
    if n == 1:
        return rows[0][0]
    total = UPoly.zero()
    for i, row in enumerate(rows):
        if row[0].is_zero():
            continue
        minor = [r[1:] for j, r in enumerate(rows) if j != i]
        term = row[0] * _det(minor)
        total = total + term if i % 2 == 0 else total - term
    return total


def resultant_w(a: BiPoly, b: BiPoly) -> UPoly:
    """Resultant with respect to w, via the Sylvester matrix over Q[z]."""
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of a zero polynomial")
    m, n = a.deg_w, b.deg_w
    size = m + n
    if size == 0:
        return UPoly.one()
    a_desc = [a.wcoeff(m - i) for i in range(m + 1)]
    b_desc = [b.wcoeff(n - i) for i in range(n + 1)]
    rows = []
    for i in range(n):
        row = [UPoly.zero()] * size
        for j, c in enumerate(a_desc):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [UPoly.zero()] * size
        for j, c in enumerate(b_desc):
            row[i + j] = c
        rows.append(row)
    return _det(rows)


def discriminant_w(p: BiPoly) -> UPoly:
    """Discriminant of p in w: (-1)^(n(n-1)/2) resultant(p, dp/dw) / lc.

    For a quadratic a w^2 + b w + c this is the familiar b^2 - 4 a c.
    """
    n = p.deg_w
    res = resultant_w(p, p.partial_w())
    disc = res.exact_div(p.wcoeff(n))
    if (n * (n - 1) // 2) % 2:
        disc = -disc
    return disc


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    if value < 0:
        return None
    rn = isqrt(value.numerator)
    rd = isqrt(value.denominator)
    if rn * rn != value.numerator or rd * rd != value.denominator:
        return None
    return Fraction(rn, rd)
