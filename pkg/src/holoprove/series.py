"""Truncated power series over the rationals, and the two series-level
root generators for a quadratic w-equation: Newton-Hensel lifting and
direct expansion of the square-root closed form.

A series stores exactly ``order`` coefficients; arithmetic between
series of unequal order truncates to the smaller one, so precision loss
is always explicit in the result's order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .polynomials import BiPoly, Scalar, UPoly, _frac, rational_sqrt


class NonUnitSeriesError(ValueError):
    """Inversion needs a nonzero constant term."""


class SqrtBranchError(ValueError):
    """Square roots are taken on the branch with constant term 1."""


class NotARootError(ValueError):
    """The proposed seed does not satisfy the equation at z = 0."""


class RamifiedBranchError(ValueError):
    """The seed is a repeated root at z = 0, so lifting cannot start."""


class Series:
    """Dense truncated power series; ``coeffs`` has length ``order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Scalar]):
        self.coeffs: tuple[Fraction, ...] = tuple(_frac(c) for c in coeffs)
        self.order = len(self.coeffs)

    @classmethod
    def of(cls, coeffs: Iterable[Scalar], order: int) -> Series:
        """Build at a stated order, zero-padding or truncating."""
        cs = [_frac(c) for c in coeffs][:order]
        cs.extend(Fraction(0) for _ in range(order - len(cs)))
        return cls(cs)

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls.of((), order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.of((1,), order)

    @classmethod
    def from_upoly(cls, p: UPoly, order: int) -> Series:
        return cls.of(p.coeffs, order)

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < self.order:
            return self.coeffs[i]
        raise IndexError(f"coefficient {i} beyond truncation order {self.order}")

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[:order])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __neg__(self) -> Series:
        return Series(-c for c in self.coeffs)

    def __add__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(self.coeffs[i] + other.coeffs[i] for i in range(n))

    def __sub__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(self.coeffs[i] - other.coeffs[i] for i in range(n))

    def __mul__(self, other: Union[Series, Scalar]) -> Series:
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return Series(c * a for a in self.coeffs)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fraction(0)] * n
        for i in range(n):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out)

    __rmul__ = __mul__

    def derivative(self) -> Series:
        return Series(i * self.coeffs[i] for i in range(1, self.order))

    def shift_down(self, k: int) -> Series:
        """Divide by the k-th power of the variable (order drops by k)."""
        if any(self.coeffs[i] != 0 for i in range(min(k, self.order))):
            raise ValueError("shift_down would discard nonzero coefficients")
        return Series(self.coeffs[k:])

    def inverse(self) -> Series:
        """Multiplicative inverse; the constant term must be a unit."""
        if self.order == 0:
            raise NonUnitSeriesError("cannot invert an order-0 series")
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NonUnitSeriesError("series with zero constant term has no inverse")
        inv = [1 / c0]
        for n in range(1, self.order):
            acc = Fraction(0)
            for i in range(1, n + 1):
                if self.coeffs[i]:
                    acc += self.coeffs[i] * inv[n - i]
            inv.append(-acc / c0)
        return Series(inv)

    def sqrt(self) -> Series:
        """Square root on the branch with constant term 1."""
        if self.order == 0 or self.coeffs[0] != 1:
            raise SqrtBranchError("series square root requires constant term 1")
        root = [Fraction(1)]
        for n in range(1, self.order):
            acc = Fraction(0)
            for i in range(1, n):
                acc += root[i] * root[n - i]
            root.append((self.coeffs[n] - acc) / 2)
        return Series(root)

    def __str__(self) -> str:
        return ", ".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Series([{self}])"


def bipoly_series(p: BiPoly, s: Series) -> Series:
    """Evaluate p(z, s(z)) as a series, truncated to s's order."""
    acc = Series.zero(s.order)
    for c in reversed(p.wcoeffs):
        acc = acc * s + Series.from_upoly(c, s.order)
    return acc


def newton_lift(p: BiPoly, seed: Scalar, order: int) -> Series:
    """Lift the simple root ``seed`` of p(0, w) to a series root of p.

    Precision doubles each pass (1, 2, 4, ... order): with S correct to
    k terms, S - p(z,S)/p_w(z,S) is correct to 2k.  The seed must be a
    simple root so that p_w(z,S) stays invertible.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    g0 = _frac(seed)
    if p.evaluate(0, g0) != 0:
        raise NotARootError(f"{g0} is not a root of p(0, w)")
    pw = p.partial_w()
    if pw.evaluate(0, g0) == 0:
        raise RamifiedBranchError(f"{g0} is a repeated root of p(0, w)")
    s = Series((g0,))
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        lifted = Series.of(s.coeffs, prec)
        value = bipoly_series(p, lifted)
        slope = bipoly_series(pw, lifted)
        s = lifted - value * slope.inverse()
    assert bipoly_series(p, s).is_zero(), "lifted series fails its equation"
    return s


def closed_form_series(p: BiPoly, branch: Scalar, order: int) -> Series:
    """Expand the quadratic-formula branch of p(z, w) = 0 with constant
    term ``branch``.

    Writes p = A w^2 + B w + C and expands (-B - sqrt(B^2 - 4AC)) / (2A),
    choosing the square-root sign that makes the numerator divisible by
    A's leading power of z (the removable singularity at the origin).
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if p.deg_w != 2:
        raise ValueError("closed form applies to quadratics in w only")
    branch_value = _frac(branch)
    a, b, c = p.wcoeff(2), p.wcoeff(1), p.wcoeff(0)
    val = 0
    while a.coefficient(val) == 0:
        val += 1
    work = order + val
    disc = b * b - 4 * (a * c)
    d0 = disc.coefficient(0)
    scale = rational_sqrt(d0)
    if scale is None or scale == 0:
        raise SqrtBranchError(
            "discriminant constant term is not a nonzero rational square"
        )
    unit_disc = Series.from_upoly(disc, work) * (1 / d0)
    root = unit_disc.sqrt() * scale
    minus_b = Series.from_upoly(-b, work)
    denom = Series.from_upoly(a, work) * 2
    for signed_root in (root, -root):
        numer = minus_b - signed_root
        if any(numer.coeffs[i] != 0 for i in range(val)):
            continue
        g = numer.shift_down(val) * denom.shift_down(val).inverse()
        if g.coeffs[0] == branch_value:
            return g
    raise SqrtBranchError(
        f"no series branch of the closed form has constant term {branch_value}"
    )
