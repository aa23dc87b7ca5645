"""From the convolution recurrence to an algebraic equation for the
generating function.

Multiplying the defining recurrence by the (n+1)-st power of z and
summing over n >= 1 turns the convolution side into z*(G^2 - a0^2) and
the inhomogeneous side into an explicit rational function, since

    sum((n+1) z^(n+1), n >= 1) = z^2 (2 - z) / (1 - z)^2
    sum(z^(n+1),       n >= 1) = z^2 / (1 - z).

Clearing the minimal power of (1 - z) leaves a quadratic P(z, G) = 0
with polynomial coefficients, which ``derive_algebraic`` normalizes and
self-checks against a series expansion of the sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import BiPoly, Scalar, UPoly, _frac
from .sequences import ChouletSpec, conv_terms
from .series import Series, bipoly_series

_SELF_CHECK_ORDER = 30


def normalize_bipoly(p: BiPoly) -> BiPoly:
    """Scale to integer coefficients with content 1, signed so the
    highest w-coefficient's lowest-degree nonzero entry is positive."""
    if p.is_zero():
        return p
    scaled = p / p.content()
    top = scaled.wcoeff(scaled.deg_w)
    low = next(c for c in top.coeffs if c != 0)
    if low < 0:
        scaled = -scaled
    return scaled


@dataclass(frozen=True)
class AlgebraicEq:
    """A quadratic equation p(z, w) = 0 satisfied by a generating
    function whose constant term is ``branch_value``.

    Construction normalizes p (integer content 1, fixed sign) and
    requires w-degree exactly 2; whether the branch value is a simple
    root of p(0, w) is the business of ``branch_check``.
    """

    p: BiPoly
    branch_value: Fraction

    def __post_init__(self) -> None:
        if self.p.deg_w != 2:
            raise ValueError("the equation must have w-degree exactly 2")
        object.__setattr__(self, "p", normalize_bipoly(self.p))
        object.__setattr__(self, "branch_value", _frac(self.branch_value))


@dataclass(frozen=True)
class BranchReport:
    """Whether a term sequence starts on the equation's marked branch."""

    ok: bool
    first_term: Fraction
    branch_value: Fraction
    p_at_branch: Fraction
    unit_value: Fraction
    reason: str | None = None


def _inhomogeneous_part(spec: ChouletSpec) -> tuple[UPoly, int]:
    """Numerator N and exponent e with N / (1-z)^e the generating
    function of the k*(n+1) + l terms for n >= 1, e minimal."""
    z = UPoly.variable()
    numerator = spec.k * z**2 * (2 - z) + spec.l * z**2 * (1 - z)
    one_minus_z = 1 - z
    exponent = 2
    while exponent > 0:
        if numerator.is_zero():
            return numerator, 0
        quotient, remainder = numerator.divrem(one_minus_z)
        if not remainder.is_zero():
            break
        numerator = quotient
        exponent -= 1
    return numerator, exponent


def derive_algebraic(spec: ChouletSpec) -> AlgebraicEq:
    """Quadratic equation of the family member's generating function.

    The result is self-checked: the convolution series substituted into
    p must vanish through the check order, or something is wrong with
    the derivation itself.
    """
    z = UPoly.variable()
    numerator, exponent = _inhomogeneous_part(spec)
    denominator = (1 - z) ** exponent
    w2 = z * denominator
    w1 = -denominator
    w0 = denominator * (spec.a0 + (spec.a1 - spec.a0**2) * z) + numerator
    eq = AlgebraicEq(BiPoly((w0, w1, w2)), spec.a0)
    g = Series(conv_terms(spec, _SELF_CHECK_ORDER))
    if not bipoly_series(eq.p, g).is_zero():
        raise AssertionError(
            "derived equation fails its own series residual check"
        )
    return eq


def branch_check(eq: AlgebraicEq, terms: list[Fraction]) -> BranchReport:
    """Confirm terms[0] is the marked branch value and a simple root."""
    if not terms:
        raise ValueError("need at least one term")
    first = terms[0]
    p_value = eq.p.evaluate(0, first)
    unit_value = eq.p.partial_w().evaluate(0, first)
    reason = None
    if first != eq.branch_value:
        reason = f"first term {first} is not the branch value {eq.branch_value}"
    elif p_value != 0:
        reason = f"{first} is not a root of p(0, w)"
    elif unit_value == 0:
        reason = f"{first} is a repeated root of p(0, w)"
    return BranchReport(
        ok=reason is None,
        first_term=first,
        branch_value=eq.branch_value,
        p_at_branch=p_value,
        unit_value=unit_value,
        reason=reason,
    )


def spec_from_algebraic(eq: AlgebraicEq) -> ChouletSpec:
    """Invert ``derive_algebraic``: recover the convolution parameters.

    The equation determines the parameters within the family; the
    recovered spec is validated by re-deriving and comparing, so a
    tampered or out-of-family equation raises instead of silently
    producing wrong terms.
    """
    z = UPoly.variable()
    a2, b = eq.p.wcoeff(2), eq.p.wcoeff(1)
    d = -b
    if d.is_zero() or a2 != z * d or d.coefficient(0) == 0:
        raise ValueError("equation is not of the convolution-family shape")
    scale = d.coefficient(0)
    a0 = eq.branch_value
    t = eq.p.wcoeff(0) - d * a0
    a1 = t.coefficient(1) / scale + a0**2
    numerator = t - (a1 - a0**2) * z * d
    exponent = d.degree
    if exponent == 0:
        k = l = Fraction(0)
        ok = numerator.is_zero()
    elif exponent == 1:
        k = Fraction(0)
        l = numerator.coefficient(2) / scale
        ok = numerator == l * scale * z**2
    elif exponent == 2:
        c2 = numerator.coefficient(2) / scale
        c3 = numerator.coefficient(3) / scale
        k = c2 + c3
        l = -c2 - 2 * c3
        ok = True
    else:
        raise ValueError("equation is not of the convolution-family shape")
    if not ok:
        raise ValueError("equation is not of the convolution-family shape")
    spec = ChouletSpec(a0, a1, k, l)
    if derive_algebraic(spec) != eq:
        raise ValueError("equation is not of the convolution-family shape")
    return spec
