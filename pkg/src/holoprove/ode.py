"""First-order ODE certificates for quadratic algebraic functions.

If P(z, G) = 0 and dP/dw(z, G) is a unit power series, implicit
differentiation gives G' = -P_z(z, G) / P_w(z, G), so a relation
q0 G + q1 G' = R follows from the purely polynomial identity

    q0(z) w P_w - q1(z) P_z - R(z) P_w  =  q(z) P      in Q[z][w]

for some cofactor q(z): substitute w = G and the right side dies, after
which the unit P_w(z, G) cancels.  ``find_first_order_ode`` searches for
such an identity by solving an exact linear system in the unknown
coefficients, level by level in a graded degree schedule, and certifies
whatever it finds by independent re-expansion.  Minimality is therefore
relative to the schedule: the certificate lives at the first level that
admits any solution, and no claim is made about ODEs outside the ansatz.

``singularity_report`` inspects q1, whose roots contain every finite
singularity of G: rational roots exactly (by root-theorem enumeration),
the remaining factor by square-free reduction, and its smallest positive
real root by exact bisection.  No general factoring is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgebraicEq
from .linalg import nullspace
from .polynomials import (
    BiPoly,
    UPoly,
    discriminant_w,
    fraction_content,
    rational_roots,
    squarefree_part,
)
from .series import Series, bipoly_series


class DegenerateOdeError(ArithmeticError):
    """The ansatz only ever produced relations with q1 identically zero."""


@dataclass(frozen=True)
class LinearOde:
    """First-order relation q0 * G + q1 * G' = rhs with q1 nonzero."""

    q0: UPoly
    q1: UPoly
    rhs: UPoly

    def __post_init__(self) -> None:
        if self.q1.is_zero():
            raise ValueError("q1 must be nonzero in a first-order ODE")
        for c in (self.q0, self.q1, self.rhs):
            if c.var != "z":
                raise ValueError("ODE coefficients use variable 'z'")


@dataclass(frozen=True)
class Certificate:
    """An ODE together with the identity cofactor that proves it.

    ``identity_residual_checked`` records whether ``verify_certificate``
    has confirmed the defining identity; certificates read from files
    start unchecked.
    """

    p: BiPoly
    ode: LinearOde
    cofactor: UPoly
    identity_residual_checked: bool = False


@dataclass(frozen=True)
class UnitReport:
    """Value of dP/dw at (0, first term); nonzero means the division by
    P_w in the ODE argument is legitimate."""

    value: Fraction
    ok: bool


def verify_certificate(cert: Certificate) -> bool:
    """Re-expand q0*w*P_w - q1*P_z - R*P_w - q*P and test for zero.

    This is a pure computation from the certificate's own data; it
    shares nothing with the search that produced it.
    """
    pw = cert.p.partial_w()
    lhs = (
        pw.times_w() * cert.ode.q0
        - cert.p.partial_z() * cert.ode.q1
        - pw * cert.ode.rhs
        - cert.p * cert.cofactor
    )
    return lhs.is_zero()


def unit_check(cert: Certificate, terms: list[Fraction]) -> UnitReport:
    if not terms:
        raise ValueError("need at least one term")
    value = cert.p.partial_w().evaluate(0, terms[0])
    return UnitReport(value=value, ok=value != 0)


def ode_series_check(cert: Certificate, g: Series) -> bool:
    """Check q0*g + q1*g' - R vanishes to order g.order - 1."""
    if g.order < 10:
        raise ValueError("series too short for a meaningful ODE check")
    order = g.order - 1
    residual = (
        Series.from_upoly(cert.ode.q0, order) * g.truncate(order)
        + Series.from_upoly(cert.ode.q1, order) * g.derivative()
        - Series.from_upoly(cert.ode.rhs, order)
    )
    return residual.is_zero()


def _solution_polys(
    vector: list[Fraction], sizes: tuple[int, int, int, int]
) -> tuple[UPoly, UPoly, UPoly, UPoly]:
    polys = []
    offset = 0
    for size in sizes:
        polys.append(UPoly(vector[offset : offset + size]))
        offset += size
    return tuple(polys)


def _normalize_solution(
    q0: UPoly, q1: UPoly, rhs: UPoly, cofactor: UPoly
) -> tuple[UPoly, UPoly, UPoly, UPoly]:
    """Integer coefficients, overall content 1, and the lowest-degree
    nonzero coefficient of q1 positive."""
    everything = list(q0.coeffs) + list(q1.coeffs) + list(rhs.coeffs) + list(
        cofactor.coeffs
    )
    content = fraction_content(everything)
    low = next(c for c in q1.coeffs if c != 0)
    scale = 1 / content if low > 0 else -1 / content
    return q0 * scale, q1 * scale, rhs * scale, cofactor * scale


def find_first_order_ode(eq: AlgebraicEq, max_degree: int) -> Certificate | None:
    """Search the graded schedule for an identity-certified ODE.

    Level d allows deg q0 <= d, deg R <= d, deg q1 <= d + 2 and
    deg q <= d + 1.  At each level the identity becomes a homogeneous
    exact linear system; the first level with a solution whose q1 is
    nonzero wins.  Among basis solutions, ties break to the fewest
    nonzero entries and then lexicographically, so reruns are
    byte-stable.  Returns None when every level up to max_degree is
    exhausted; raises DegenerateOdeError when solutions existed but all
    had q1 = 0.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    p = eq.p
    pw = p.partial_w()
    blocks = (pw.times_w(), p.partial_z(), pw, p)
    signs = (1, -1, -1, -1)
    saw_degenerate = False
    for level in range(max_degree + 1):
        sizes = (level + 1, level + 3, level + 1, level + 2)
        ncols = sum(sizes)
        zmax = 0
        wmax = 0
        for block, size in zip(blocks, sizes):
            wmax = max(wmax, block.deg_w)
            zdeg = max((c.degree for c in block.wcoeffs), default=-1)
            zmax = max(zmax, size - 1 + zdeg)
        rows = []
        for zi in range(zmax + 1):
            for wj in range(wmax + 1):
                row = []
                for block, sign, size in zip(blocks, signs, sizes):
                    coeff_poly = block.wcoeff(wj)
                    for shift in range(size):
                        row.append(sign * coeff_poly.coefficient(zi - shift))
                if any(row):
                    rows.append(row)
        basis = nullspace(rows, ncols)
        if not basis:
            continue
        q1_start = sizes[0]
        q1_end = q1_start + sizes[1]
        candidates = [
            v for v in basis if any(c != 0 for c in v[q1_start:q1_end])
        ]
        if not candidates:
            saw_degenerate = True
            continue
        chosen = min(
            candidates,
            key=lambda v: (sum(1 for c in v if c != 0), tuple(v)),
        )
        q0, q1, rhs, cofactor = _normalize_solution(
            *_solution_polys(chosen, sizes)
        )
        cert = Certificate(
            p=p,
            ode=LinearOde(q0=q0, q1=q1, rhs=rhs),
            cofactor=cofactor,
            identity_residual_checked=False,
        )
        if not verify_certificate(cert):
            raise AssertionError("search produced a non-verifying certificate")
        return Certificate(
            p=p, ode=cert.ode, cofactor=cofactor, identity_residual_checked=True
        )
    if saw_degenerate:
        raise DegenerateOdeError(
            "every relation in the schedule had q1 identically zero"
        )
    return None


@dataclass(frozen=True)
class SingularityReport:
    """Structure of q1's roots: the candidate singularities of G.

    ``residual_factor`` is what survives of q1 after rational roots are
    divided out and repeated factors collapsed (primitive, positive
    leading coefficient).  ``singular_points_covered`` asserts that the
    roots of the w-discriminant of P, together with the roots of P's
    w-linear coefficient, all appear among q1's roots; this is a
    divisibility check on square-free parts, not a factorization.
    ``dominant_root`` brackets the smallest positive real root of the
    residual factor to width below 1e-12, when one exists in (0, 1].
    """

    rational_roots: tuple[tuple[Fraction, int], ...]
    residual_factor: UPoly
    discriminant: UPoly
    singular_points_covered: bool
    dominant_interval: tuple[Fraction, Fraction] | None
    dominant_root: float | None


_BISECTION_WIDTH = Fraction(1, 10**12)


def _bisect_sign_change(
    p: UPoly, lo: Fraction, hi: Fraction
) -> tuple[Fraction, Fraction]:
    flo = p(lo)
    while hi - lo >= _BISECTION_WIDTH:
        mid = (lo + hi) / 2
        fmid = p(mid)
        if fmid == 0:
            # Exact hit; collapse to a point bracket.
            return mid, mid
        if (flo < 0) != (fmid < 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return lo, hi


def smallest_positive_root_interval(
    p: UPoly,
) -> tuple[Fraction, Fraction] | None:
    """Bracket the smallest root of p in (0, 1] to width below 1e-12.

    Scans in steps of 1/64 for a sign change, then bisects with exact
    rational arithmetic; returns None when no sign change shows up.
    """
    if p.degree < 1:
        return None
    step = Fraction(1, 64)
    prev_x = Fraction(0)
    prev_value = p(prev_x)
    for i in range(1, 65):
        x = i * step
        value = p(x)
        if value == 0:
            return x, x
        if prev_value != 0 and (prev_value < 0) != (value < 0):
            return _bisect_sign_change(p, prev_x, x)
        prev_x, prev_value = x, value
    return None


def singularity_report(cert: Certificate) -> SingularityReport:
    q1 = cert.ode.q1
    roots = rational_roots(q1)
    residual = q1
    z = UPoly.variable()
    for root, multiplicity in roots:
        residual = residual.exact_div((z - root) ** multiplicity)
    residual = squarefree_part(residual)
    disc = discriminant_w(cert.p)
    claims = disc
    linear_coeff = cert.p.wcoeff(1)
    if not linear_coeff.is_zero():
        claims = claims * linear_coeff
    covered = squarefree_part(claims).divides(squarefree_part(q1))
    interval = smallest_positive_root_interval(residual)
    approx = None
    if interval is not None:
        approx = float((interval[0] + interval[1]) / 2)
    return SingularityReport(
        rational_roots=tuple(roots),
        residual_factor=residual,
        discriminant=disc,
        singular_points_covered=covered,
        dominant_interval=interval,
        dominant_root=approx,
    )
