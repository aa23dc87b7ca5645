"""Coefficient extraction: from a first-order ODE to a linear recurrence
with polynomial coefficients.

Reading off the n-th series coefficient of q0*G + q1*G' = R gives

    sum(q0_j a(n-j), j) + sum(q1_j (n-j+1) a(n-j+1), j) = [z^n] R,

so a(n-j) is multiplied by q0_j + q1_{j+1} (n - j), an affine polynomial
in n.  Past deg R the right side is zero and the relation is the
homogeneous recurrence.  When q1(0) is nonzero the raw relation carries
an a(n+1) term; substituting n -> n-1 restores the leading-a(n) form at
the cost of one extra order and a one-larger validity threshold.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ode import LinearOde
from .polynomials import UPoly
from .polytext import PolyParseError, format_upoly, parse_upoly
from .sequences import PRecurrence

from dataclasses import dataclass
from typing import Sequence


def extract_recurrence(ode: LinearOde) -> PRecurrence:
    """The recurrence satisfied by the coefficient sequence of any
    series solution of the ODE, valid past the degree of the right side.
    """
    q0, q1, rhs = ode.q0, ode.q1, ode.rhs
    shift = 1 if q1.coefficient(0) != 0 else 0
    order = max(q0.degree, q1.degree - 1) + shift
    n = UPoly.variable("n")
    coefficients = []
    for j in range(order + 1):
        c = q0.coefficient(j - shift) + q1.coefficient(j + 1 - shift) * (n - j)
        coefficients.append(c)
    # A common factor of z in (q0, q1, rhs) surfaces here as a zero
    # leading coefficient; shift the index down until a(n) reappears.
    drops = 0
    while coefficients and coefficients[0].is_zero():
        coefficients = [c.shifted_arg(1) for c in coefficients[1:]]
        drops += 1
    if not coefficients:
        raise ValueError("ODE induces no relation between coefficients")
    order = len(coefficients) - 1
    valid_from = max(rhs.degree + 1 + shift - drops, order)
    return PRecurrence(coefficients=tuple(coefficients), valid_from=valid_from)


@dataclass(frozen=True)
class RecurrenceReport:
    """Exact residual check of a recurrence over a run of terms."""

    ok: bool
    first_n: int
    last_n: int
    failure_n: int | None = None
    residual: Fraction | None = None

    def describe(self) -> str:
        if self.ok:
            return f"residual zero for n = {self.first_n}..{self.last_n}"
        return f"nonzero residual {self.residual} at n = {self.failure_n}"


def verify_recurrence(rec: PRecurrence, terms: Sequence[Fraction]) -> RecurrenceReport:
    """Evaluate the recurrence residual at every index it claims."""
    if len(terms) <= rec.valid_from:
        raise ValueError(
            f"need terms beyond valid_from = {rec.valid_from} to check anything"
        )
    first = rec.valid_from
    last = len(terms) - 1
    for index in range(first, last + 1):
        residual = Fraction(0)
        for j, coeff in enumerate(rec.coefficients):
            value = coeff(index)
            if value:
                residual += value * terms[index - j]
        if residual != 0:
            return RecurrenceReport(
                ok=False,
                first_n=first,
                last_n=last,
                failure_n=index,
                residual=residual,
            )
    return RecurrenceReport(ok=True, first_n=first, last_n=last)


def format_recurrence(rec: PRecurrence) -> str:
    """Homogeneous standard form, e.g.

        (n+1)*a(n) + (-6*n+2)*a(n-1) + ... = 0  [n >= 4]
    """
    parts = []
    for j, coeff in enumerate(rec.coefficients):
        if coeff.is_zero():
            continue
        argument = "n" if j == 0 else f"n-{j}"
        parts.append(f"({format_upoly(coeff, compact=True)})*a({argument})")
    return f"{' + '.join(parts)} = 0  [n >= {rec.valid_from}]"


_TERM_RE = re.compile(r"\(([^()]*)\)\s*\*\s*a\(\s*n\s*(?:-\s*(\d+)\s*)?\)\s*$")
_TAIL_RE = re.compile(r"^\s*0\s*\[\s*n\s*>=\s*(-?\d+)\s*\]\s*$")


def parse_recurrence(text: str) -> PRecurrence:
    """Parse the output of :func:`format_recurrence` back."""
    head, sep, tail = text.partition("=")
    if not sep:
        raise PolyParseError("recurrence text has no '=' sign")
    tail_match = _TAIL_RE.match(tail)
    if tail_match is None:
        raise PolyParseError("recurrence text must end with '0  [n >= V]'")
    valid_from = int(tail_match.group(1))
    coefficients: dict[int, UPoly] = {}
    # Split on '+' between terms only; a '+' inside parentheses belongs
    # to a coefficient polynomial.
    chunks = []
    depth = 0
    start = 0
    for position, char in enumerate(head):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif char == "+" and depth == 0:
            chunks.append(head[start:position])
            start = position + 1
    chunks.append(head[start:])
    for chunk in chunks:
        term = _TERM_RE.match(chunk.strip())
        if term is None:
            raise PolyParseError(f"bad recurrence term {chunk.strip()!r}")
        lag = int(term.group(2) or 0)
        if lag in coefficients:
            raise PolyParseError(f"duplicate term for a(n-{lag})")
        coefficients[lag] = parse_upoly(term.group(1), var="n")
    if not coefficients:
        raise PolyParseError("recurrence text has no terms")
    order = max(coefficients)
    polys = tuple(
        coefficients.get(j, UPoly.zero("n")) for j in range(order + 1)
    )
    return PRecurrence(coefficients=polys, valid_from=valid_from)
