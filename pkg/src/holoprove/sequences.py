"""Exact term generation and cross-checking.

Two independent ways to produce terms live here: the defining quadratic
convolution recurrence (``conv_terms``) and evaluation of a linear
recurrence with polynomial coefficients (``prec_eval``).  ``parse_bfile``
and ``crosscheck`` compare either against externally published data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .polynomials import Scalar, UPoly, _frac


@dataclass(frozen=True)
class ChouletSpec:
    """Parameters of the convolution family

        a(n+1) = sum(a(p) * a(n-p), p = 0..n) + k*(n+1) + l   for n >= 1,

    with free initial values a(0) = a0 and a(1) = a1.
    """

    a0: Fraction
    a1: Fraction
    k: Fraction
    l: Fraction

    def __post_init__(self) -> None:
        for field in ("a0", "a1", "k", "l"):
            object.__setattr__(self, field, _frac(getattr(self, field)))


def conv_terms(spec: ChouletSpec, count: int) -> list[Fraction]:
    """First ``count`` terms by direct convolution; quadratic time."""
    if count < 2:
        raise ValueError("count must be at least 2 (a0 and a1 are initial data)")
    terms = [spec.a0, spec.a1]
    for n in range(1, count - 1):
        acc = Fraction(0)
        for p in range(n + 1):
            acc += terms[p] * terms[n - p]
        terms.append(acc + spec.k * (n + 1) + spec.l)
    return terms[:count]


class SingularRecurrenceError(ArithmeticError):
    """The leading coefficient vanished at the reported index."""

    def __init__(self, index: int):
        super().__init__(f"leading coefficient vanishes at n = {index}")
        self.index = index


class IntegralityError(ArithmeticError):
    """A term asserted to be an integer came out fractional."""

    def __init__(self, index: int, value: Fraction):
        super().__init__(f"a({index}) = {value} is not an integer")
        self.index = index
        self.value = value


@dataclass(frozen=True)
class PRecurrence:
    """Linear recurrence sum(c_j(n) * a(n-j), j = 0..order) = 0 valid for
    n >= valid_from, with polynomial coefficients in n.

    ``coefficients[j]`` multiplies a(n-j); the j = 0 coefficient is
    nonzero as a polynomial.  ``valid_from`` is at least the order, so
    every index the recurrence touches exists.
    """

    coefficients: tuple[UPoly, ...]
    valid_from: int

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise ValueError("a recurrence needs at least the j = 0 coefficient")
        if coeffs[0].is_zero():
            raise ValueError("leading (j = 0) coefficient must be nonzero")
        for c in coeffs:
            if c.var != "n":
                raise ValueError("recurrence coefficients use variable 'n'")
        if self.valid_from < self.order:
            raise ValueError("valid_from must be at least the order")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1


def prec_eval(
    rec: PRecurrence,
    initial: Sequence[Scalar],
    count: int,
    *,
    require_integers: bool = False,
) -> list[Fraction]:
    """Extend ``initial`` to ``count`` terms using the recurrence.

    Solves for a(n) = -sum(c_j(n) a(n-j), j >= 1) / c_0(n) over the
    rationals; ``require_integers`` additionally asserts every produced
    term has denominator 1.
    """
    if len(initial) < rec.valid_from:
        raise ValueError(
            f"need at least valid_from = {rec.valid_from} initial terms, "
            f"got {len(initial)}"
        )
    terms = [_frac(t) for t in initial[:count]]
    lead = rec.coefficients[0]
    for n in range(len(terms), count):
        c0 = lead(n)
        if c0 == 0:
            raise SingularRecurrenceError(n)
        acc = Fraction(0)
        for j in range(1, rec.order + 1):
            cj = rec.coefficients[j](n)
            if cj:
                acc += cj * terms[n - j]
        value = -acc / c0
        if require_integers and value.denominator != 1:
            raise IntegralityError(n, value)
        terms.append(value)
    return terms


class BFileError(ValueError):
    """Malformed b-file content, with the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_bfile(source: Union[str, Iterable[str]]) -> list[tuple[int, int]]:
    """Parse OEIS b-file text into (index, value) pairs.

    Comment lines start with '#', blank lines are skipped, and data
    lines hold an index and a value separated by whitespace.  Indices
    must be strictly increasing and fit in 64 bits; values are
    arbitrary-precision integers.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    entries: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(lineno, f"expected '<n> <a(n)>', got {line!r}")
        try:
            index = int(fields[0])
            value = int(fields[1])
        except ValueError:
            raise BFileError(lineno, f"non-integer field in {line!r}") from None
        if not -(2**63) <= index < 2**63:
            raise BFileError(lineno, f"index {index} out of 64-bit range")
        if entries and index <= entries[-1][0]:
            raise BFileError(
                lineno, f"index {index} not above previous {entries[-1][0]}"
            )
        entries.append((index, value))
    return entries


@dataclass(frozen=True)
class CrosscheckReport:
    """Outcome of comparing computed terms against reference pairs."""

    ok: bool
    compared: int
    mismatch_index: int | None = None
    expected: Fraction | None = None
    actual: Fraction | None = None

    def describe(self) -> str:
        if self.ok:
            return f"agreement on {self.compared} compared terms"
        return (
            f"mismatch at index {self.mismatch_index}: "
            f"reference {self.expected}, computed {self.actual}"
        )


def crosscheck(
    computed: Sequence[Fraction],
    reference: Sequence[tuple[int, int]],
    offset: int = 0,
) -> CrosscheckReport:
    """Compare computed[i] with the reference value at index i + offset.

    Reference entries outside the computed range are ignored; an empty
    overlap counts as (vacuous) agreement.
    """
    compared = 0
    for index, value in reference:
        position = index - offset
        if not 0 <= position < len(computed):
            continue
        compared += 1
        if computed[position] != value:
            return CrosscheckReport(
                ok=False,
                compared=compared,
                mismatch_index=index,
                expected=Fraction(value),
                actual=computed[position],
            )
    return CrosscheckReport(ok=True, compared=compared)
