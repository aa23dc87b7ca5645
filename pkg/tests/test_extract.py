from fractions import Fraction

import pytest

from holoprove.algebraic import derive_algebraic
from holoprove.extract import (
    extract_recurrence,
    format_recurrence,
    parse_recurrence,
    verify_recurrence,
)
from holoprove.ode import LinearOde, find_first_order_ode
from holoprove.polynomials import UPoly
from holoprove.polytext import PolyParseError
from holoprove.sequences import ChouletSpec, PRecurrence, conv_terms, prec_eval

REFERENCE_SPEC = ChouletSpec(1, 1, 0, -1)


def n_poly(*coeffs):
    return UPoly(coeffs, "n")


def residual_at(rec, terms, n):
    """Recurrence residual at one index, treating negative indices as 0."""
    total = Fraction(0)
    for j, coeff in enumerate(rec.coefficients):
        if n - j >= 0:
            total += coeff(n) * terms[n - j]
    return total


@pytest.fixture(scope="module")
def reference_rec():
    cert = find_first_order_ode(derive_algebraic(REFERENCE_SPEC), 6)
    return extract_recurrence(cert.ode)


def test_reference_recurrence_coefficients(reference_rec):
    assert reference_rec.coefficients == (
        n_poly(1, 1),
        n_poly(2, -6),
        n_poly(-13, 9),
        n_poly(-4),
        n_poly(16, -4),
    )
    assert reference_rec.order == 4
    assert reference_rec.valid_from == 4


def test_reference_recurrence_residuals(reference_rec):
    terms = conv_terms(REFERENCE_SPEC, 251)
    report = verify_recurrence(reference_rec, terms)
    assert report.ok
    assert report.first_n == 4
    assert report.last_n == 250
    assert "n = 4..250" in report.describe()


def test_validity_threshold_is_sharp(reference_rec):
    # Below valid_from the homogeneous relation misses the inhomogeneous
    # right side, whose top coefficient is 2: the residual at n = 3 is
    # exactly that, and from n = 4 on it vanishes.
    terms = conv_terms(REFERENCE_SPEC, 12)
    assert residual_at(reference_rec, terms, 3) == 2
    assert residual_at(reference_rec, terms, 4) == 0
    assert residual_at(reference_rec, terms, 5) == 0


def test_recurrence_extends_the_sequence(reference_rec):
    terms = prec_eval(reference_rec, conv_terms(REFERENCE_SPEC, 4), 251, require_integers=True)
    assert terms == conv_terms(REFERENCE_SPEC, 251)


def test_detects_single_term_corruption(reference_rec):
    terms = conv_terms(REFERENCE_SPEC, 251)
    terms[100] += 1
    report = verify_recurrence(reference_rec, terms)
    assert not report.ok
    assert report.failure_n == 100
    assert report.residual != 0
    assert "n = 100" in report.describe()


def test_verify_recurrence_needs_terms(reference_rec):
    with pytest.raises(ValueError):
        verify_recurrence(reference_rec, conv_terms(REFERENCE_SPEC, 4))


def test_extract_without_shift():
    # G + z G' = 0 forces the zero series: (n+1) a(n) = 0 from the start.
    rec = extract_recurrence(LinearOde(UPoly.one(), UPoly([0, 1]), UPoly.zero()))
    assert rec.coefficients == (n_poly(1, 1),)
    assert rec.valid_from == 0
    assert prec_eval(rec, [], 5) == [0] * 5


def test_extract_euler_style_degeneracy():
    # z G' = G: only the n = 1 coefficient is unconstrained.
    rec = extract_recurrence(LinearOde(UPoly([-1]), UPoly([0, 1]), UPoly.zero()))
    assert rec.coefficients == (n_poly(-1, 1),)
    assert rec.valid_from == 0


def test_extract_with_unit_q1_shifts_index():
    # G' = G gives n a(n) - a(n-1) = 0, the exponential series.
    rec = extract_recurrence(LinearOde(UPoly([-1]), UPoly.one(), UPoly.zero()))
    assert rec.coefficients == (n_poly(0, 1), n_poly(-1))
    assert rec.valid_from == 1
    terms = prec_eval(rec, [1], 6)
    assert terms == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24), Fraction(1, 120)]


def test_extract_drops_common_z_factor():
    # z G + z^2 G' = z is G + z G' = 1 in disguise; the raw j = 0
    # coefficient vanishes and the index shift recovers (n+1) a(n) = 0
    # valid from 1, i.e. G is constant.
    rec = extract_recurrence(LinearOde(UPoly([0, 1]), UPoly([0, 0, 1]), UPoly([0, 1])))
    assert rec.coefficients == (n_poly(1, 1),)
    assert rec.valid_from == 1
    assert prec_eval(rec, [1], 5) == [1, 0, 0, 0, 0]


def test_extract_survives_double_z_factor():
    # z^2 G' = 0: the raw relation starts one index late; after the drop
    # the rule n a(n) = 0 leaves exactly the constant term free.
    rec = extract_recurrence(LinearOde(UPoly.zero(), UPoly([0, 0, 1]), UPoly.zero()))
    assert rec.coefficients == (n_poly(0, 1),)


def test_format_reference(reference_rec):
    assert format_recurrence(reference_rec) == (
        "(n+1)*a(n) + (-6*n+2)*a(n-1) + (9*n-13)*a(n-2) + (-4)*a(n-3)"
        " + (-4*n+16)*a(n-4) = 0  [n >= 4]"
    )


def test_parse_roundtrip(reference_rec):
    assert parse_recurrence(format_recurrence(reference_rec)) == reference_rec


def test_parse_tolerates_spacing():
    rec = parse_recurrence("( n + 1 )*a( n ) + (-1)*a( n - 1 ) = 0 [n >= 1]")
    assert rec.coefficients == (n_poly(1, 1), n_poly(-1))
    assert rec.valid_from == 1


def test_format_parse_order_zero():
    rec = PRecurrence((n_poly(-1, 1),), valid_from=0)
    text = format_recurrence(rec)
    assert text == "(n-1)*a(n) = 0  [n >= 0]"
    assert parse_recurrence(text) == rec


def test_format_parse_gap_coefficient():
    rec = PRecurrence((n_poly(1), UPoly.zero("n"), n_poly(-1)), valid_from=2)
    text = format_recurrence(rec)
    assert text == "(1)*a(n) + (-1)*a(n-2) = 0  [n >= 2]"
    assert parse_recurrence(text) == rec


def test_parse_errors():
    for bad in (
        "(n+1)*a(n) + 1",
        "(n+1)*a(n) = 0",
        "(n+1)*a(n) = 0  [n >= ]",
        "(n+1)*b(n) = 0  [n >= 1]",
        "(n+1)*a(n) + (n+1)*a(n) = 0  [n >= 1]",
        "(z+1)*a(n) = 0  [n >= 0]",
        " = 0  [n >= 0]",
    ):
        with pytest.raises(PolyParseError):
            parse_recurrence(bad)
