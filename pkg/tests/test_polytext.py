import random
from fractions import Fraction

import pytest

from holoprove.polynomials import BiPoly, UPoly
from holoprove.polytext import (
    PolyParseError,
    format_bipoly,
    format_upoly,
    parse_bipoly,
    parse_rational,
    parse_upoly,
)


def rand_upoly(rng, max_deg=5, var="z"):
    deg = rng.randrange(-1, max_deg + 1)
    if deg < 0:
        return UPoly.zero(var)
    coeffs = [Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)) for _ in range(deg)]
    coeffs.append(Fraction(rng.choice([-3, -1, 1, 2, 7])))
    return UPoly(coeffs, var)


def test_format_upoly_descending():
    p = UPoly([1, -1, -4, -4, 8])
    assert format_upoly(p) == "8*z^4 - 4*z^3 - 4*z^2 - z + 1"


def test_format_upoly_ascending():
    p = UPoly([1, -1, -1])
    assert format_upoly(p, descending=False) == "1 - z - z^2"


def test_format_upoly_compact():
    p = UPoly([2, -6], "n")
    assert format_upoly(p, compact=True) == "-6*n+2"
    assert format_upoly(UPoly([1], "n"), compact=True) == "1"


def test_format_upoly_edge_cases():
    assert format_upoly(UPoly.zero()) == "0"
    assert format_upoly(UPoly([0, 1])) == "z"
    assert format_upoly(UPoly([0, -1])) == "-z"
    assert format_upoly(UPoly([Fraction(-1, 2), 0, 1])) == "z^2 - 1/2"


def test_format_bipoly():
    p = BiPoly((UPoly([1, -1, -1]), UPoly([-1, 1]), UPoly([0, 1, -1])))
    assert format_bipoly(p) == "(z - z^2)*w^2 + (-1 + z)*w + (1 - z - z^2)"


def test_format_bipoly_edge_cases():
    # Identically zero w-coefficients are omitted from the rendering.
    assert format_bipoly(BiPoly.zero()) == "0"
    assert format_bipoly(BiPoly.one()) == "(1)"
    assert format_bipoly(BiPoly((UPoly.zero(), UPoly.one()))) == "(1)*w"


def test_parse_upoly_tolerates_styles():
    reference = UPoly([1, -1, -4, -4, 8])
    for text in (
        "8*z^4 - 4*z^3 - 4*z^2 - z + 1",
        "8z**4-4z**3-4z^2-z+1",
        "  1 - z - 4 z^2 - 4z^3 + 8 z^4 ",
        "+8*z^4 + (-4)*z^3 - 4*z^2 - z + 1",
    ):
        assert parse_upoly(text) == reference


def test_parse_upoly_fractions():
    assert parse_upoly("1/2 - 3/4*z") == UPoly([Fraction(1, 2), Fraction(-3, 4)])


def test_parse_upoly_other_variable():
    assert parse_upoly("n^2 - n", "n") == UPoly([0, -1, 1], "n")


def test_parse_upoly_rejects_second_variable():
    with pytest.raises(PolyParseError):
        parse_upoly("z + w")
    with pytest.raises(PolyParseError):
        parse_upoly("n + 1")


def test_parse_errors():
    for bad in ("", "z +", "z^", "2 ** z", "(1", "z 2 q", "1//2"):
        with pytest.raises(PolyParseError):
            parse_bipoly(bad)


def test_parse_bipoly():
    p = parse_bipoly("(z - z^2)*w^2 + (-1 + z)*w + (1 - z - z^2)")
    assert p == BiPoly((UPoly([1, -1, -1]), UPoly([-1, 1]), UPoly([0, 1, -1])))


def test_parse_bipoly_mixed_products():
    assert parse_bipoly("w*z*w - 2") == BiPoly((UPoly([-2]), UPoly.zero(), UPoly([0, 1])))
    assert parse_bipoly("(w - 1)*(w + 1)") == BiPoly((UPoly([-1]), UPoly.zero(), UPoly.one()))


def test_parse_bipoly_powers_of_sums():
    assert parse_bipoly("(1 - w)^2") == BiPoly((UPoly.one(), UPoly([-2]), UPoly.one()))


def test_parse_rational():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational(" 7 ") == 7
    with pytest.raises(PolyParseError):
        parse_rational("3/4/5")


def test_upoly_roundtrip_randomized():
    rng = random.Random(21)
    for _ in range(60):
        p = rand_upoly(rng)
        assert parse_upoly(format_upoly(p)) == p
        assert parse_upoly(format_upoly(p, descending=False)) == p
        assert parse_upoly(format_upoly(p, compact=True)) == p


def test_recurrence_coeff_roundtrip_randomized():
    rng = random.Random(22)
    for _ in range(40):
        p = rand_upoly(rng, 3, "n")
        assert parse_upoly(format_upoly(p, compact=True), "n") == p


def test_bipoly_roundtrip_randomized():
    rng = random.Random(23)
    for _ in range(40):
        p = BiPoly([rand_upoly(rng, 3) for _ in range(rng.randrange(1, 4))])
        assert parse_bipoly(format_bipoly(p)) == p


def test_str_uses_canonical_format():
    p = UPoly([1, -1, -4, -4, 8])
    assert str(p) == format_upoly(p)
    q = BiPoly((UPoly([1]), UPoly([0, 1])))
    assert str(q) == format_bipoly(q)
