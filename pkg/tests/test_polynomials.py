import random
from fractions import Fraction

import pytest

from holoprove.polynomials import (
    BiPoly,
    UPoly,
    discriminant_w,
    fraction_content,
    rational_roots,
    rational_sqrt,
    resultant_w,
    squarefree_part,
    upoly_gcd,
)


def slow_mul(a, b):
    """Convolution-by-hand multiply, used as the oracle for UPoly.__mul__."""
    out = [Fraction(0)] * (len(a) + len(b) - 1 or 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += Fraction(x) * Fraction(y)
    return out


def rand_upoly(rng, max_deg=4, var="z"):
    deg = rng.randrange(-1, max_deg + 1)
    if deg < 0:
        return UPoly.zero(var)
    coeffs = [Fraction(rng.randrange(-5, 6), rng.randrange(1, 4)) for _ in range(deg)]
    coeffs.append(Fraction(rng.randrange(1, 6)))
    return UPoly(coeffs, var)


def test_trailing_zeros_are_stripped():
    p = UPoly([1, 2, 0, 0])
    assert p.degree == 1
    assert p.coeffs == (Fraction(1), Fraction(2))


def test_zero_degree_sentinel():
    assert UPoly.zero().degree == -1
    assert not UPoly.zero()
    assert UPoly.constant(3).degree == 0


def test_coefficient_out_of_range_is_zero():
    p = UPoly([1, 2])
    assert p.coefficient(5) == 0
    assert p.coefficient(1) == 2


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        UPoly([0.5])


def test_var_mismatch_rejected():
    with pytest.raises(ValueError):
        UPoly([1], "z") + UPoly([1], "n")


def test_mul_matches_convolution_oracle():
    # (1 - z) * (1 - z - z^2) expanded by hand.
    a = [1, -1]
    b = [1, -1, -1]
    expected = slow_mul(a, b)
    assert expected == [1, -2, 0, 1]
    assert (UPoly(a) * UPoly(b)).coeffs == tuple(expected)


def test_published_cofactor_factorization():
    # z - 6 z^2 + 9 z^3 - 4 z^5 factors as -z (z - 1) (2 z - 1) (2 z^2 + 3 z - 1).
    q1 = UPoly([0, 1, -6, 9, 0, -4])
    product = (
        UPoly([0, -1])
        * UPoly([-1, 1])
        * UPoly([-1, 2])
        * UPoly([-1, 3, 2])
    )
    assert q1 == product


def test_divrem_examples():
    num = UPoly([-1, 0, 1])
    den = UPoly([1, 1])
    quo, rem = num.divrem(den)
    assert quo == UPoly([-1, 1])
    assert rem == UPoly.zero()
    quo, rem = UPoly([1, 0, 1]).divrem(UPoly([1, 1]))
    assert quo == UPoly([-1, 1])
    assert rem == UPoly([2])


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        UPoly([1]).divrem(UPoly.zero())


def test_exact_div_rejects_inexact():
    with pytest.raises(ValueError):
        UPoly([1, 0, 1]).exact_div(UPoly([1, 1]))


def test_derivative_power_rule():
    # d/dz z^k = k z^(k-1), checked coefficient by coefficient.
    p = UPoly([3, -1, 4, 0, 2])
    expected = [Fraction(k) * p.coefficient(k) for k in range(1, 5)]
    assert p.derivative().coeffs == tuple(expected)
    assert UPoly.constant(7).derivative() == UPoly.zero()


def test_horner_evaluation():
    p = UPoly([1, -2, 3])
    z = Fraction(1, 2)
    assert p(z) == 1 - 2 * z + 3 * z * z


def test_shifted_arg():
    # p(n) = n^2 shifted by +1 gives (n+1)^2 = n^2 + 2n + 1.
    p = UPoly([0, 0, 1], "n")
    assert p.shifted_arg(1) == UPoly([1, 2, 1], "n")
    assert p.shifted_arg(0) == p


def test_content_and_primitive():
    p = UPoly([Fraction(2, 3), Fraction(4, 3), 2])
    assert p.content() == Fraction(2, 3)
    assert p.primitive() == UPoly([1, 2, 3])
    assert fraction_content([Fraction(6), Fraction(4)]) == 2


def test_equals_up_to_scalar():
    p = UPoly([1, -2, 0, 4])
    assert p.equals_up_to_scalar(p * Fraction(-3, 7))
    assert not p.equals_up_to_scalar(p + UPoly.one())
    assert UPoly.zero().equals_up_to_scalar(UPoly.zero())
    assert not UPoly.zero().equals_up_to_scalar(p)


def test_gcd_examples():
    a = UPoly([-1, 0, 1])  # (z-1)(z+1)
    b = UPoly([-1, 1]) * UPoly([2, 1])
    g = upoly_gcd(a, b)
    assert g == UPoly([-1, 1])
    assert upoly_gcd(a, UPoly.zero()) == a.primitive()


def test_squarefree_part():
    p = UPoly([-1, 2]) ** 2 * UPoly([3, 1])
    assert squarefree_part(p) == UPoly([-1, 2]) * UPoly([3, 1])


def test_rational_roots_of_published_cofactor():
    q1 = UPoly([0, 1, -6, 9, 0, -4])
    roots = dict(rational_roots(q1))
    assert roots == {Fraction(0): 1, Fraction(1): 1, Fraction(1, 2): 1}


def test_rational_roots_with_multiplicity():
    p = UPoly([-1, 2]) ** 2 * UPoly([3, 1])
    assert p == UPoly([3, -11, 8, 4])
    roots = dict(rational_roots(p))
    assert roots == {Fraction(1, 2): 2, Fraction(-3): 1}


def test_rational_roots_none():
    assert rational_roots(UPoly([1, 0, 1])) == []
    assert rational_roots(UPoly.constant(5)) == []


def test_resultant_two_by_two():
    # res(a0 + a1 w, b0 + b1 w) = a1 b0 - a0 b1 for linear polynomials.
    a = BiPoly((UPoly([2]), UPoly([0, 3])))
    b = BiPoly((UPoly([1, 1]), UPoly([5])))
    assert resultant_w(a, b) == UPoly([0, 3]) * UPoly([1, 1]) - UPoly([2]) * UPoly([5])


def test_resultant_of_common_factor_is_zero():
    f = BiPoly((UPoly([1, -1]), UPoly.one()))
    a = f * BiPoly((UPoly([0, 1]), UPoly([2])))
    b = f * BiPoly((UPoly([3]), UPoly([0, 0, 1])))
    assert resultant_w(a, b) == UPoly.zero()


def test_discriminant_matches_quadratic_formula():
    # For a w^2 + b w + c the discriminant is b^2 - 4 a c.
    p = BiPoly((UPoly([1, -1, -1]), UPoly([-1, 1]), UPoly([0, 1, -1])))
    a, b, c = p.wcoeff(2), p.wcoeff(1), p.wcoeff(0)
    assert discriminant_w(p) == b * b - a * c * 4


def test_discriminant_root_set():
    p = BiPoly((UPoly([1, -1, -1]), UPoly([-1, 1]), UPoly([0, 1, -1])))
    roots = {r for r, _ in rational_roots(discriminant_w(p))}
    # The two rational branch points; the remaining factor 2z^2 + 3z - 1
    # has no rational zeros.
    assert roots == {Fraction(1), Fraction(1, 2)}


def test_bipoly_operations():
    p = BiPoly((UPoly([0, 1]), UPoly([1])))  # z + w
    q = p * p
    assert q.wcoeff(0) == UPoly([0, 0, 1])
    assert q.wcoeff(1) == UPoly([0, 2])
    assert q.wcoeff(2) == UPoly.one()
    assert p.times_w() == BiPoly((UPoly.zero(), UPoly([0, 1]), UPoly([1])))
    assert q.partial_w() == p * 2
    assert q.partial_z() == p * 2
    assert q.evaluate(Fraction(2), Fraction(3)) == 25


def test_bipoly_degree_and_content():
    p = BiPoly((UPoly([Fraction(1, 2)]), UPoly.zero(), UPoly([Fraction(3, 2)])))
    assert p.deg_w == 2
    assert p.content() == Fraction(1, 2)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(0)) == 0
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


def test_ring_axioms_randomized():
    rng = random.Random(11)
    for _ in range(40):
        a, b, c = (rand_upoly(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a - b) + b == a
        assert a * (b * c) == (a * b) * c


def test_divrem_roundtrip_randomized():
    rng = random.Random(12)
    for _ in range(40):
        num = rand_upoly(rng, 6)
        den = rand_upoly(rng, 3)
        if not den:
            continue
        quo, rem = num.divrem(den)
        assert quo * den + rem == num
        assert rem.degree < den.degree


def test_derivative_leibniz_randomized():
    rng = random.Random(13)
    for _ in range(40):
        a, b = rand_upoly(rng), rand_upoly(rng)
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


def test_resultant_detects_shared_roots_randomized():
    rng = random.Random(14)
    for _ in range(20):
        shared = BiPoly((rand_upoly(rng, 2), UPoly.one()))
        a = shared * BiPoly((rand_upoly(rng, 2), UPoly.constant(rng.randrange(1, 4))))
        b = shared * BiPoly((rand_upoly(rng, 2), UPoly.constant(rng.randrange(1, 4))))
        assert resultant_w(a, b) == UPoly.zero()
