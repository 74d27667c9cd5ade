"""Coefficient ring arithmetic: rational functions in c, g-series, x-Laurent."""

import random
from fractions import Fraction

import pytest

from pottsloop.ring import (
    GSeries,
    Poly,
    RationalFunctionC,
    RF_C,
    RF_ONE,
    XLaurent,
    poly_gcd,
    rat_to_str,
    xlaurent_inverse,
    xlaurent_sqrt,
)


def rf(*coeffs):
    return RationalFunctionC.from_poly(Poly.from_fractions(coeffs))


def test_inverse_pair_multiplies_to_one():
    one_minus_c = rf(1, -1)
    inv = RF_ONE / one_minus_c
    assert inv * one_minus_c == RF_ONE


def test_division_cancels_common_factor():
    # 1 + c - 2c^2 = (1 - c)(1 + 2c)
    num = rf(1, 1, -2)
    assert rf(1, -1) * rf(1, 2) == num
    assert num / rf(1, 2) == rf(1, -1)


def test_additive_identity():
    assert RF_C + rf(0) == RF_C


def test_monic_denominator_normalisation():
    # (1)/(2 - 2c) -> (-1/2)/(c - 1)
    r = rf(1) / rf(2, -2)
    assert r.den.leading() == 1
    assert r.evaluate(Fraction(1, 2)) == 1


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        RF_ONE / rf(0)


def test_evaluate_at_c():
    assert (RF_ONE / rf(1, -1)).evaluate(Fraction(1, 2)) == 2
    assert rf(1, 1, -2).evaluate(1) == 0
    assert (RF_C * RF_C).evaluate(Fraction(1, 3)) == Fraction(1, 9)


def test_evaluate_at_pole_reports():
    with pytest.raises(ZeroDivisionError):
        (RF_ONE / rf(1, -1)).evaluate(1)


def test_poly_gcd_monic():
    a = Poly.from_fractions([1, 1, -2])  # (1-c)(1+2c)
    b = Poly.from_fractions([2, -2])     # 2(1-c)
    g = poly_gcd(a, b)
    assert g.leading() == 1
    assert g.degree == 1


def _random_rf(rng):
    num = Poly.from_fractions(
        [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
    )
    den = Poly.from_fractions(
        [Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(0, 2))] + [1]
    )
    return RationalFunctionC(num, den)


def test_ring_axioms_random_rational_functions():
    rng = random.Random(7)
    for _ in range(40):
        a, b, c = (_random_rf(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_self_division_is_one():
    rng = random.Random(11)
    for _ in range(20):
        a = _random_rf(rng)
        if not a.is_zero():
            assert a / a == RF_ONE


def test_evaluate_is_ring_homomorphism():
    rng = random.Random(13)
    pts = [Fraction(1, 5), Fraction(2, 7), Fraction(-3, 4)]
    for _ in range(25):
        a, b = _random_rf(rng), _random_rf(rng)
        for c0 in pts:
            try:
                va, vb = a.evaluate(c0), b.evaluate(c0)
                assert (a * b).evaluate(c0) == va * vb
                assert (a + b).evaluate(c0) == va + vb
            except ZeroDivisionError:
                continue


# -- GSeries -----------------------------------------------------------------


def test_gseries_product_truncates():
    one_plus_g = GSeries([1, 1], 2)
    one_minus_g = GSeries([1, -1], 2)
    assert one_plus_g * one_minus_g == GSeries([1, 0, -1], 2)

    g1 = GSeries.g_power(1, 1)
    assert (g1 * g1).is_zero()

    one_plus_cg = GSeries([RF_ONE, RF_C], 2)
    sq = one_plus_cg * one_plus_cg
    assert sq[0] == RF_ONE
    assert sq[1] == 2 * RF_C
    assert sq[2] == RF_C * RF_C


def test_gseries_mismatched_truncation_rejected():
    with pytest.raises(ValueError):
        GSeries.one(2) * GSeries.one(3)


def test_gseries_axioms_random():
    rng = random.Random(5)

    def rnd():
        return GSeries([Fraction(rng.randint(-3, 3)) for _ in range(4)], 3)

    for _ in range(30):
        a, b, c = rnd(), rnd(), rnd()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


# -- XLaurent ----------------------------------------------------------------


def test_xlaurent_monomial_products():
    nx, ng = 5, 2
    xm2 = XLaurent.x_power(-2, nx, ng)
    x3 = XLaurent.x_power(3, nx, ng)
    assert xm2 * x3 == XLaurent.x_power(1, nx, ng)

    one_plus_x = XLaurent.x_power(0, nx, ng) + XLaurent.x_power(1, nx, ng)
    one_minus_x = XLaurent.x_power(0, nx, ng) - XLaurent.x_power(1, nx, ng)
    prod = one_plus_x * one_minus_x
    assert prod.coefficient(0) == GSeries.one(ng)
    assert prod.coefficient(1).is_zero()
    assert prod.coefficient(2) == -GSeries.one(ng)

    g_over_x3 = XLaurent(-3, (GSeries.g_power(1, ng),), nx, ng)
    assert (g_over_x3 * XLaurent.x_power(2, nx, ng)).coefficient(-1) == GSeries.g_power(1, ng)


def test_xlaurent_truncates_above():
    nx, ng = 3, 1
    x2 = XLaurent.x_power(2, nx, ng)
    assert (x2 * x2).is_zero()


def test_xlaurent_low_floor_enforced():
    with pytest.raises(ValueError):
        XLaurent.x_power(-11, 3, 1)


def test_xlaurent_axioms_random():
    rng = random.Random(3)
    nx, ng = 4, 2

    def rnd():
        pairs = []
        for e in range(-2, 3):
            pairs.append((e, GSeries([Fraction(rng.randint(-2, 2)) for _ in range(3)], ng)))
        return XLaurent.from_coeffs(pairs, nx, ng)

    for _ in range(20):
        a, b, c = rnd(), rnd(), rnd()
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c


def test_xlaurent_inverse_and_sqrt():
    nx, ng = 6, 4
    one = XLaurent.x_power(0, nx, ng)
    x = XLaurent.x_power(1, nx, ng)
    g = XLaurent.constant(GSeries.g_power(1, ng), nx, ng)
    a = one - 4 * x * x + g * x
    inv = xlaurent_inverse(a)
    assert a * inv == one
    s = xlaurent_sqrt(a)
    assert s * s == a


def test_rational_string_forms():
    assert rat_to_str(Fraction(3, 2)) == "3/2"
    assert rat_to_str(Fraction(-4)) == "-4"
    assert str(rf(0, 1)) == "c"
    assert str(rf(1)) == "1"
    assert str(rf(1, 0, 2)) == "1+2*c^2"
    assert str(RF_ONE / rf(1, -1)) == "-1/(-1+c)"


def test_json_forms():
    p = Poly.from_fractions([1, 0, Fraction(-3, 2)])
    assert p.to_dict() == {"0": "1", "2": "-3/2"}
    assert Poly.from_dict(p.to_dict()) == p
    r = rf(1) / rf(1, -1)
    assert r.to_json() == {"num": {"0": "-1"}, "den": {"0": "-1", "1": "1"}}
