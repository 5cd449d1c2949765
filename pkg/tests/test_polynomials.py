"""Integer polynomials, Sturm root isolation, and algebraic reals.

Expected values are computed by hand (small determinants, explicit
expansions) or pinned against closed forms like the golden ratio."""

from fractions import Fraction

import pytest

from syzcx.polynomials import (
    IntPolynomial,
    poly,
    monomial_minus,
    poly_gcd_q,
    squarefree_part,
    count_real_roots_open,
    cauchy_bound,
    isolate_largest_real_root,
    refine_interval,
    fraction_str,
    decimal_places_12,
    algebraic_real,
    rational_algebraic,
    largest_real_root,
    det_bareiss_int,
    det_bareiss_poly,
)
from syzcx.errors import ZeroPolynomialError

PHI = (1 + 5 ** 0.5) / 2  # 1.6180339887498949

GOLDEN = poly(-1, -1, 1)  # x^2 - x - 1


def test_construction_strips_trailing_zeros():
    assert poly(1, 2, 0, 0).coeffs == (1, 2)
    assert poly(0, 0).coeffs == ()
    assert poly().is_zero


def test_immutability():
    p = poly(1, 2)
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


def test_structure_accessors():
    p = poly(-1, -1, 1)
    assert p.degree == 2
    assert p.lc == 1
    assert p.is_monic
    assert not poly(1, 2).is_monic
    assert poly(3).degree == 0
    assert poly().degree == -1
    with pytest.raises(ZeroPolynomialError):
        _ = poly().lc


def test_equality_and_hash():
    assert poly(1, 2) == poly(1, 2, 0)
    assert hash(poly(1, 2)) == hash(poly(1, 2, 0))
    assert poly(1, 2) != poly(2, 1)


def test_arithmetic():
    p = poly(1, 1)   # 1 + x
    q = poly(-1, 1)  # x - 1
    assert p + q == poly(0, 2)
    assert p - q == poly(2)
    assert -p == poly(-1, -1)
    assert p * q == poly(-1, 0, 1)  # x^2 - 1
    assert 3 * p == poly(3, 3)
    assert p * 0 == poly()


def test_evaluate_exact():
    p = poly(-1, -1, 1)
    assert p.evaluate(2) == 1
    assert p.evaluate(Fraction(1, 2)) == Fraction(-5, 4)


def test_derivative_and_compose_power():
    assert poly(5, 3, 1).derivative() == poly(3, 2)
    assert poly(1, -3, 1).compose_power(2) == poly(1, 0, -3, 0, 1)
    with pytest.raises(ValueError):
        poly(1, 1).compose_power(0)


def test_primitive():
    assert poly(2, 4, -6).primitive() == poly(-1, -2, 3)
    assert poly(-2, -4).primitive() == poly(1, 2)


def test_divmod_and_exact_division():
    num = poly(-1, 0, 1)  # (x-1)(x+1)
    quo, rem = num.divmod_q(poly(-1, 1))
    assert [Fraction(c) for c in quo] == [Fraction(1), Fraction(1)]
    assert not any(rem)
    assert num.div_exact(poly(-1, 1)) == poly(1, 1)
    with pytest.raises(ValueError):
        poly(1, 0, 1).div_exact(poly(-1, 1))
    with pytest.raises(ZeroPolynomialError):
        num.divmod_q(poly())


def test_monomial_minus():
    assert monomial_minus(Fraction(3, 2)) == poly(-3, 2)
    assert monomial_minus(2) == poly(-2, 1)


def test_poly_gcd():
    a = poly(-1, 0, 1) * poly(2, 1)   # (x^2-1)(x+2)
    b = poly(-1, 1) * poly(2, 1)      # (x-1)(x+2)
    g = poly_gcd_q(a, b).primitive()
    assert g == (poly(-1, 1) * poly(2, 1)).primitive()


def test_squarefree_part():
    p = poly(-1, 1) * poly(-1, 1) * poly(2, 1)
    assert squarefree_part(p).primitive() == (poly(-1, 1) * poly(2, 1)).primitive()


def test_count_real_roots_open():
    p = poly(-2, 0, 1)  # x^2 - 2
    assert count_real_roots_open(p, Fraction(0), Fraction(2)) == 1
    assert count_real_roots_open(p, Fraction(-2), Fraction(2)) == 2
    assert count_real_roots_open(p, Fraction(2), Fraction(3)) == 0


def test_cauchy_bound_dominates_roots():
    b = cauchy_bound(GOLDEN)
    assert b >= Fraction(17, 10)  # beyond the golden ratio


def test_isolate_largest_real_root_golden():
    lo, hi = isolate_largest_real_root(GOLDEN)
    assert lo < Fraction(16180339887498949, 10 ** 16) < hi


def test_isolate_largest_real_root_rational_hit():
    # Roots at +-2: bisection midpoints land on integers, which must not
    # derail the Sturm counting.
    lo, hi = isolate_largest_real_root(poly(-4, 0, 1))
    assert lo <= 2 <= hi
    assert largest_real_root(poly(-4, 0, 1)).midpoint == 2 or lo < 2 < hi \
        or (lo == hi == 2)


def test_isolate_no_real_roots():
    assert isolate_largest_real_root(poly(1, 0, 1)) is None
    assert largest_real_root(poly(1, 0, 1)) is None


def test_refine_interval():
    lo, hi = isolate_largest_real_root(GOLDEN)
    lo2, hi2 = refine_interval(GOLDEN, lo, hi, Fraction(1, 10 ** 9))
    assert hi2 - lo2 <= Fraction(1, 10 ** 9)
    assert abs(float((lo2 + hi2) / 2) - PHI) < 1e-9


def test_fraction_str():
    assert fraction_str(Fraction(3, 2)) == "3/2"
    assert fraction_str(Fraction(4)) == "4"


def test_decimal_places_12():
    assert decimal_places_12(Fraction(1)) == "1.000000000000"
    assert decimal_places_12(Fraction(1, 3)) == "0.333333333333"


def test_algebraic_real_certification():
    r = algebraic_real(GOLDEN, 1, 2)
    assert abs(r.as_float() - PHI) < 1e-12
    assert r.hi - r.lo <= Fraction(1, 2 ** 48)
    # Degenerate interval must actually be a root.
    with pytest.raises(ValueError):
        algebraic_real(GOLDEN, 1, 1)
    # Interval holding two roots is rejected.
    with pytest.raises(ValueError):
        algebraic_real(poly(-2, 0, 1), -2, 2)
    # Interval endpoint on a root is rejected.
    with pytest.raises(ValueError):
        algebraic_real(poly(-4, 0, 1), 2, 3)


def test_rational_algebraic_and_json():
    r = rational_algebraic(Fraction(3, 2))
    assert r.lo == r.hi == Fraction(3, 2)
    doc = r.to_json()
    assert doc["poly"] == [-3, 2]
    assert doc["interval"] == ["3/2", "3/2"]
    assert doc["approx"] == "1.500000000000"


def test_largest_real_root_certified():
    r = largest_real_root(GOLDEN)
    assert r.poly == GOLDEN
    assert abs(r.as_float() - PHI) < 1e-12


def test_det_bareiss_int():
    # Laplace expansion by hand: det [[2,1,0],[1,3,1],[0,1,4]] = 2*11 - 1*4 = 18.
    assert det_bareiss_int([[2, 1, 0], [1, 3, 1], [0, 1, 4]]) == 18
    assert det_bareiss_int([[1, 2], [3, 4]]) == -2
    assert det_bareiss_int([]) == 1


def test_det_bareiss_poly_char_poly_by_hand():
    # det(xI - [[0,1],[1,1]]) = x(x-1) - 1 = x^2 - x - 1.
    x = poly(0, 1)
    rows = [[x, poly(-1)], [poly(-1), x - poly(1)]]
    assert det_bareiss_poly(rows) == GOLDEN
