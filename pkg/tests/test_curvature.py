"""Realizability of growth bases and the closure operations.

Expansion identities used as expected values, all checkable by hand:
  (x^2-x-1)^2 pairwise-product polynomial: roots phi^2, phi*psi (twice),
  psi^2 with phi*psi = -1, so it equals (x^2-3x+1)(x+1)^2
  = x^4 - x^3 - 4x^2 - x + 1.
  Substituting x^2 into x^2-3x+1 gives x^4-3x^2+1 = (x^2-x-1)(x^2+x-1).
"""

import pytest

from syzcx.polynomials import poly, largest_real_root, rational_algebraic
from syzcx.spectra import equal_radius, compare_algebraic, perron_root, char_poly
from syzcx.curvature import (
    CurvatureVerdict,
    factor_monic_squarefree,
    product_polynomial,
    sum_polynomial,
    closure_combine,
    modulus_disc_bounds,
    check_condition_c,
    companion_polynomial,
    realize_companion,
)
from syzcx.errors import NotMonicError, ZeroPolynomialError

GOLDEN = poly(-1, -1, 1)           # x^2 - x - 1
PHI_SQ = poly(1, -3, 1)            # x^2 - 3x + 1
PHI = (1 + 5 ** 0.5) / 2


# -- verdicts --------------------------------------------------------------------

def test_accepts_golden_ratio():
    v = check_condition_c(GOLDEN)
    assert v.status == "realizable"
    assert v.irreducibility == "verified"
    assert abs(v.b.as_float() - PHI) < 1e-9


def test_accepts_golden_square():
    v = check_condition_c(PHI_SQ)
    assert v.status == "realizable"
    assert abs(v.b.as_float() - PHI ** 2) < 1e-9


def test_rejects_no_real_root():
    v = check_condition_c(poly(1, 0, 1))  # x^2 + 1
    assert v.status == "not_realizable"
    assert v.b is None
    assert "no real root" in v.reason


def test_rejects_non_monic():
    with pytest.raises(NotMonicError):
        check_condition_c(poly(-1, 2))  # 2x - 1
    with pytest.raises(ZeroPolynomialError):
        check_condition_c(poly())


def test_modulus_tie_is_accepted():
    # x^2 - 2: conjugate -sqrt2 has the same modulus as sqrt2.
    v = check_condition_c(poly(-2, 0, 1))
    assert v.status == "realizable"
    assert abs(v.b.as_float() - 2 ** 0.5) < 1e-9


def test_accepts_two_plus_sqrt2():
    # x^2 - 4x + 2: roots 2 +- sqrt2, both positive; dominant 2+sqrt2.
    v = check_condition_c(poly(2, -4, 1))
    assert v.status == "realizable"
    assert abs(v.b.as_float() - (2 + 2 ** 0.5)) < 1e-9


def test_rejects_dominated_real_root():
    # x^2 + 3x + 1: largest real root (-3+sqrt5)/2 < 0.
    v = check_condition_c(poly(1, 3, 1))
    assert v.status == "not_realizable"


def test_reducible_input_judges_dominant_factor():
    # (x+1)(x^2-x-1) = x^3 - 2x - 1
    v = check_condition_c(poly(-1, -2, 0, 1))
    assert v.status == "realizable"
    assert v.irreducibility == "reducible_factored"
    assert abs(v.b.as_float() - PHI) < 1e-9


def test_zero_base_accepted():
    v = check_condition_c(poly(0, 1))  # x
    assert v.status == "realizable"
    assert v.b.as_float() == 0.0


def test_indeterminate_degree_five():
    # x^5 - x - 1 has no rational root and no certified factorization here.
    v = check_condition_c(poly(-1, -1, 0, 0, 0, 1))
    assert v.status == "indeterminate"
    assert v.irreducibility == "unknown"


def test_assume_irreducible_bypasses_factoring():
    v = check_condition_c(GOLDEN, assume_irreducible=True)
    assert v.status == "realizable"
    assert v.irreducibility == "assumed"


def test_verdict_json():
    doc = check_condition_c(GOLDEN).to_json()
    assert doc["status"] == "realizable"
    assert doc["b"]["approx"] == "1.618033988750"
    assert doc["irreducibility"] == "verified"


# -- factoring -------------------------------------------------------------------

def test_factor_integer_roots_and_quadratic():
    p = poly(-1, 1) * poly(2, 1) * PHI_SQ
    factors, complete = factor_monic_squarefree(p)
    assert complete
    assert sorted(f.to_list() for f in factors) == sorted(
        [[-1, 1], [2, 1], [1, -3, 1]]
    )


def test_factor_quartic_split():
    # (x^2-x-1)(x^2+x-1) = x^4 - 3x^2 + 1, no rational roots.
    p = poly(1, 0, -3, 0, 1)
    factors, complete = factor_monic_squarefree(p)
    assert complete
    assert sorted(f.to_list() for f in factors) == sorted(
        [[-1, -1, 1], [-1, 1, 1]]
    )


def test_factor_incomplete_degree_five():
    factors, complete = factor_monic_squarefree(poly(-1, -1, 0, 0, 0, 1))
    assert not complete


# -- closure operations ------------------------------------------------------------

def test_product_polynomial_golden():
    pp = product_polynomial(GOLDEN, GOLDEN)
    assert pp == poly(1, -1, -4, -1, 1)
    # phi^2 is a root: divisibility by x^2-3x+1 is exact.
    assert pp.div_exact(PHI_SQ) == poly(1, 2, 1)


def test_sum_polynomial_golden_sqrt2():
    sp = sum_polynomial(GOLDEN, poly(-2, 0, 1))
    assert sp == poly(-1, 6, -5, -2, 1)
    # phi + sqrt2 is among its roots.
    root = largest_real_root(sp)
    assert abs(root.as_float() - (PHI + 2 ** 0.5)) < 1e-9


def test_closure_combine_product_and_sum_match_direct():
    assert closure_combine(GOLDEN, GOLDEN, "product") == \
        product_polynomial(GOLDEN, GOLDEN)
    assert closure_combine(GOLDEN, poly(-2, 0, 1), "sum") == \
        sum_polynomial(GOLDEN, poly(-2, 0, 1))


def test_closure_combine_root():
    r = closure_combine(PHI_SQ, None, "root", 2)
    assert r == poly(1, 0, -3, 0, 1)
    assert r == GOLDEN * poly(-1, 1, 1)


def test_closure_combine_rejects_unknown_op():
    with pytest.raises(ValueError):
        closure_combine(GOLDEN, GOLDEN, "quotient")


def test_modulus_disc_bounds_cover_roots():
    bounds = modulus_disc_bounds(GOLDEN)
    assert len(bounds) == 2
    assert max(bounds) == pytest.approx(PHI, abs=1e-6)


# -- companion realization -----------------------------------------------------------

def test_companion_polynomial():
    assert companion_polynomial((1, 2)) == poly(-2, -1, 1)  # x^2 - x - 2
    assert companion_polynomial((1, 1)) == GOLDEN


def test_realize_companion_spectral_radius():
    q = realize_companion((1, 2))
    n, edges = q.digraph()
    mat = [[0] * n for _ in range(n)]
    for i, j in edges:
        mat[i][j] += 1
    cp = char_poly(tuple(tuple(r) for r in mat))
    assert cp == companion_polynomial((1, 2))
    rho = perron_root(tuple(tuple(r) for r in mat))
    assert equal_radius(rho, rational_algebraic(2))


def test_realize_companion_rejects_bad_coeffs():
    from syzcx.errors import TrailingZeroError
    with pytest.raises(ValueError):
        realize_companion((1, -2))
    with pytest.raises(ValueError):
        realize_companion(())
    with pytest.raises(TrailingZeroError):
        realize_companion((1, 0))  # x^2 - x: quiver would not be strongly connected
