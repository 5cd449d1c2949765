"""Which numbers occur as growth bases, and how to build witnesses.

A base is realizable exactly when it is a nonnegative algebraic integer that
no conjugate exceeds in modulus (equality allowed). The checker factors the
input as far as rational-root extraction and quartic splitting go, then tests
the factor holding the dominant real root b. The modulus test is exact: the
largest real root of the pairwise product polynomial (roots = all products of
two roots of the factor) equals b^2 precisely when no conjugate beats b, since
z * conj(z) is such a product for every root z. Floating-point root discs are
computed only as reported diagnostics, never to decide a verdict.

Also here: the closure operations (sum, product, l-th root of the root set,
via Sylvester resultants over the integers) and the companion-quiver
construction realizing any monic x^{s+1} - a_0 x^s - ... - a_s with a_i >= 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Arrow, Quiver
from .errors import (
    NonMonicInputError,
    NotMonicError,
    TrailingZeroError,
    ZeroConstantTermError,
    ZeroPolynomialError,
)
from .polynomials import (
    AlgebraicReal,
    IntPolynomial,
    algebraic_real,
    isolate_largest_real_root,
    largest_real_root,
    poly,
    rational_algebraic,
    resultant_y,
    squarefree_part,
)
from .spectra import algebraic_power, compare_algebraic, equal_radius

_ZERO = rational_algebraic(0)


@dataclass(frozen=True)
class CurvatureVerdict:
    """Outcome of the realizability check.

    irreducibility: how the judged factor was certified — "verified" (the
    input itself was proven irreducible), "reducible_factored" (the input
    split; the relevant factor was judged), "assumed" (caller vouched), or
    "unknown" (factorization incomplete; verdict is indeterminate).
    """

    status: str
    b: AlgebraicReal | None
    reason: str
    irreducibility: str

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "b": self.b.to_json() if self.b is not None else None,
            "irreducibility": self.irreducibility,
            "reason": self.reason,
        }


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _extract_integer_roots(g: IntPolynomial) -> tuple[list[IntPolynomial], IntPolynomial]:
    """Split off (x - d) factors for integer roots d of a monic polynomial.
    Rational roots of monic integer polynomials are integers, so this removes
    every linear factor over the rationals."""
    factors: list[IntPolynomial] = []
    while g.degree >= 1 and g.coeffs[0] == 0:
        factors.append(poly(0, 1))
        g = g.div_exact(poly(0, 1))
    found = True
    while found and g.degree >= 1:
        found = False
        for d in _divisors(g.coeffs[0]):
            for r in (d, -d):
                if g.evaluate(r) == 0:
                    factors.append(poly(-r, 1))
                    g = g.div_exact(poly(-r, 1))
                    found = True
                    break
            if found:
                break
    return factors, g


def _split_quartic(g: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial] | None:
    """Try to write a monic integer quartic without rational roots as a
    product of two monic integer quadratics."""
    a, b, c = g.coeffs[3], g.coeffs[2], g.coeffs[1]
    d = g.coeffs[0]
    for q in _divisors(d):
        for q_signed in (q, -q):
            s = d // q_signed
            if q_signed * s != d:
                continue
            if s == q_signed:
                if a * q_signed != c:
                    continue
                # p + r = a, p*r = b - 2q: integer roots of t^2 - a t + (b-2q)
                disc = a * a - 4 * (b - 2 * q_signed)
                if disc < 0:
                    continue
                root = math.isqrt(disc)
                if root * root != disc or (a + root) % 2:
                    continue
                p_co = (a + root) // 2
                r_co = a - p_co
            else:
                num = c - a * q_signed
                den = s - q_signed
                if num % den:
                    continue
                p_co = num // den
                r_co = a - p_co
                if p_co * r_co + q_signed + s != b:
                    continue
            f1 = poly(q_signed, p_co, 1)
            f2 = poly(s, r_co, 1)
            if f1 * f2 == g:
                return f1, f2
    return None


def factor_monic_squarefree(p: IntPolynomial) -> tuple[list[IntPolynomial], bool]:
    """Best-effort irreducible factorization of a monic squarefree integer
    polynomial: rational-root extraction, then quartic splitting. Returns
    (monic factors, complete). Degrees 2 and 3 without rational roots are
    irreducible over the rationals; an unsplit remainder of degree >= 5 makes
    the result incomplete."""
    factors, g = _extract_integer_roots(p)
    if g.degree == 0:
        return factors, True
    if g.degree <= 3:
        factors.append(g)
        return factors, True
    if g.degree == 4:
        split = _split_quartic(g)
        if split is None:
            factors.append(g)
        else:
            factors.extend(split)
        return factors, True
    factors.append(g)
    return factors, False


def _refined_nonnegative(r: AlgebraicReal) -> AlgebraicReal:
    """Shrink the isolating interval of a positive value until lo >= 0."""
    while r.lo < 0:
        r = r.refined((r.hi - r.lo) / 4)
    return r


def product_polynomial(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Monic integer polynomial annihilating every product of a root of p
    with a root of q, via Res_y(q(y), y^m p(x/y)). Requires q(0) != 0."""
    if q.coeffs[0] == 0:
        raise ZeroConstantTermError("product closure needs q(0) != 0")
    m = p.degree
    a_coeffs = []
    for j in range(m + 1):
        cs = [0] * (m - j) + [p.coeffs[m - j]]
        a_coeffs.append(IntPolynomial(cs))
    res = resultant_y([IntPolynomial([c]) for c in q.coeffs], a_coeffs)
    if res.lc < 0:
        res = res * -1
    return res


def sum_polynomial(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Monic integer polynomial annihilating every sum of a root of p with a
    root of q, via Res_y(q(y), p(x - y))."""
    m = p.degree
    b_coeffs = []
    for j in range(m + 1):
        acc = [0] * (m - j + 1)
        for i in range(j, m + 1):
            acc[i - j] = (-1) ** j * p.coeffs[i] * math.comb(i, j)
        b_coeffs.append(IntPolynomial(acc))
    res = resultant_y([IntPolynomial([c]) for c in q.coeffs], b_coeffs)
    if res.lc < 0:
        res = res * -1
    return res


def closure_combine(p: IntPolynomial, q: IntPolynomial, op: str,
                    ell: int = 1) -> IntPolynomial:
    """Closure of root sets under sum, product, or l-th roots.

    op "sum" / "product": Sylvester-resultant constructions annihilating
    b + c and b * c for roots b of p and c of q. op "root": p(x^ell), which
    annihilates every ell-th root of a root of p; q is ignored.
    """
    if p.is_zero:
        raise ZeroPolynomialError("p is the zero polynomial")
    if not p.is_monic:
        raise NonMonicInputError("p is not monic")
    if op == "root":
        if ell < 1:
            raise ValueError("root index must be >= 1")
        return p.compose_power(ell)
    if q.is_zero:
        raise ZeroPolynomialError("q is the zero polynomial")
    if not q.is_monic:
        raise NonMonicInputError("q is not monic")
    if op == "sum":
        return sum_polynomial(p, q)
    if op == "product":
        return product_polynomial(p, q)
    raise ValueError(f"unknown closure op {op!r}")


# -- diagnostics: simultaneous root refinement --------------------------------

def modulus_disc_bounds(p: IntPolynomial, iterations: int = 200) -> list[float]:
    """Upper bounds on the moduli of all complex roots, one per root, from
    simultaneous (Weierstrass) iteration: each disc centered at an iterate
    with radius degree * |correction| contains a root, and together the discs
    cover the root set. Diagnostic quality only; exact decisions elsewhere."""
    n = p.degree
    if n <= 0:
        return []
    cs = [c / p.coeffs[n] for c in p.coeffs]
    bound = 1.0 + max(abs(c) for c in cs[:-1]) if n else 1.0

    def val(z: complex) -> complex:
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    z = [bound * 0.7 * cmath.exp(2j * cmath.pi * (k + 0.25) / n)
         for k in range(n)]
    for _ in range(iterations):
        w = []
        for k in range(n):
            denom = 1.0 + 0j
            for j in range(n):
                if j != k:
                    d = z[k] - z[j]
                    if abs(d) < 1e-280:
                        d = 1e-280
                    denom *= d
            w.append(val(z[k]) / denom)
        z = [zk - wk for zk, wk in zip(z, w)]
        if max(abs(wk) for wk in w) < 1e-14 * max(1.0, bound):
            break
    out = []
    for k in range(n):
        denom = 1.0 + 0j
        for j in range(n):
            if j != k:
                d = z[k] - z[j]
                if abs(d) < 1e-280:
                    d = 1e-280
                denom *= d
        radius = n * abs(val(z[k]) / denom) * (1 + 1e-9)
        out.append(abs(z[k]) + radius)
    return out


# -- the decision -------------------------------------------------------------

def check_condition_c(p: IntPolynomial,
                      assume_irreducible: bool = False) -> CurvatureVerdict:
    """Decide whether the dominant real root of p is a realizable base.

    Realizable means: p (or the certified irreducible factor containing its
    largest real root) has a nonnegative real root b and no root of that
    factor exceeds b in modulus; modulus equality is allowed. The modulus
    condition is decided exactly by comparing b^2 with the largest real root
    of the pairwise product polynomial of the factor."""
    if p.is_zero:
        raise ZeroPolynomialError("cannot judge the zero polynomial")
    if not p.is_monic:
        raise NotMonicError(
            "the polynomial is not monic; its roots are not algebraic integers"
        )
    sf = squarefree_part(p)
    if assume_irreducible:
        factors, irr = [sf], "assumed"
    else:
        factors, complete = factor_monic_squarefree(sf)
        if not complete:
            return CurvatureVerdict(
                "indeterminate", None,
                "no certified irreducible factorization (degree >= 5 "
                "remainder); re-run with assume_irreducible if known",
                "unknown",
            )
        irr = "verified" if len(factors) == 1 and sf == p else "reducible_factored"

    best: AlgebraicReal | None = None
    best_factor: IntPolynomial | None = None
    for f in factors:
        iso = isolate_largest_real_root(f)
        if iso is None:
            continue
        r = algebraic_real(f, iso[0], iso[1], check=False).refined(
            Fraction(1, 2 ** 48)
        )
        if best is None or compare_algebraic(r, best) > 0:
            best, best_factor = r, f
    if best is None:
        return CurvatureVerdict(
            "not_realizable", None, "no real root", irr
        )
    if compare_algebraic(best, _ZERO) < 0:
        return CurvatureVerdict(
            "not_realizable", None, "the largest real root is negative", irr
        )

    f = best_factor
    if f.degree == 1:
        return CurvatureVerdict(
            "realizable", best, "rational nonnegative integer root", irr
        )
    while f.coeffs[0] == 0:
        f = f.div_exact(poly(0, 1))
    if compare_algebraic(best, _ZERO) == 0:
        if f.degree == 0:
            return CurvatureVerdict("realizable", best, "the zero base", irr)
        return CurvatureVerdict(
            "not_realizable", None,
            "a nonzero conjugate dominates the candidate 0", irr,
        )
    b = _refined_nonnegative(best)
    mu = largest_real_root(product_polynomial(f, f))
    if mu is not None and equal_radius(mu, algebraic_power(b, 2)):
        return CurvatureVerdict(
            "realizable", b,
            "no conjugate exceeds the dominant real root in modulus", irr,
        )
    return CurvatureVerdict(
        "not_realizable", None,
        "a conjugate exceeds the dominant real root in modulus", irr,
    )


# -- companion realization -----------------------------------------------------

def companion_polynomial(coeffs) -> IntPolynomial:
    """x^{s+1} - a_0 x^s - a_1 x^{s-1} - ... - a_s for coeffs (a_0..a_s)."""
    cs = [int(c) for c in coeffs]
    asc = [-c for c in reversed(cs)] + [1]
    return IntPolynomial(asc)


def realize_companion(coeffs) -> Quiver:
    """Strongly connected quiver whose adjacency characteristic polynomial is
    x^{s+1} - a_0 x^s - ... - a_s: a chain v0 -> v1 -> ... -> vs plus a_i
    arrows v_i -> v0. Needs every a_i >= 0 and a_s >= 1 (a_s = 0 would
    disconnect the last vertex from the cycle)."""
    cs = [int(c) for c in coeffs]
    if not cs:
        raise ValueError("need at least one coefficient")
    if any(c < 0 for c in cs):
        raise ValueError("coefficients must be nonnegative")
    if cs[-1] == 0:
        raise TrailingZeroError(
            "the last coefficient is zero; the realizing quiver would not "
            "be strongly connected"
        )
    s = len(cs) - 1
    vertices = tuple(f"v{i}" for i in range(s + 1))
    arrows: list[Arrow] = []
    for i in range(s):
        arrows.append(Arrow(f"c{i}", f"v{i}", f"v{i+1}"))
    for i, a in enumerate(cs):
        for t in range(a):
            arrows.append(Arrow(f"b{i}_{t}", f"v{i}", "v0"))
    return Quiver(vertices, tuple(arrows))
