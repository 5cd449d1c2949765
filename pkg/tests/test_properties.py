"""Seeded randomized property tests for the algebraic invariants the library
promises: multiplication in a monomial algebra is associative with zero as an
absorbing element, nonzero paths are closed under contiguous subwords, exact
comparisons form a total order, growth-class operations obey semiring-style
laws, partial resolution data never overstates complexity, and the two
independent dimension pipelines agree."""

import json
import random
from fractions import Fraction

import pytest

from syzcx.algebra import PathZero, contiguous_subpaths
from syzcx.complexity import (
    compare,
    convolve,
    join,
    lower_bound_from_partial,
    module_complexity,
    polyexp_class,
    zero_class,
)
from syzcx.oracle import crosscheck
from syzcx.polynomials import (
    algebraic_real,
    det_bareiss_poly,
    monomial_minus,
    poly,
    rational_algebraic,
)
from syzcx.spectra import char_poly, compare_algebraic, equal_radius
from syzcx.syzygy import (
    SyzygyQuiver,
    build_syzygy_quiver,
    resolve_module,
    simple_key,
    singleton,
    syzygy_quiver_from_json,
    syzygy_step,
)

from conftest import random_rsz_algebras

SEED = 0x5EED


# -- path arithmetic -------------------------------------------------------------

def _sample_paths(A, rng, count):
    pool = [p for v in A.quiver.vertices for p in A.paths_from(v)]
    return [rng.choice(pool) for _ in range(count)]


@pytest.mark.parametrize("algebra_name", ["fib", "chain", "twostep"])
def test_extend_is_associative(algebra_name, request):
    A = request.getfixturevalue(algebra_name)
    rng = random.Random(SEED)
    for _ in range(300):
        p, q, r = _sample_paths(A, rng, 3)
        left = A.extend(A.extend(p, q), r)
        right = A.extend(p, A.extend(q, r))
        assert left == right


@pytest.mark.parametrize("algebra_name", ["fib", "chain", "loop3"])
def test_zero_absorbs_under_extend(algebra_name, request):
    A = request.getfixturevalue(algebra_name)
    rng = random.Random(SEED)
    z = PathZero()
    for p in _sample_paths(A, rng, 40):
        assert A.extend(p, z) == z
        assert A.extend(z, p) == z


@pytest.mark.parametrize("algebra_name", ["fib", "chain", "twostep", "loop3"])
def test_nonzero_paths_closed_under_subwords(algebra_name, request):
    A = request.getfixturevalue(algebra_name)
    for v in A.quiver.vertices:
        for p in A.paths_from(v):
            assert A.is_nonzero(p)
            for sub in contiguous_subpaths(A.quiver, p):
                assert A.is_nonzero(sub)


def test_paths_from_is_sorted_and_duplicate_free(fib, chain):
    for A in (fib, chain):
        for v in A.quiver.vertices:
            ps = A.paths_from(v)
            keys = [A.path_sort_key(p) for p in ps]
            assert keys == sorted(keys)
            assert len(set(keys)) == len(keys)


# -- exact real arithmetic ----------------------------------------------------------

def _algebraic_pool():
    phi = algebraic_real(poly(-1, -1, 1), 1, 2)
    phi_again = algebraic_real(
        poly(1, 0, -3, 0, 1), Fraction(3, 2), Fraction(5, 3)
    )
    sqrt2 = algebraic_real(poly(-2, 0, 1), 1, 2)
    phi_sq = algebraic_real(poly(1, -3, 1), 2, 3)
    return [
        rational_algebraic(1),
        rational_algebraic(Fraction(3, 2)),
        rational_algebraic(Fraction(809, 500)),
        phi,
        phi_again,
        sqrt2,
        phi_sq,
        rational_algebraic(2),
        rational_algebraic(3),
    ]


def test_compare_algebraic_is_a_total_order():
    pool = _algebraic_pool()
    for a in pool:
        assert compare_algebraic(a, a) == 0
    for a in pool:
        for b in pool:
            s = compare_algebraic(a, b)
            assert s in (-1, 0, 1)
            assert s == -compare_algebraic(b, a)
    for a in pool:
        for b in pool:
            for c in pool:
                if compare_algebraic(a, b) <= 0 and compare_algebraic(b, c) <= 0:
                    assert compare_algebraic(a, c) <= 0


def test_equal_radius_is_an_equivalence():
    pool = _algebraic_pool()
    for a in pool:
        assert equal_radius(a, a)
    for a in pool:
        for b in pool:
            assert equal_radius(a, b) == equal_radius(b, a)
    for a in pool:
        for b in pool:
            for c in pool:
                if equal_radius(a, b) and equal_radius(b, c):
                    assert equal_radius(a, c)
    # the two constructions of the golden ratio collapse to one class
    phi_members = [x for x in pool if equal_radius(x, pool[3])]
    assert len(phi_members) == 2


def test_compare_agrees_with_float_approximation():
    pool = _algebraic_pool()
    for a in pool:
        for b in pool:
            fa, fb = a.as_float(), b.as_float()
            if abs(fa - fb) > 1e-6:
                assert compare_algebraic(a, b) == (1 if fa > fb else -1)


# -- growth class laws ---------------------------------------------------------------

def _class_pool():
    phi = algebraic_real(poly(-1, -1, 1), 1, 2)
    pool = [zero_class(0), zero_class(2)]
    for base in (rational_algebraic(1), rational_algebraic(2), phi):
        for degree in (0, 1, 2):
            pool.append(polyexp_class(base, degree))
    return pool


def _ceq(c1, c2):
    return (
        c1.kind == c2.kind
        and compare(c1, c2) == 0
        and c1.pd == c2.pd
        and c1.degree == c2.degree
    )


def test_join_and_convolve_are_commutative():
    pool = _class_pool()
    for a in pool:
        for b in pool:
            assert _ceq(join(a, b), join(b, a))
            assert _ceq(convolve(a, b), convolve(b, a))


def test_join_and_convolve_are_associative():
    rng = random.Random(SEED)
    pool = _class_pool()
    for _ in range(200):
        a, b, c = (rng.choice(pool) for _ in range(3))
        assert _ceq(join(join(a, b), c), join(a, join(b, c)))
        assert _ceq(convolve(convolve(a, b), c), convolve(a, convolve(b, c)))


def test_join_dominates_both_arguments():
    pool = _class_pool()
    for a in pool:
        for b in pool:
            j = join(a, b)
            assert compare(j, a) >= 0
            assert compare(j, b) >= 0


def test_convolve_dominates_join():
    pool = _class_pool()
    for a in pool:
        for b in pool:
            assert compare(convolve(a, b), join(a, b)) >= 0


def test_zero_support_is_neutral_for_convolve():
    pool = _class_pool()
    z = zero_class(0)
    for c in pool:
        out = convolve(z, c)
        assert out.kind == c.kind
        assert compare(out, c) == 0
        assert out.degree == c.degree


def test_join_is_idempotent():
    for c in _class_pool():
        assert _ceq(join(c, c), c)


# -- partial data gives lower bounds ---------------------------------------------------

def _truncations(q, rng, count):
    n = len(q.labels)
    out = []
    for _ in range(count):
        m = rng.randint(1, n)
        arrows = tuple(a for a in q.arrows if a[0] < m and a[1] < m)
        out.append(SyzygyQuiver(q.algebra, q.labels, arrows, q.start,
                                partial=True))
    return out


def test_truncated_quiver_never_overstates_complexity():
    rng = random.Random(SEED)
    checked = 0
    for A in random_rsz_algebras(seed=SEED, count=6):
        for v in A.quiver.vertices:
            M = singleton(simple_key(A, v))
            q = build_syzygy_quiver(M, A)
            full = module_complexity(A, M).cls
            for t in _truncations(q, rng, 4):
                lb = lower_bound_from_partial(t, q.start[0][0])
                assert compare(lb, full) <= 0
                checked += 1
    assert checked >= 20


# -- determinant backing for characteristic polynomials ----------------------------------

def test_char_poly_matches_direct_determinant():
    rng = random.Random(SEED)
    for _ in range(25):
        n = rng.randint(1, 5)
        m = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        rows = [
            [
                monomial_minus(m[i][j]) if i == j else poly(-m[i][j])
                for j in range(n)
            ]
            for i in range(n)
        ]
        assert det_bareiss_poly(rows) == char_poly(m)


# -- structural coherence on random algebras ----------------------------------------------

def test_quiver_json_round_trips_on_random_algebras():
    for A in random_rsz_algebras(seed=SEED + 1, count=5):
        v = A.quiver.vertices[0]
        q = build_syzygy_quiver(singleton(simple_key(A, v)), A)
        doc = json.loads(json.dumps(q.to_json()))
        q2 = syzygy_quiver_from_json(doc, A)
        assert q2.labels == q.labels
        assert q2.arrows == q.arrows
        assert q2.start == q.start


def test_out_expr_matches_syzygy_step_on_random_algebras():
    for A in random_rsz_algebras(seed=SEED + 2, count=5):
        v = A.quiver.vertices[-1]
        q = build_syzygy_quiver(singleton(simple_key(A, v)), A)
        for i, label in enumerate(q.labels):
            assert q.out_expr(i) == syzygy_step(label, A)


def test_pipelines_agree_on_random_algebras():
    for A in random_rsz_algebras(seed=SEED + 3, count=6):
        for v in A.quiver.vertices:
            report = crosscheck(A, singleton(simple_key(A, v)), 8)
            assert report.agree, (A.name, v, report)


def test_pipelines_agree_on_fixture_algebras(fib, chain, loop3, twostep):
    for A in (fib, chain, loop3, twostep):
        for v in A.quiver.vertices:
            report = crosscheck(A, singleton(simple_key(A, v)), 8)
            assert report.agree, (A.name, v, report)
