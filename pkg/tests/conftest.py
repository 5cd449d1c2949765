"""Shared fixtures: small algebras with hand-checkable resolutions and a
seeded generator of radical-square-zero algebras (every length-2 path a
relation)."""

import random

import pytest

from syzcx.algebra import parse_algebra, validate_algebra

# Two vertices; the only nonzero paths are the trivial ones and the three
# arrows, so dim P(1) = 2, dim P(2) = 3 and the syzygy dimensions of S1
# satisfy the Fibonacci recursion.
FIB_TEXT = """\
algebra fib
vertex 1
vertex 2
arrow a : 1 -> 2
arrow b : 2 -> 1
arrow g : 2 -> 2
relation a.b
relation a.g
relation b.a
relation g.b
relation g.g
module S1 = S(1)
module S2 = S(2)
module P1 = P(1)
module Mix = 2*S(1) + P(2)
"""

# Truncated polynomial ring k[x]/(x^3): syzygies of k alternate between the
# radical (dim 2) and the socle (dim 1).
LOOP3_TEXT = """\
algebra loop3
vertex 1
arrow x : 1 -> 1
relation x.x.x
module S1 = S(1)
"""

# One relation of length 4 on the alternating two-cycle.
TWOSTEP_TEXT = """\
algebra twostep
vertex 1
vertex 2
arrow u : 1 -> 2
arrow v : 2 -> 1
relation u.v.u.v
module S1 = S(1)
"""

# Two-vertex path quiver with no relations: S(1) has projective dimension 1.
A2_TEXT = """\
algebra a2
vertex 1
vertex 2
arrow a : 1 -> 2
module S1 = S(1)
"""

# Three-cycle with a truncated loop hanging at vertex 2 and two length-3
# relations; exercises relations of mixed lengths.
CHAIN_TEXT = """\
algebra chain
vertex 1
vertex 2
vertex 3
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow c : 3 -> 1
arrow d : 2 -> 2
relation a.d
relation d.b
relation d.d
relation c.a.b
relation b.c.a
module S1 = S(1)
"""


def make_algebra(text):
    return validate_algebra(parse_algebra(text))


@pytest.fixture(scope="session")
def fib():
    return make_algebra(FIB_TEXT)


@pytest.fixture(scope="session")
def loop3():
    return make_algebra(LOOP3_TEXT)


@pytest.fixture(scope="session")
def twostep():
    return make_algebra(TWOSTEP_TEXT)


@pytest.fixture(scope="session")
def a2():
    return make_algebra(A2_TEXT)


@pytest.fixture(scope="session")
def chain():
    return make_algebra(CHAIN_TEXT)


def fibonacci_numbers(count):
    fs = [1, 1]
    while len(fs) < count:
        fs.append(fs[-1] + fs[-2])
    return fs[:count]


def random_rsz_text(rng: random.Random, max_vertices=6, max_arrows=10):
    """Random radical-square-zero algebra file: a random quiver plus every
    composable length-2 path as a relation."""
    nv = rng.randint(1, max_vertices)
    na = rng.randint(1, max_arrows)
    arrows = [(f"a{i}", rng.randrange(nv), rng.randrange(nv))
              for i in range(na)]
    lines = ["algebra rsz"]
    lines += [f"vertex v{i}" for i in range(nv)]
    lines += [f"arrow {n} : v{s} -> v{t}" for n, s, t in arrows]
    for n1, _, t1 in arrows:
        for n2, s2, _ in arrows:
            if t1 == s2:
                lines.append(f"relation {n1}.{n2}")
    return "\n".join(lines) + "\n"


def path_count_bound(text, steps=10):
    """Largest number of length-n paths (n <= steps) out of any vertex, from
    the adjacency matrix alone; bounds every syzygy dimension of a simple
    over the radical-square-zero algebra on that quiver."""
    spec = parse_algebra(text)
    verts = list(spec.quiver.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    mat = [[0] * n for _ in range(n)]
    for a in spec.quiver.arrows:
        mat[idx[a.source]][idx[a.target]] += 1
    row = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    worst = 1
    for _ in range(steps):
        row = [[sum(row[i][k] * mat[k][j] for k in range(n)) for j in range(n)]
               for i in range(n)]
        worst = max(worst, max(sum(r) for r in row))
    return worst


def random_rsz_algebras(seed, count, bound=100_000):
    """Deterministic stream of validated radical-square-zero algebras whose
    10-step path counts stay under `bound` (so oracle runs stay far below the
    dimension cap); oversized draws are skipped and redrawn."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        text = random_rsz_text(rng)
        if path_count_bound(text) > bound:
            continue
        out.append(make_algebra(text))
    return out
