"""Spectral analysis of quiver adjacency: strongly connected components,
exact characteristic polynomials, certified Perron roots, and exact equality
and comparison of the resulting algebraic numbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistencyError
from .polynomials import (
    AlgebraicReal,
    IntPolynomial,
    algebraic_real,
    count_real_roots_open,
    isolate_largest_real_root,
    poly_gcd_q,
    rational_algebraic,
    resultant_y,
    squarefree_part,
)

IntMatrix = tuple[tuple[int, ...], ...]


def mat_from_rows(rows) -> IntMatrix:
    return tuple(tuple(int(c) for c in row) for row in rows)


def adjacency_matrix(graph, edges=None) -> IntMatrix:
    """Arrow-count matrix of (n, edges) or of any object with .digraph()."""
    if edges is None:
        n, edge_list = graph.digraph()
    else:
        n, edge_list = int(graph), list(edges)
    mat = [[0] * n for _ in range(n)]
    for u, v in edge_list:
        mat[u][v] += 1
    return mat_from_rows(mat)


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n, m = len(a), len(b[0]) if b else 0
    k = len(b)
    bt = list(zip(*b)) if b else []
    return tuple(
        tuple(sum(a[i][t] * bt[j][t] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def mat_trace(a: IntMatrix) -> int:
    return sum(a[i][i] for i in range(len(a)))


def char_poly(m: IntMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(xI - M), exact over the integers.

    Uses the trace recursion M_k = M (M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k,
    whose divisions are exact; each is asserted.
    """
    n = len(m)
    if n == 0:
        return IntPolynomial([1])
    coeffs_desc = [1]
    mk = m
    ck = -mat_trace(mk)
    coeffs_desc.append(ck)
    for k in range(2, n + 1):
        shifted = tuple(
            tuple(mk[i][j] + (ck if i == j else 0) for j in range(n))
            for i in range(n)
        )
        mk = mat_mul(m, shifted)
        tr = mat_trace(mk)
        if tr % k:
            raise InternalInconsistencyError(
                "characteristic polynomial trace recursion lost exactness"
            )
        ck = -tr // k
        coeffs_desc.append(ck)
    return IntPolynomial(reversed(coeffs_desc))


def perron_root(component) -> AlgebraicReal:
    """Spectral radius of a strongly connected component (or a raw adjacency
    matrix) as a certified algebraic number: the largest real root of the
    characteristic polynomial. Trivial loopless vertices get 0 (poly x)."""
    m = getattr(component, "matrix", component)
    p = char_poly(m)
    iso = isolate_largest_real_root(p)
    if iso is None:
        raise InternalInconsistencyError(
            "adjacency characteristic polynomial has no real root"
        )
    lo, hi = iso
    return algebraic_real(p, lo, hi, check=False).refined(Fraction(1, 2 ** 48))


@dataclass(frozen=True)
class SCC:
    """One strongly connected component: member vertices (original indices,
    ascending), internal adjacency counts, and its spectral radius."""

    vertices: tuple[int, ...]
    matrix: IntMatrix
    rho: AlgebraicReal

    @property
    def is_trivial(self) -> bool:
        return len(self.vertices) == 1 and self.matrix[0][0] == 0


@dataclass(frozen=True)
class Condensation:
    """SCC condensation. Components are listed in reverse topological order
    (every component precedes the components that reach it), so a forward scan
    visits each component after all of its successors."""

    n_vertices: int
    components: tuple[SCC, ...]
    vertex_component: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def successors(self, ci: int) -> tuple[int, ...]:
        return tuple(sorted(cj for (a, cj) in self.edges if a == ci))

    def reachable_components(self, ci: int) -> tuple[int, ...]:
        """Components reachable from ci, itself included, ascending order."""
        succ: dict[int, list[int]] = {}
        for a, b in self.edges:
            succ.setdefault(a, []).append(b)
        seen = {ci}
        stack = [ci]
        while stack:
            c = stack.pop()
            for nxt in succ.get(c, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return tuple(sorted(seen))

    def to_json(self) -> dict:
        return {
            "components": [
                {
                    "id": i,
                    "members": list(c.vertices),
                    "rho": c.rho.to_json(),
                }
                for i, c in enumerate(self.components)
            ],
            "arrows": [
                {"from": a, "to": b} for a, b in sorted(self.edges)
            ],
        }


def _digraph_of(graph, edges=None) -> tuple[int, list[tuple[int, int]]]:
    if edges is not None:
        return int(graph), list(edges)
    return graph.digraph()


def scc_condense(graph, edges=None) -> Condensation:
    """Tarjan condensation. Accepts (n, edges) or any object with .digraph().

    Deterministic: roots are tried in vertex order, neighbors in edge order,
    and Tarjan's pop order yields the reverse-topological component list.
    """
    n, edge_list = _digraph_of(graph, edges)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_list:
        adj[u].append(v)

    index_of = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    comp_members: list[list[int]] = []
    comp_of = [-1] * n

    for root in range(n):
        if index_of[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, ptr = work[-1]
            if ptr == 0:
                index_of[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(ptr, len(adj[v])):
                w = adj[v][i]
                if index_of[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index_of[v]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    members.append(w)
                    if w == v:
                        break
                ci = len(comp_members)
                members.sort()
                comp_members.append(members)
                for w in members:
                    comp_of[w] = ci

    comps: list[SCC] = []
    for members in comp_members:
        pos = {v: i for i, v in enumerate(members)}
        size = len(members)
        mat = [[0] * size for _ in range(size)]
        for u, v in edge_list:
            if u in pos and v in pos:
                mat[pos[u]][pos[v]] += 1
        matrix = mat_from_rows(mat)
        comps.append(SCC(tuple(members), matrix, perron_root(matrix)))

    dag_edges = set()
    for u, v in edge_list:
        if comp_of[u] != comp_of[v]:
            dag_edges.add((comp_of[u], comp_of[v]))

    return Condensation(n, tuple(comps), tuple(comp_of), frozenset(dag_edges))


# -- exact comparisons -------------------------------------------------------

def equal_radius(r1: AlgebraicReal, r2: AlgebraicReal) -> bool:
    """Exact equality of two certified algebraic reals.

    True iff the gcd of the defining polynomials has a real root inside the
    intersection of the isolating intervals; each interval holds exactly one
    root of its own polynomial, so such a shared root is both values at once.
    """
    a, b = r1, r2
    for _ in range(200):
        if a.hi < b.lo or b.hi < a.lo:
            return False
        if a.lo == a.hi and b.lo == b.hi:
            return a.lo == b.lo
        if a.lo == a.hi:
            q = a.lo
            return b.lo <= q <= b.hi and b.poly.evaluate(q) == 0
        if b.lo == b.hi:
            q = b.lo
            return a.lo <= q <= a.hi and a.poly.evaluate(q) == 0
        g = poly_gcd_q(squarefree_part(a.poly), squarefree_part(b.poly))
        if g.degree <= 0:
            return False
        x = max(a.lo, b.lo)
        y = min(a.hi, b.hi)
        if x >= y:
            return False
        if g.evaluate(x) != 0 and g.evaluate(y) != 0:
            return count_real_roots_open(g, x, y) >= 1
        a = a.refined((a.hi - a.lo) / 4)
        b = b.refined((b.hi - b.lo) / 4)
    raise InternalInconsistencyError("equal_radius failed to converge")


def compare_algebraic(r1: AlgebraicReal, r2: AlgebraicReal) -> int:
    """-1, 0, or 1; exact."""
    if equal_radius(r1, r2):
        return 0
    a, b = r1, r2
    for _ in range(10_000):
        if a.hi < b.lo:
            return -1
        if b.hi < a.lo:
            return 1
        if a.lo == a.hi and b.lo == b.hi:
            return -1 if a.lo < b.lo else 1
        if a.hi - a.lo >= b.hi - b.lo:
            a = a.refined((a.hi - a.lo) / 16)
        else:
            b = b.refined((b.hi - b.lo) / 16)
    raise InternalInconsistencyError("compare_algebraic failed to separate values")


def max_algebraic(values) -> AlgebraicReal:
    vals = list(values)
    if not vals:
        raise ValueError("max of empty sequence")
    best = vals[0]
    for v in vals[1:]:
        if compare_algebraic(v, best) > 0:
            best = v
    return best


def algebraic_power(r: AlgebraicReal, k: int) -> AlgebraicReal:
    """r^k as a certified algebraic number, for nonnegative r and k >= 1.

    Defining polynomial: Res_y(p(y), x - y^k), whose roots are the k-th powers
    of the roots of p. The isolating interval [lo^k, hi^k] is validated by a
    Sturm count and the source interval is refined until it isolates."""
    if k < 1:
        raise ValueError("power must be >= 1")
    if r.lo < 0:
        raise ValueError("algebraic_power requires a nonnegative value")
    if r.lo == r.hi:
        return rational_algebraic(r.lo ** k)
    sf = squarefree_part(r.poly)
    coeffs_a = [IntPolynomial([c]) for c in sf.coeffs]
    coeffs_b = [IntPolynomial()] * (k + 1)
    coeffs_b[0] = IntPolynomial([0, 1])  # x
    coeffs_b[k] = IntPolynomial([-1])
    q = resultant_y(coeffs_a, coeffs_b).primitive()
    cur = r
    for _ in range(200):
        lo, hi = cur.lo ** k, cur.hi ** k
        sq = squarefree_part(q)
        if (sq.evaluate(lo) != 0 and sq.evaluate(hi) != 0
                and count_real_roots_open(q, lo, hi) == 1):
            return algebraic_real(q, lo, hi, check=False).refined(
                Fraction(1, 2 ** 48)
            )
        cur = cur.refined((cur.hi - cur.lo) / 4)
    raise InternalInconsistencyError("algebraic_power failed to isolate")
