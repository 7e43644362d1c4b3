"""Characteristic ideals of graphs and the algebraic co-rank.

The k-th characteristic ideal of a graph G on n vertices is the ideal of
Z[t] generated by all k x k minors of tI_n - A(G); the algebraic co-rank is
the largest k for which that ideal is the whole ring.  Evaluating the chain
of ideals at t = 0 recovers the invariant factors of the adjacency matrix,
and at t = r those of the Laplacian when G is r-regular.

Minor enumeration is full (all row/column pairs, lexicographic) but
deduplicates submatrix contents before computing determinants and
deduplicates polynomials up to sign before they reach the Groebner builder,
which interreduces after every insertion and stops the stream as soon as
the ideal is seen to be trivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph
from .intlinalg import ConsistencyError, IntMatrix, InvariantFactors, det_int, snf_diagonal
from .zpoly import ONE, ZERO, ZPoly
from .ztideal import GroebnerBuilder, IdealZt, reduce

_GENERATOR_CAP = 5000


def _det_poly(cmat, tpos):
    # determinant of (constant matrix) + t at the given positions, as a list
    if not tpos:
        d = det_int([row[:] for row in cmat])
        return [d] if d else []
    i, j = tpos[0]
    rest = tpos[1:]
    res = _det_poly(cmat, rest)
    sub = [[row[c] for c in range(len(row)) if c != j]
           for r, row in enumerate(cmat) if r != i]
    shifted = [(a - (a > i), b - (b > j)) for a, b in rest]
    tail = _det_poly(sub, shifted)
    if tail:
        need = len(tail) + 1
        if len(res) < need:
            res.extend([0] * (need - len(res)))
        if (i + j) & 1:
            for idx, c in enumerate(tail):
                res[idx + 1] -= c
        else:
            for idx, c in enumerate(tail):
                res[idx + 1] += c
    while res and not res[-1]:
        res.pop()
    return res


def _det_from_key(key, k):
    cmat = [[0] * k for _ in range(k)]
    tpos = []
    for j, (ti, colbits) in enumerate(key):
        if ti >= 0:
            tpos.append((ti, j))
        for i in range(k):
            if colbits >> i & 1:
                cmat[i][j] = -1
    tpos.sort()
    return tuple(_det_poly(cmat, tpos))


def _distinct_k_minor_polys(g, k):
    """Each distinct k-minor of tI - A(g) as a coefficient tuple, first-seen order.

    A submatrix is keyed per column by (row index holding t, adjacency bits
    against the chosen rows); tI - A is symmetric, so those column keys
    determine the determinant.
    """
    n = g.n
    adj = g.adj
    rng = range(n)
    dets = {}
    seen = set()
    for rows in combinations(rng, k):
        rowpos = {}
        for i, v in enumerate(rows):
            rowpos[v] = i
        rowsel = []
        for v in rng:
            m = adj[v]
            packed = 0
            for i, r in enumerate(rows):
                packed |= (m >> r & 1) << i
            rowsel.append(packed)
        get = rowpos.get
        for cols in combinations(rng, k):
            key = tuple((get(c, -1), rowsel[c]) for c in cols)
            if key in seen:
                continue
            seen.add(key)
            p = dets.get(key)
            if p is None:
                p = _det_from_key(key, k)
                dets[key] = p
            yield p


def characteristic_ideal(g, k):
    """Reduced Groebner basis of the ideal of all k-minors of tI - A(g)."""
    n = g.n
    if not 1 <= k <= n:
        raise ValueError(f"characteristic ideal index {k} out of range 1..{n}")
    builder = GroebnerBuilder()
    seen = set()
    gens = []
    for coeffs in _distinct_k_minor_polys(g, k):
        if not coeffs:
            continue
        if coeffs[-1] < 0:
            coeffs = tuple(-c for c in coeffs)
        if coeffs in seen:
            continue
        seen.add(coeffs)
        p = ZPoly(coeffs)
        gens.append(p)
        builder.add(p)
        if builder.is_unit:
            break
    basis = builder.basis
    generators = tuple(gens) if len(gens) <= _GENERATOR_CAP else basis
    return IdealZt(generators, basis=basis)


def algebraic_corank(g):
    """Largest k with the k-th characteristic ideal trivial (0 if none is).

    Computed bottom-up; the descending chain of ideals makes stopping at the
    first nontrivial one valid.
    """
    for k in range(1, g.n + 1):
        if not characteristic_ideal(g, k).is_trivial():
            return k - 1
    return g.n


@dataclass(frozen=True)
class CharIdealProfile:
    graph: Graph
    ideals: tuple  # 1-st .. n-th characteristic ideal
    gamma: int


def char_ideal_profile(g):
    ideals = tuple(characteristic_ideal(g, k) for k in range(1, g.n + 1))
    gamma = 0
    for ideal in ideals:
        if not ideal.is_trivial():
            break
        gamma += 1
    return CharIdealProfile(g, ideals, gamma)


def _invariants_by_evaluation(g, point):
    n = g.n
    factors = []
    prev = 1
    for k in range(1, n + 1):
        cur = characteristic_ideal(g, k).evaluate(point)
        if cur == 0:
            factors.extend([0] * (n - len(factors)))
            break
        if cur % prev:
            raise ConsistencyError(
                f"ideal evaluations at t={point} violate divisibility: {prev}, {cur}")
        factors.append(cur // prev)
        prev = cur
    return InvariantFactors(tuple(factors))


def smith_invariants_via_ideals(g):
    """Adjacency invariant factors read off the ideal chain at t = 0."""
    return _invariants_by_evaluation(g, 0)


def critical_invariants_regular(g):
    """Laplacian invariant factors of a regular graph via evaluation at the degree."""
    r = g.regular_degree()
    if r is None:
        raise ValueError(f"graph is not regular: degrees {sorted(set(g.degrees()))}")
    return _invariants_by_evaluation(g, r)


def _elem_sym(values):
    e = [1]
    for x in values:
        e.append(0)
        for a in range(len(e) - 1, 0, -1):
            e[a] += x * e[a - 1]
    return e


def multipartite_closed_form(parts, j):
    """The j-th characteristic ideal of a complete multipartite graph with the
    given part sizes (each at least 2), by closed formula.

    Trivial up to one below the number of parts; generated by
    (m-1)t^(j-m), t^(j-m+1) through the middle range; generated by shifted
    products of (t + part) together with weighted elementary-symmetric
    combinations over part subsets near the top; the characteristic
    polynomial itself at j = n.  Validated against direct minor computation
    in the test suite rather than trusted.
    """
    parts = tuple(int(p) for p in parts)
    m = len(parts)
    n = sum(parts)
    if m < 2:
        raise ValueError("need at least two parts")
    if any(p < 2 for p in parts):
        raise ValueError("all part sizes must be at least 2")
    if not 1 <= j <= n:
        raise ValueError(f"index {j} out of range 1..{n}")
    if j <= m - 1:
        return IdealZt.unit()
    if j <= n - m:
        return IdealZt((ZPoly.monomial(m - 1, j - m), ZPoly.monomial(1, j - m + 1)))
    if j < n:
        k = n - j  # 1 .. m-1
        gens = []
        for subset in combinations(range(m), m - k - 1):
            p = ZPoly.monomial(1, j - m + 1)
            for i in subset:
                p = p * ZPoly((parts[i], 1))
            gens.append(p)
        for subset in combinations(range(m), m - k):
            e = _elem_sym([parts[i] for i in subset])
            coeffs = [0] * (j - k + 1)
            for a in range(len(e)):
                coeffs[j - k - a] += (k - 1 + a) * e[a]
            gens.append(ZPoly(coeffs))
        return IdealZt(gens)
    e = _elem_sym(parts)
    coeffs = [0] * (n + 1)
    for a in range(m + 1):
        coeffs[n - a] = (1 - a) * e[a]
    return IdealZt((ZPoly(coeffs),))


def all_k_minors_in_ideal(g, k, ideal):
    """Do all k-minors of tI - A(g) lie in the given ideal?

    Fast path: when the basis is (m, t - a), membership of p is p(a) = 0
    mod m, and det commutes with evaluation, so the whole check is m
    dividing the gcd of the k-minors of the integer matrix aI - A(g), i.e.
    the product of its first k invariant factors.  Other ideals fall back
    to reducing every distinct minor.
    """
    basis = ideal.basis
    if basis == (ONE,):
        return True
    if (len(basis) == 2 and len(basis[0]) == 1
            and len(basis[1]) == 2 and basis[1][1] == 1):
        mod = basis[0][0]
        a = -basis[1][0]
        mat = [[(a if i == j else 0) - (g.adj[i] >> j & 1) for j in range(g.n)]
               for i in range(g.n)]
        prod = 1
        for d in snf_diagonal(IntMatrix(mat)).factors[:k]:
            prod *= d
        return prod % mod == 0
    for coeffs in _distinct_k_minor_polys(g, k):
        if coeffs and reduce(ZPoly(coeffs), basis):
            return False
    return True


class PolyMatrix:
    """Square matrix over Z[t]; the general (slow) route to minors."""

    __slots__ = ("n", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(e if isinstance(e, ZPoly) else ZPoly(e) for e in row)
                     for row in entries)
        self.n = len(rows)
        if any(len(r) != self.n for r in rows):
            raise ValueError("square matrices only")
        self.entries = rows

    @classmethod
    def characteristic(cls, g):
        """tI - A(g)."""
        t = ZPoly((0, 1))
        rows = []
        for i in range(g.n):
            rows.append(tuple(
                t if i == j else ZPoly.const(-(g.adj[i] >> j & 1))
                for j in range(g.n)))
        return cls(rows)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def minor(self, rows, cols):
        sub = [[self.entries[i][j] for j in cols] for i in rows]
        return _poly_det(sub)

    def det(self):
        return _poly_det([list(r) for r in self.entries])


def _poly_det(mat):
    """Cofactor expansion up to 4x4, fraction-free Bareiss beyond."""
    n = len(mat)
    if n == 0:
        return ONE
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if n <= 4:
        out = ZERO
        first = mat[0]
        rest = mat[1:]
        for j in range(n):
            c = first[j]
            if not c:
                continue
            sub = [[row[jj] for jj in range(n) if jj != j] for row in rest]
            term = c * _poly_det(sub)
            out = out - term if j & 1 else out + term
        return out
    work = [row[:] for row in mat]
    prev = ONE
    sign = 1
    for k in range(n - 1):
        if not work[k][k]:
            for i in range(k + 1, n):
                if work[i][k]:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]).exact_div(prev)
        prev = pivot
    d = work[n - 1][n - 1]
    return d if sign > 0 else -d
