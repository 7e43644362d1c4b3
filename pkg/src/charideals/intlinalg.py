"""Exact integer matrices: Smith normal form, minor gcds, invariant factors.

Everything runs on Python's arbitrary-precision integers, so coefficient
growth can cost time and memory but never correctness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd


class ConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug upstream, not bad input."""


class IntMatrix:
    """Dense integer matrix; rows are tuples, the matrix is immutable."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows):
        data = tuple(tuple(int(v) for v in row) for row in rows)
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        if any(len(r) != self.cols for r in data):
            raise ValueError("ragged rows")
        self.data = data

    @property
    def entries(self):
        """Row-major flat view."""
        return tuple(v for row in self.data for v in row)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]!r})"

    def to_lists(self):
        return [list(r) for r in self.data]

    def to_text(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.data)

    @classmethod
    def from_text(cls, text):
        rows = [line.split() for line in text.strip().splitlines() if line.strip()]
        return cls([[int(v) for v in row] for row in rows])


@dataclass(frozen=True)
class InvariantFactors:
    """SNF diagonal d_1 | d_2 | ... padded with trailing zeros."""

    factors: tuple

    def __post_init__(self):
        f = tuple(int(v) for v in self.factors)
        object.__setattr__(self, "factors", f)
        if any(v < 0 for v in f):
            raise ConsistencyError("negative invariant factor")
        nz = [v for v in f if v]
        if f[:len(nz)] != tuple(nz):
            raise ConsistencyError("zero before a nonzero invariant factor")
        for a, b in zip(nz, nz[1:]):
            if b % a:
                raise ConsistencyError(f"divisibility chain broken: {a} | {b}")

    @property
    def rank(self):
        return sum(1 for v in self.factors if v)

    @property
    def ones(self):
        return sum(1 for v in self.factors if v == 1)

    def __iter__(self):
        return iter(self.factors)

    def __eq__(self, other):
        if isinstance(other, InvariantFactors):
            return self.factors == other.factors
        return self.factors == tuple(other)

    def __hash__(self):
        return hash(self.factors)


@dataclass(frozen=True)
class DeltaSequence:
    """Gcds of k-minors: Delta_0 = 1, Delta_1, ..., zeros once the rank is passed."""

    deltas: tuple

    def __post_init__(self):
        d = tuple(int(v) for v in self.deltas)
        object.__setattr__(self, "deltas", d)
        if not d or d[0] != 1:
            raise ConsistencyError("Delta_0 must be 1")
        if any(v < 0 for v in d):
            raise ConsistencyError("negative minor gcd")

    def __iter__(self):
        return iter(self.deltas)


def det_int(mat):
    """Determinant of a square list-of-lists; the argument is consumed."""
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = mat
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    # Bareiss fraction-free elimination
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not mat[k][k]:
            for i in range(k + 1, n):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = mat[k][k]
        for i in range(k + 1, n):
            ri, rk = mat[i], mat[k]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - aik * rk[j]) // prev
        prev = pk
    return sign * mat[n - 1][n - 1]


def snf_diagonal(m):
    """Diagonal of the Smith normal form, zero-padded to min(rows, cols).

    Elimination picks the nonzero pivot of minimal absolute value in the
    remaining submatrix, which keeps coefficient growth tame on the dense
    +-1 matrices this project feeds it.
    """
    a = m.to_lists()
    nr, nc = m.rows, m.cols
    size = min(nr, nc)
    diag = []
    k = 0
    while k < size:
        pi = pj = -1
        best = 0
        for i in range(k, nr):
            row = a[i]
            for j in range(k, nc):
                v = row[j]
                if v:
                    v = -v if v < 0 else v
                    if not best or v < best:
                        best, pi, pj = v, i, j
                        if v == 1:
                            break
            if best == 1:
                break
        if pi < 0:
            break
        a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
        if a[k][k] < 0:
            a[k] = [-v for v in a[k]]
        while True:
            p = a[k][k]
            restart = False
            for i in range(k + 1, nr):
                v = a[i][k]
                if v:
                    q, r = divmod(v, p)
                    rk = a[k]
                    ri = a[i]
                    for j in range(k, nc):
                        ri[j] -= q * rk[j]
                    if r:
                        a[k], a[i] = a[i], a[k]
                        restart = True
                        break
            if restart:
                if a[k][k] < 0:
                    a[k] = [-v for v in a[k]]
                continue
            for j in range(k + 1, nc):
                v = a[k][j]
                if v:
                    q, r = divmod(v, p)
                    for row in a:
                        row[j] -= q * row[k]
                    if r:
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        restart = True
                        break
            if restart:
                if a[k][k] < 0:
                    a[k] = [-v for v in a[k]]
                continue
            off = None
            for i in range(k + 1, nr):
                ri = a[i]
                for j in range(k + 1, nc):
                    if ri[j] % p:
                        off = i
                        break
                if off is not None:
                    break
            if off is None:
                break
            rk = a[k]
            ro = a[off]
            for j in range(k, nc):
                rk[j] += ro[j]
        diag.append(a[k][k])
        k += 1
    diag.extend([0] * (size - len(diag)))
    return InvariantFactors(tuple(diag))


def count_unit_factors(m):
    """phi(M): how many invariant factors equal 1."""
    return snf_diagonal(m).ones


def gcd_of_k_minors(m, k):
    """Delta_k: gcd of the absolute values of all k x k minors (0 if all vanish).

    Enumerates minors directly with an early exit once the running gcd hits 1;
    this is the independent oracle the SNF route is checked against.
    """
    if k < 0 or k > min(m.rows, m.cols):
        raise ValueError(f"minor order {k} out of range for {m.rows}x{m.cols} matrix")
    if k == 0:
        return 1
    data = m.data
    g = 0
    for rows in combinations(range(m.rows), k):
        for cols in combinations(range(m.cols), k):
            sub = [[data[i][j] for j in cols] for i in rows]
            g = gcd(g, det_int(sub))
            if g == 1:
                return 1
    return g


def invariant_factors_from_deltas(deltas):
    """Recover d_k = Delta_k / Delta_{k-1} from a minor-gcd sequence."""
    if not isinstance(deltas, DeltaSequence):
        deltas = DeltaSequence(tuple(deltas))
    seq = deltas.deltas
    out = []
    for prev, cur in zip(seq, seq[1:]):
        if prev == 0:
            if cur != 0:
                raise ConsistencyError("nonzero minor gcd after a vanishing one")
            out.append(0)
        else:
            if cur % prev:
                raise ConsistencyError(f"minor gcds violate divisibility: {prev}, {cur}")
            out.append(cur // prev)
    return InvariantFactors(tuple(out))


def delta_sequence(m):
    """All of Delta_0 .. Delta_min(rows, cols) by direct minor enumeration."""
    return DeltaSequence(tuple(gcd_of_k_minors(m, k) for k in range(min(m.rows, m.cols) + 1)))
