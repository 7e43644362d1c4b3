"""Ideals of Z[t]: strong Groebner bases, reduction, membership, evaluation.

With a single variable the monomial order is forced (by degree), but the
coefficient ring Z is only Euclidean, so completion has to close the basis
under both S-polynomials (lcm of the leading coefficients at the common
degree) and gcd-polynomials (a Bezout combination realising the coefficient
gcd at the higher degree).  A reduced basis then looks like a staircase
g_1, ..., g_s with strictly increasing degrees and positive leading
coefficients c_1, c_2 | c_1, ..., each properly dividing the previous one.

Coefficient division uses the balanced remainder r in (-m/2, m/2], positive
on ties, which pins down a unique canonical basis per ideal.
"""

from __future__ import annotations

from math import gcd

from .zpoly import ONE, ZPoly


def _bal_div(c, m):
    """Balanced division by m > 0: (q, r) with c = q*m + r, r in (-m/2, m/2]."""
    r = c % m
    if 2 * r > m:
        r -= m
    return (c - r) // m, r


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def reduce(p, basis):
    """Normal form of p modulo a strong Groebner basis.

    Zero exactly when p lies in the ideal the basis generates.  Every
    surviving coefficient is balanced-reduced against every basis leading
    coefficient applicable at its degree.
    """
    p = p if isinstance(p, ZPoly) else ZPoly(p)
    if not basis or not p:
        return p
    info = sorted(((len(g) - 1, g[-1] if g[-1] > 0 else -g[-1], g if g[-1] > 0 else -g)
                   for g in basis if g), key=lambda x: -x[0])
    if not info:
        return p
    work = list(p)
    for d in range(len(work) - 1, -1, -1):
        if not work[d]:
            continue
        changed = True
        while changed and work[d]:
            changed = False
            for dg, cg, g in info:
                if dg > d:
                    continue
                q, _ = _bal_div(work[d], cg)
                if q:
                    s = d - dg
                    for i, b in enumerate(g):
                        work[s + i] -= q * b
                    changed = True
                if not work[d]:
                    break
    return ZPoly(work)


def _pair_candidates(f, g):
    # S-polynomial always; gcd-polynomial only when neither lc divides the other.
    if len(f) < len(g):
        f, g = g, f
    cf, cg = f[-1], g[-1]
    s = len(f) - len(g)
    gs = g.shifted(s)
    if cf % cg == 0:
        yield f - gs * (cf // cg)
    elif cg % cf == 0:
        yield f * (cg // cf) - gs
    else:
        d = gcd(cf, cg)
        l = cf // d * cg
        yield f * (l // cf) - gs * (l // cg)
        _, u, v = _xgcd(cf, cg)
        yield f * u + gs * v


def _canonicalize(polys):
    polys = [p if p[-1] > 0 else -p for p in polys if p]
    if any(p == (1,) for p in polys):
        return (ONE,)
    polys.sort(key=lambda p: (len(p), p[-1]))
    kept = []
    for p in polys:
        dp, cp = len(p) - 1, p[-1]
        if not any(len(g) - 1 <= dp and cp % g[-1] == 0 for g in kept):
            kept.append(p)
    while True:
        changed = False
        for i, p in enumerate(kept):
            q = reduce(p, kept[:i] + kept[i + 1:])
            if q != p:
                kept[i] = q if q[-1] > 0 else -q
                changed = True
        if not changed:
            break
    kept.sort(key=lambda p: (len(p), tuple(p)))
    return tuple(kept)


class GroebnerBuilder:
    """Incrementally maintained reduced strong Groebner basis.

    Generators may be fed one at a time; the basis is interreduced after
    every insertion and `add` reports whether the ideal actually grew.
    Callers streaming many generators (minor enumerations) should stop as
    soon as `is_unit` turns true.
    """

    __slots__ = ("_basis",)

    def __init__(self, gens=()):
        self._basis = []
        for g in gens:
            self.add(g)

    @property
    def basis(self):
        return tuple(self._basis)

    @property
    def is_unit(self):
        return len(self._basis) == 1 and self._basis[0] == (1,)

    def add(self, p):
        p = p if isinstance(p, ZPoly) else ZPoly(p)
        h = reduce(p, self._basis)
        if not h:
            return False
        work = list(self._basis)
        pending = [h]
        while pending:
            h = reduce(pending.pop(), work)
            if not h:
                continue
            if h[-1] < 0:
                h = -h
            if h == (1,):
                work = [ONE]
                break
            for g in work:
                pending.extend(_pair_candidates(h, g))
            work.append(h)
        self._basis = list(_canonicalize(work))
        return True


def strong_groebner(gens):
    """Reduced strong Groebner basis of <gens>; () for the zero ideal, (1) for the unit."""
    builder = GroebnerBuilder()
    for g in gens:
        builder.add(g)
        if builder.is_unit:
            break
    return builder.basis


class IdealZt:
    """An ideal of Z[t], held as generators plus the cached reduced basis."""

    __slots__ = ("generators", "basis")

    def __init__(self, generators=(), basis=None):
        seen = set()
        gens = []
        for g in generators:
            g = g if isinstance(g, ZPoly) else ZPoly(g)
            if not g:
                continue
            if g[-1] < 0:
                g = -g
            if g not in seen:
                seen.add(g)
                gens.append(g)
        self.generators = tuple(gens)
        self.basis = strong_groebner(gens) if basis is None else tuple(basis)

    @classmethod
    def unit(cls):
        return cls((ONE,), basis=(ONE,))

    @classmethod
    def zero(cls):
        return cls((), basis=())

    @classmethod
    def principal(cls, p):
        p = p if isinstance(p, ZPoly) else ZPoly(p)
        return cls((p,))

    def is_trivial(self):
        return self.basis == (ONE,)

    def is_zero(self):
        return not self.basis

    def contains(self, p):
        return not reduce(p, self.basis)

    def subset_of(self, other):
        return all(other.contains(g) for g in self.generators)

    def evaluate(self, c):
        """Nonnegative generator of {p(c) : p in the ideal} as an ideal of Z."""
        out = 0
        for g in self.generators:
            out = gcd(out, g(c))
            if out == 1:
                return 1
        return out

    def __eq__(self, other):
        return isinstance(other, IdealZt) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def pretty(self):
        """Angle-bracket rendering of the basis, e.g. ⟨2, t⟩."""
        if not self.basis:
            return "⟨0⟩"
        return "⟨" + ", ".join(g.pretty() for g in self.basis) + "⟩"

    def __repr__(self):
        return f"IdealZt{self.pretty()}"

    def to_json_dict(self):
        """Coefficient arrays low-degree first, integers as decimal strings."""
        return {
            "generators": [[str(c) for c in g] for g in self.generators],
            "basis": [[str(c) for c in g] for g in self.basis],
        }

    @classmethod
    def from_json_dict(cls, obj):
        gens = [ZPoly(int(c) for c in g) for g in obj["generators"]]
        basis = obj.get("basis")
        if basis:
            return cls(gens, basis=tuple(ZPoly(int(c) for c in g) for g in basis))
        return cls(gens)


def is_trivial(ideal):
    return ideal.is_trivial()


def contains(ideal, p):
    return ideal.contains(p)


def ideal_subset(inner, outer):
    """inner is a subset of outer, decided generator-wise."""
    return inner.subset_of(outer)


def ideal_equals(a, b):
    return a.subset_of(b) and b.subset_of(a)


def evaluate_ideal(ideal, c):
    return ideal.evaluate(c)
