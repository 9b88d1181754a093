"""Exact-rational polytopes: inequality form, vertex form and finite unions.

Vertex enumeration splits a system into groups of coordinates that share no
constraint, eliminates equalities inside each group and runs the double
description method on the homogenized remainder.  Group results are cached by
content, so chain components that repeat a block pay for it once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from . import lp
from ._linalg import dot, int_rank, rref, to_int_row
from .dd import extreme_rays

_ZERO = Fraction(0)


class GeometryError(ValueError):
    pass


class EmptyPolytopeError(GeometryError):
    pass


class UnboundedError(GeometryError):
    pass


def _vec(x) -> tuple[Fraction, ...]:
    return tuple(c if type(c) is Fraction else Fraction(c) for c in x)


def _common_denominator(x):
    """Integers ``X`` and ``D > 0`` with ``x = X / D``."""
    x = [c if type(c) is Fraction else Fraction(c) for c in x]
    D = 1
    for c in x:
        d = c.denominator
        if d != 1:
            D = D * d // gcd(D, d)
    return [c.numerator * (D // c.denominator) for c in x], D


def _constraints(items, n, kind):
    out = []
    for row, rhs in items:
        row = _vec(row)
        if len(row) != n:
            raise GeometryError(f"{kind} row has {len(row)} coefficients, expected {n}")
        out.append((row, Fraction(rhs)))
    return tuple(out)


# -- reduction and vertex enumeration ------------------------------------------

class _Reduced:
    """Equalities solved for pivot variables; inequalities restated on the free ones."""

    __slots__ = ("n", "pivots", "R", "e", "free", "ineqs", "infeasible")

    def __init__(self, n, eqs, ineqs):
        self.n = n
        self.infeasible = False
        if eqs:
            pivots, R, e, ok = rref([r for r, _ in eqs], [b for _, b in eqs])
        else:
            pivots, R, e, ok = [], [], [], True
        self.pivots, self.R, self.e = pivots, R, e
        pset = set(pivots)
        self.free = [j for j in range(n) if j not in pset]
        if not ok:
            self.infeasible = True
            self.ineqs = []
            return
        best: dict[tuple, Fraction] = {}
        for row, rhs in ineqs:
            a = [row[f] for f in self.free]
            b = rhs
            for k, p in enumerate(pivots):
                c = row[p]
                if c:
                    Rk = R[k]
                    for i, f in enumerate(self.free):
                        if Rk[f]:
                            a[i] -= c * Rk[f]
                    b -= c * e[k]
            if not any(a):
                if b > 0:
                    self.infeasible = True
                continue
            # scale so the coefficients are primitive integers; keep the tightest rhs
            ia = to_int_row(a)
            lead = next(x for x in a if x)
            ilead = next(x for x in ia if x)
            scale = Fraction(ilead) / lead
            b = b * scale
            if ia not in best or b > best[ia]:
                best[ia] = b
        self.ineqs = list(best.items())

    def lift(self, y) -> tuple[Fraction, ...]:
        x = [_ZERO] * self.n
        for f, val in zip(self.free, y):
            x[f] = val
        for k, p in enumerate(self.pivots):
            Rk = self.R[k]
            x[p] = self.e[k] - sum((Rk[f] * x[f] for f in self.free if Rk[f]), _ZERO)
        return tuple(x)


@lru_cache(maxsize=1 << 16)
def _group_vertices(g: int, eqs: tuple, ineqs: tuple):
    """Vertices of one coordinate group, or None if the system is unbounded."""
    red = _Reduced(g, eqs, ineqs)
    if red.infeasible:
        return ()
    d = len(red.free)
    if d == 0:
        return (red.lift(()),)
    rows = []
    for a, b in red.ineqs:
        den = b.denominator
        rows.append(tuple(x * den for x in a) + (-b.numerator,))
    rows.append((0,) * d + (1,))
    rays = extreme_rays(rows, d + 1)
    if rays is None:
        return None
    out = []
    for ray in rays:
        t = ray[-1]
        if t == 0:
            return None
        out.append(red.lift([Fraction(c, t) for c in ray[:-1]]))
    return tuple(sorted(set(out)))


def _groups(n, eqs, ineqs):
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    used = [False] * n
    for row, _ in itertools.chain(eqs, ineqs):
        nz = [j for j, a in enumerate(row) if a]
        for j in nz:
            used[j] = True
        for j in nz[1:]:
            ra, rb = find(nz[0]), find(j)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for j in range(n):
        groups.setdefault(find(j), []).append(j)
    return list(groups.values()), used


def _enumerate_vertices(n, eqs, ineqs):
    """All vertices of a bounded system, [] if empty; raises UnboundedError."""
    for row, rhs in eqs:
        if not any(row) and rhs != 0:
            return []
    for row, rhs in ineqs:
        if not any(row) and rhs > 0:
            return []
    groups, used = _groups(n, eqs, ineqs)
    if not all(used):
        raise UnboundedError("some coordinate is unconstrained")
    parts = []
    for cols in groups:
        def restrict(items):
            out = []
            for row, rhs in items:
                if any(row[j] for j in cols):
                    out.append((tuple(row[j] for j in cols), rhs))
            return tuple(out)

        verts = _group_vertices(len(cols), restrict(eqs), restrict(ineqs))
        if verts is None:
            raise UnboundedError("the constraint system has a recession direction")
        if not verts:
            return []
        parts.append((cols, verts))
    out = []
    for combo in itertools.product(*(v for _, v in parts)):
        x = [_ZERO] * n
        for (cols, _), vals in zip(parts, combo):
            for j, val in zip(cols, vals):
                x[j] = val
        out.append(tuple(x))
    return sorted(out)


# -- H-polytopes -------------------------------------------------------------

class HPolytope:
    """``{x : E x = e, A x >= b}`` in R^n with exact rational data.

    Redundant rows are allowed and kept as given.
    """

    __slots__ = ("n", "equalities", "inequalities", "_memo")

    def __init__(self, n: int, equalities: Iterable = (), inequalities: Iterable = ()):
        self.n = n
        self.equalities = _constraints(equalities, n, "equality")
        self.inequalities = _constraints(inequalities, n, "inequality")
        self._memo: dict = {}

    def __repr__(self):
        return f"HPolytope(n={self.n}, {len(self.equalities)} eq, {len(self.inequalities)} ineq)"

    def _int_rows(self):
        if "int" not in self._memo:
            def conv(items):
                out = []
                for row, rhs in items:
                    L = 1
                    for a in row:
                        L = L * a.denominator // gcd(L, a.denominator)
                    sparse = tuple((j, int(a * L)) for j, a in enumerate(row) if a)
                    r = rhs * L
                    out.append((sparse, r.numerator, r.denominator))
                return tuple(out)

            self._memo["int"] = (conv(self.equalities), conv(self.inequalities))
        return self._memo["int"]

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.n:
            raise GeometryError(f"point has {len(x)} coordinates, expected {self.n}")
        X, D = _common_denominator(x)
        eqs, ineqs = self._int_rows()
        for sparse, num, den in eqs:
            if sum(a * X[j] for j, a in sparse) * den != num * D:
                return False
        for sparse, num, den in ineqs:
            if sum(a * X[j] for j, a in sparse) * den < num * D:
                return False
        return True

    def _reduced(self) -> _Reduced:
        if "red" not in self._memo:
            self._memo["red"] = _Reduced(self.n, self.equalities, self.inequalities)
        return self._memo["red"]

    def feasible_point(self) -> tuple[Fraction, ...] | None:
        """Some point of the polytope found by exact LP, or None if infeasible."""
        if "point" not in self._memo:
            red = self._reduced()
            point = None
            if not red.infeasible:
                d = len(red.free)
                if d == 0:
                    point = red.lift(())
                else:
                    res = lp.solve(d, inequalities=[(tuple(Fraction(c) for c in a), b) for a, b in red.ineqs])
                    if res.status == lp.OPTIMAL:
                        point = red.lift(res.x)
            self._memo["point"] = point
        return self._memo["point"]

    def is_empty(self) -> bool:
        """Exact LP feasibility test."""
        return self.feasible_point() is None

    def vertex_list(self) -> list[tuple[Fraction, ...]]:
        """Extreme points, sorted; [] when empty.  Raises UnboundedError."""
        if "verts" not in self._memo:
            try:
                self._memo["verts"] = _enumerate_vertices(self.n, self.equalities, self.inequalities)
            except UnboundedError as exc:
                self._memo["verts"] = exc
        res = self._memo["verts"]
        if isinstance(res, UnboundedError):
            raise res
        return res

    def is_bounded(self) -> bool:
        try:
            self.vertex_list()
        except UnboundedError:
            return False
        return True

    def vertices(self) -> "VPolytope":
        verts = self.vertex_list()
        if not verts:
            raise EmptyPolytopeError("the polytope is empty")
        return VPolytope(self.n, verts, reduce=False)

    def intersect(self, other: "HPolytope") -> "HPolytope":
        return HPolytope(
            self.n,
            self.equalities + other.equalities,
            self.inequalities + other.inequalities,
        )

    def translate(self, z: Sequence) -> "HPolytope":
        z = _vec(z)
        return HPolytope(
            self.n,
            [(r, b + dot(r, z)) for r, b in self.equalities],
            [(r, b + dot(r, z)) for r, b in self.inequalities],
        )

    def scale(self, alpha) -> "HPolytope":
        alpha = Fraction(alpha)
        if alpha <= 0:
            raise GeometryError("scale factor must be positive")
        return HPolytope(
            self.n,
            [(r, b * alpha) for r, b in self.equalities],
            [(r, b * alpha) for r, b in self.inequalities],
        )

    def permute(self, perm: Sequence[int]) -> "HPolytope":
        """Image under moving coordinate ``i`` to position ``perm[i-1]`` (1-based)."""
        def move(row):
            out = [_ZERO] * self.n
            for i, j in enumerate(perm):
                out[j - 1] = row[i]
            return out

        return HPolytope(
            self.n,
            [(move(r), b) for r, b in self.equalities],
            [(move(r), b) for r, b in self.inequalities],
        )


# -- V-polytopes -------------------------------------------------------------

def _hull(n, points):
    """(equalities, facets, extreme points) of conv(points)."""
    p0 = points[0]
    diffs = [tuple(a - b for a, b in zip(p, p0)) for p in points[1:]]
    if diffs:
        piv, R, _, _ = rref(diffs, [_ZERO] * len(diffs))
    else:
        piv, R = [], []
    pset = set(piv)
    eqs = []
    for j in range(n):
        if j in pset:
            continue
        row = [_ZERO] * n
        row[j] = Fraction(1)
        rhs = p0[j]
        for k, p in enumerate(piv):
            c = R[k][j]
            if c:
                row[p] -= c
                rhs -= c * p0[p]
        eqs.append((tuple(row), rhs))
    d = len(piv)
    if d == 0:
        return eqs, [], [p0]
    charts = [tuple(p[j] for j in piv) for p in points]
    rows = [to_int_row(list(y) + [Fraction(-1)]) for y in charts]
    rays = extreme_rays(rows, d + 1)
    facets = []
    for ray in rays:
        a, beta = ray[:-1], ray[-1]
        if any(a):
            facets.append((a, beta))
    extreme = []
    for p, y in zip(points, charts):
        tight = [a for a, beta in facets if dot(a, y) == beta]
        if len(tight) >= d and int_rank(tight) == d:
            extreme.append(p)
    lifted = []
    for a, beta in facets:
        row = [_ZERO] * n
        for k, p in enumerate(piv):
            row[p] = Fraction(a[k])
        lifted.append((tuple(row), Fraction(beta)))
    return eqs, lifted, extreme


class VPolytope:
    """Convex hull of finitely many rational points (stored as extreme points)."""

    __slots__ = ("n", "points", "_h")

    def __init__(self, n: int, points: Iterable[Sequence], *, reduce: bool = True):
        pts = sorted(set(_vec(p) for p in points))
        for p in pts:
            if len(p) != n:
                raise GeometryError(f"point has {len(p)} coordinates, expected {n}")
        self.n = n
        self._h = None
        if reduce and len(pts) > 1:
            eqs, facets, extreme = _hull(n, pts)
            self._h = HPolytope(n, eqs, facets)
            pts = sorted(extreme)
        self.points = tuple(pts)

    def __repr__(self):
        return f"VPolytope(n={self.n}, {len(self.points)} points)"

    def is_empty(self) -> bool:
        return not self.points

    def vertex_list(self):
        return list(self.points)

    def to_h(self) -> HPolytope:
        """Inequality form: affine-hull equalities plus facet inequalities."""
        if self._h is None:
            if not self.points:
                one = tuple(Fraction(int(j == 0)) for j in range(self.n))
                self._h = HPolytope(self.n, [(one, 0)], [(one, 1)])
            else:
                eqs, facets, _ = _hull(self.n, list(self.points))
                self._h = HPolytope(self.n, eqs, facets)
        return self._h

    def contains(self, x: Sequence) -> bool:
        """Membership by LP over convex-combination weights."""
        x = _vec(x)
        if len(x) != self.n:
            raise GeometryError(f"point has {len(x)} coordinates, expected {self.n}")
        if not self.points:
            return False
        if x in self.points:
            return True
        m = len(self.points)
        A = [[p[j] for p in self.points] for j in range(self.n)] + [[1] * m]
        b = list(x) + [1]
        return lp.simplex([0] * m, A, b).status == lp.OPTIMAL

    def translate(self, z):
        z = _vec(z)
        return VPolytope(self.n, [tuple(a + b for a, b in zip(p, z)) for p in self.points], reduce=False)

    def scale(self, alpha):
        alpha = Fraction(alpha)
        return VPolytope(self.n, [tuple(alpha * a for a in p) for p in self.points], reduce=False)

    def permute(self, perm):
        def move(p):
            out = [_ZERO] * self.n
            for i, j in enumerate(perm):
                out[j - 1] = p[i]
            return tuple(out)

        return VPolytope(self.n, [move(p) for p in self.points], reduce=False)


# -- unions ------------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    label: object
    polytope: HPolytope
    empty: bool


class PolyUnion:
    """Finite union of labelled H-polytopes; empty components are kept and flagged."""

    __slots__ = ("n", "components")

    def __init__(self, n: int, components: Iterable):
        comps = []
        for item in components:
            if isinstance(item, Component):
                comps.append(item)
            else:
                label, poly = item
                comps.append(Component(label, poly, _flag_empty(poly)))
        for c in comps:
            if c.polytope.n != n:
                raise GeometryError("component dimension mismatch")
        self.n = n
        self.components = tuple(comps)

    def __repr__(self):
        return f"PolyUnion(n={self.n}, {len(self.nonempty())}/{len(self.components)} nonempty)"

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def nonempty(self) -> list[Component]:
        return [c for c in self.components if not c.empty]

    def empty_labels(self) -> list:
        return [c.label for c in self.components if c.empty]

    def is_empty(self) -> bool:
        return not self.nonempty()

    def contains(self, x) -> bool:
        return any(c.polytope.contains(x) for c in self.nonempty())

    def vertex_set(self) -> list[tuple[Fraction, ...]]:
        pts = set()
        for c in self.nonempty():
            pts.update(c.polytope.vertex_list())
        return sorted(pts)

    def map(self, fn) -> "PolyUnion":
        """Apply a polytope transformation to every component, keeping labels."""
        return PolyUnion(self.n, [Component(c.label, fn(c.polytope), c.empty) for c in self.components])


def _flag_empty(poly: HPolytope) -> bool:
    try:
        return not poly.vertex_list()
    except UnboundedError:
        return poly.is_empty()


# -- operations on any of the three forms --------------------------------------

def is_empty(P) -> bool:
    return P.is_empty()


def vertices(P: HPolytope) -> VPolytope:
    if isinstance(P, VPolytope):
        return P
    return P.vertices()


def contains(P, x) -> bool:
    return P.contains(x)


def _pieces(X):
    """Nonempty convex pieces as (label, HPolytope, vertex list)."""
    if isinstance(X, PolyUnion):
        return [(c.label, c.polytope, c.polytope.vertex_list()) for c in X.nonempty()]
    if isinstance(X, VPolytope):
        return [(None, X.to_h(), list(X.points))] if X.points else []
    verts = X.vertex_list()
    return [(None, X, verts)] if verts else []


def _containers(X):
    """Nonempty convex pieces as (label, HPolytope); these may be unbounded."""
    if isinstance(X, PolyUnion):
        return [(c.label, c.polytope) for c in X.nonempty()]
    if isinstance(X, VPolytope):
        return [(None, X.to_h())] if X.points else []
    return [] if X.is_empty() else [(None, X)]


def convex_hull(X) -> VPolytope:
    """Convex hull of a union (or of any polytope form) as a V-polytope."""
    pts = set()
    for _, _, verts in _pieces(X):
        pts.update(verts)
    return VPolytope(X.n, pts)


def set_equal(X, Y) -> bool:
    """Exact equality of the represented point sets."""
    if X.n != Y.n:
        raise GeometryError("dimension mismatch")
    return subset(X, Y) and subset(Y, X)


def subset(X, Y) -> bool:
    """Whether the point set of ``X`` is contained in that of ``Y``.

    ``X`` must be bounded; ``Y`` may be any H-description.
    """
    ys = _containers(Y)
    for label, P, verts in _pieces(X):
        ordered = sorted(ys, key=lambda item: item[0] != label or label is None)
        if any(all(Q.contains(v) for v in verts) for _, Q in ordered):
            continue
        if not all(any(Q.contains(v) for _, Q in ys) for v in verts):
            return False
        if not _covered(P.equalities, list(P.inequalities), [], [Q for _, Q in ys]):
            return False
    return True


def _region_nonempty(n, eqs, ineqs, stricts) -> bool:
    if not stricts:
        return lp.solve(n, equalities=eqs, inequalities=ineqs).status == lp.OPTIMAL
    # maximize s subject to strict rows relaxed by s, with s <= 1
    ext = lambda row, c: tuple(row) + (Fraction(c),)  # noqa: E731
    res = lp.solve(
        n + 1,
        objective=(0,) * n + (1,),
        equalities=[(ext(r, 0), b) for r, b in eqs],
        inequalities=[(ext(r, 0), b) for r, b in ineqs]
        + [(ext(r, -1), b) for r, b in stricts]
        + [((0,) * n + (-1,), -1)],
        maximize=True,
    )
    return res.status == lp.OPTIMAL and res.value > 0


def _covered(eqs, ineqs, stricts, qs) -> bool:
    """Is the region {eqs, ineqs (>=), stricts (>)} inside the union of ``qs``?"""
    n = len(eqs[0][0]) if eqs else len(ineqs[0][0])
    if not _region_nonempty(n, eqs, ineqs, stricts):
        return True
    qs = [Q for Q in qs if _region_nonempty(n, list(eqs) + list(Q.equalities), list(ineqs) + list(Q.inequalities), [])]
    if not qs:
        return False
    Q, rest = qs[0], qs[1:]
    halves = list(Q.inequalities)
    for r, b in Q.equalities:
        halves.append((r, b))
        halves.append((tuple(-c for c in r), -b))
    prefix: list = []
    for r, b in halves:
        violated = (tuple(-c for c in r), -b)
        if not _covered(eqs, list(ineqs) + prefix, list(stricts) + [violated], rest):
            return False
        prefix.append((r, b))
    return True


def minkowski_witness(x, P, Q):
    """``(p, q)`` with ``p`` in P, ``q`` in Q and ``p + q = x``, or None."""
    x = _vec(x)
    ps, qs = _pieces(P), _pieces(Q)
    pairs = sorted(
        itertools.product(ps, qs),
        key=lambda pq: not (pq[0][0] is not None and pq[0][0] == pq[1][0]),
    )
    for (_, A, _), (_, B, _) in pairs:
        # q = x - p must satisfy B
        eqs = list(A.equalities) + [(tuple(-c for c in r), b - dot(r, x)) for r, b in B.equalities]
        ineqs = list(A.inequalities) + [(tuple(-c for c in r), b - dot(r, x)) for r, b in B.inequalities]
        p = HPolytope(len(x), eqs, ineqs).feasible_point()
        if p is not None:
            return p, tuple(a - b for a, b in zip(x, p))
    return None


def minkowski_member(x, P, Q) -> bool:
    """Whether ``x`` lies in the Minkowski sum ``P + Q`` (unions allowed)."""
    return minkowski_witness(x, P, Q) is not None
