"""Closed-set systems: explicit finite spaces and varieties over exact rationals.

A :class:`ClosedSet` is a plain value; it only acquires meaning relative to a
space, which knows how to normalise, compare and combine closed sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from .commalg import Ideal, PolyRing, point_in_variety, variety_subset

Point = Tuple[Fraction, ...]


class ClosedSetError(ValueError):
    pass


@dataclass(frozen=True)
class ClosedSet:
    """One of: empty, whole, points (rational), variety (ideal), family (finite subset)."""

    kind: str
    points: Tuple = ()
    ideal: Optional[Ideal] = None

    KINDS = ("empty", "whole", "points", "variety", "family")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ClosedSetError(f"unknown closed-set kind {self.kind!r}")

    @classmethod
    def empty(cls) -> "ClosedSet":
        return cls("empty")

    @classmethod
    def whole(cls) -> "ClosedSet":
        return cls("whole")

    @classmethod
    def finite_points(cls, points: Iterable[Sequence]) -> "ClosedSet":
        pts = sorted({tuple(Fraction(c) for c in p) for p in points})
        return cls("points", tuple(pts)) if pts else cls.empty()

    @classmethod
    def variety(cls, ideal: Ideal) -> "ClosedSet":
        return cls("variety", (), ideal)

    @classmethod
    def family(cls, points: Iterable[Hashable]) -> "ClosedSet":
        return cls("family", tuple(sorted(set(points), key=str)))

    def __repr__(self):
        if self.kind == "variety":
            return f"ClosedSet(variety {self.ideal})"
        if self.kind in ("empty", "whole"):
            return f"ClosedSet({self.kind})"
        return f"ClosedSet({self.kind} {list(self.points)})"


EMPTY = ClosedSet.empty()
WHOLE = ClosedSet.whole()


class FiniteSpace:
    """A finite topological space given by its family of closed sets."""

    def __init__(self, points: Iterable[Hashable], closed: Iterable[Iterable[Hashable]], name: str = ""):
        self.name = name
        self.points: Tuple = tuple(sorted(set(points), key=str))
        self.closed: FrozenSet[FrozenSet] = frozenset(frozenset(c) for c in closed)
        stray = set().union(*self.closed) - set(self.points) if self.closed else set()
        if stray:
            raise ClosedSetError(f"closed sets mention unknown points {sorted(map(str, stray))}")

    def __repr__(self):
        return f"FiniteSpace({self.name!r}, {len(self.points)} points, {len(self.closed)} closed sets)"

    def __eq__(self, other):
        return isinstance(other, FiniteSpace) and self.points == other.points and self.closed == other.closed

    def __hash__(self):
        return hash((self.points, self.closed))

    def topology_problems(self) -> List[str]:
        out = []
        if frozenset() not in self.closed:
            out.append("empty set is not closed")
        if frozenset(self.points) not in self.closed:
            out.append("whole space is not closed")
        for a, b in combinations(sorted(self.closed, key=set_key), 2):
            if a | b not in self.closed:
                out.append(f"union {_fmt(a | b)} is not closed")
            if a & b not in self.closed:
                out.append(f"intersection {_fmt(a & b)} is not closed")
        return out

    # closed-set algebra on plain frozensets
    def closure(self, subset: Iterable) -> FrozenSet:
        subset = frozenset(subset)
        best = frozenset(self.points)
        for c in self.closed:
            if subset <= c:
                best = best & c
        return best

    def subspace(self, subset: Iterable, name: str = "") -> "FiniteSpace":
        subset = frozenset(subset)
        return FiniteSpace(subset, {c & subset for c in self.closed}, name)

    def specialization_leq(self, x, y) -> bool:
        """``x <= y`` iff ``y`` lies in the closure of ``x``."""
        return y in self.closure({x})

    # ClosedSet protocol
    def to_set(self, Y: ClosedSet) -> FrozenSet:
        if Y.kind == "empty":
            return frozenset()
        if Y.kind == "whole":
            return frozenset(self.points)
        if Y.kind in ("family", "points"):
            s = frozenset(Y.points)
            if not s <= set(self.points):
                raise ClosedSetError(f"{_fmt(s)} is not a subset of {self.name or 'the space'}")
            return s
        raise ClosedSetError(f"a finite space has no {Y.kind} closed sets")

    def normalize(self, Y: ClosedSet) -> ClosedSet:
        return ClosedSet.family(self.to_set(Y))

    def make(self, subset: Iterable) -> ClosedSet:
        return ClosedSet.family(subset)

    def empty(self) -> ClosedSet:
        return ClosedSet.family(())

    def whole(self) -> ClosedSet:
        return ClosedSet.family(self.points)

    def is_closed(self, Y: ClosedSet) -> bool:
        try:
            return self.to_set(Y) in self.closed
        except ClosedSetError:
            return False

    def union(self, Y: ClosedSet, Z: ClosedSet) -> ClosedSet:
        return ClosedSet.family(self.to_set(Y) | self.to_set(Z))

    def intersection(self, Y: ClosedSet, Z: ClosedSet) -> ClosedSet:
        return ClosedSet.family(self.to_set(Y) & self.to_set(Z))

    def subset(self, Y: ClosedSet, Z: ClosedSet) -> bool:
        return self.to_set(Y) <= self.to_set(Z)

    def equal(self, Y: ClosedSet, Z: ClosedSet) -> bool:
        return self.to_set(Y) == self.to_set(Z)

    def is_empty(self, Y: ClosedSet) -> bool:
        return not self.to_set(Y)

    def closed_sets(self) -> List[ClosedSet]:
        return [ClosedSet.family(c) for c in sorted(self.closed, key=set_key)]

    def render(self, Y: ClosedSet) -> str:
        s = self.to_set(Y)
        return _fmt(s) if s else "∅"


class VarietySpace:
    """Maximal spectrum of a (Laurent) polynomial ring over Q.

    Closed sets are zero loci of ideals.  Finite rational point sets are kept
    as explicit points; everything else is carried as an ideal.  Union is the
    ideal product and intersection the ideal sum.  Inclusion and equality are
    decided on radicals, so they are statements about zero loci over an
    algebraic closure.
    """

    def __init__(self, ring: PolyRing, name: str = ""):
        self.ring = ring
        self.name = name

    def __repr__(self):
        return f"VarietySpace({self.name!r}, {self.ring})"

    def __eq__(self, other):
        return isinstance(other, VarietySpace) and self.ring == other.ring

    def __hash__(self):
        return hash(self.ring)

    @property
    def dimension(self) -> int:
        return len(self.ring.variables)

    # conversions
    def check_point(self, p: Sequence) -> Point:
        p = tuple(Fraction(c) for c in p)
        if len(p) != self.dimension:
            raise ClosedSetError(f"point {p} has {len(p)} coordinates, ring {self.ring} has {self.dimension}")
        for v, c in zip(self.ring.variables, p):
            if v in self.ring.inverted and c == 0:
                raise ClosedSetError(f"coordinate {v}=0 is outside the torus {self.ring}")
        return p

    def point_dict(self, p: Sequence) -> dict:
        return dict(zip(self.ring.variables, p))

    def point_ideal(self, p: Sequence) -> Ideal:
        return Ideal.of_point(self.ring, self.point_dict(self.check_point(p)))

    def ideal_of(self, Y: ClosedSet) -> Ideal:
        if Y.kind == "empty":
            return Ideal.unit(self.ring)
        if Y.kind == "whole":
            return Ideal.zero(self.ring)
        if Y.kind == "variety":
            if Y.ideal.ring != self.ring:
                raise ClosedSetError(f"ideal lives in {Y.ideal.ring}, stratum ring is {self.ring}")
            return Y.ideal
        if Y.kind == "points":
            out = Ideal.unit(self.ring)
            for p in Y.points:
                out = out * self.point_ideal(p)
            return out
        raise ClosedSetError(f"a variety has no {Y.kind} closed sets")

    def normalize(self, Y: ClosedSet) -> ClosedSet:
        """Canonical form: empty, whole, explicit points when rational and finite, else variety."""
        if Y.kind in ("empty", "whole"):
            return Y
        if Y.kind == "points":
            pts = ClosedSet.finite_points(self.check_point(p) for p in Y.points)
            return WHOLE if self.dimension == 0 and pts.kind == "points" else pts
        I = self.ideal_of(Y)
        if I.is_unit():
            return EMPTY
        if I.is_zero() or all(g.is_zero() for g in I.groebner()):
            return WHOLE
        pts = rational_points(I)
        if pts is not None:
            return ClosedSet.finite_points(pts)
        return ClosedSet.variety(I)

    def empty(self) -> ClosedSet:
        return EMPTY

    def whole(self) -> ClosedSet:
        return WHOLE

    def make(self, subset) -> ClosedSet:
        return ClosedSet.finite_points(subset)

    def is_closed(self, Y: ClosedSet) -> bool:
        try:
            self.ideal_of(Y)
            if Y.kind == "points":
                for p in Y.points:
                    self.check_point(p)
        except ClosedSetError:
            return False
        return True

    def union(self, Y: ClosedSet, Z: ClosedSet) -> ClosedSet:
        if Y.kind == "empty" or Z.kind == "whole":
            return Z
        if Z.kind == "empty" or Y.kind == "whole":
            return Y
        if Y.kind == "points" and Z.kind == "points":
            return ClosedSet.finite_points(Y.points + Z.points)
        return self.normalize(ClosedSet.variety(self.ideal_of(Y) * self.ideal_of(Z)))

    def intersection(self, Y: ClosedSet, Z: ClosedSet) -> ClosedSet:
        if Y.kind == "empty" or Z.kind == "whole":
            return Y
        if Z.kind == "empty" or Y.kind == "whole":
            return Z
        if Y.kind == "points":
            return ClosedSet.finite_points(p for p in Y.points if self.contains_point(Z, p))
        if Z.kind == "points":
            return ClosedSet.finite_points(p for p in Z.points if self.contains_point(Y, p))
        return self.normalize(ClosedSet.variety(self.ideal_of(Y) + self.ideal_of(Z)))

    def contains_point(self, Y: ClosedSet, p: Sequence) -> bool:
        p = self.check_point(p)
        if Y.kind == "points":
            return p in Y.points
        if Y.kind in ("empty", "whole"):
            return Y.kind == "whole"
        return point_in_variety(self.ideal_of(Y), self.point_dict(p))

    def subset(self, Y: ClosedSet, Z: ClosedSet) -> bool:
        if Y.kind == "empty" or Z.kind == "whole":
            return True
        if Y.kind == "points":
            return all(self.contains_point(Z, p) for p in Y.points)
        return variety_subset(self.ideal_of(Y), self.ideal_of(Z))

    def equal(self, Y: ClosedSet, Z: ClosedSet) -> bool:
        if Y.kind == "points" and Z.kind == "points":
            return Y.points == Z.points
        return self.subset(Y, Z) and self.subset(Z, Y)

    def is_empty(self, Y: ClosedSet) -> bool:
        return self.subset(Y, EMPTY)

    def render(self, Y: ClosedSet, label: str = "") -> str:
        Y = self.normalize(Y)
        if Y.kind == "empty":
            return "∅"
        if Y.kind == "whole":
            if self.dimension == 0:
                return "{" + (label or self.name or "pt") + "}"
            return "whole " + (label or self.name or str(self.ring))
        if Y.kind == "points":
            if self.dimension == 0:
                return "{" + (label or self.name or "pt") + "}"
            rendered = [", ".join(f"{v}={c}" for v, c in zip(self.ring.variables, p)) for p in Y.points]
            if len(rendered) == 1:
                return "point " + rendered[0]
            return "points {" + "; ".join(rendered) + "}"
        return "V" + str(Y.ideal)


def rational_points(I: Ideal) -> Optional[List[Point]]:
    """All points of ``V(I)`` if that zero set is finite and fully rational.

    Handles the shapes the catalog needs: a basis of linear polynomials (one
    point), and the univariate case with a generator that splits into
    distinct rational linear factors.  Returns None otherwise.
    """
    ring = I.ring
    n = len(ring.variables)
    if n == 0:
        return None
    gens = I.display_generators()
    if all(g.total_degree() <= 1 for g in gens) and len(gens) == n:
        point = {}
        for g in gens:
            used = sorted(g.variables_used())
            coeffs = _univariate_coeffs(g, used[0]) if len(used) == 1 else None
            if coeffs is None or len(coeffs) != 2:
                return None
            point[used[0]] = -coeffs[0] / coeffs[1]
        if len(point) != n:
            return None
        return [tuple(point[v] for v in ring.variables)]
    if n == 1 and len(gens) == 1:
        roots = _rational_roots(gens[0], ring.variables[0])
        if roots is None:
            return None
        v = ring.variables[0]
        return [(r,) for r in roots if not (v in ring.inverted and r == 0)]
    return None


def _univariate_coeffs(g, v) -> Optional[List[Fraction]]:
    """Coefficients (constant term first) of a polynomial in ``v`` alone."""
    coeffs = {}
    for e, c in g.terms.items():
        ex = g.exponents(e)
        k = ex.get(v, 0)
        if k < 0 or any(val for w, val in ex.items() if w != v):
            return None
        coeffs[k] = c
    deg = max(coeffs)
    return [coeffs.get(k, Fraction(0)) for k in range(deg + 1)]


def _rational_roots(g, v) -> Optional[List[Fraction]]:
    """Distinct rational roots if ``g`` is a product of distinct rational linear factors."""
    coeffs = _univariate_coeffs(g, v)
    if coeffs is None:
        return None
    deg = len(coeffs) - 1
    roots: List[Fraction] = []
    if coeffs[0] == 0:
        roots.append(Fraction(0))
        # g is square-free only if x appears once
        if coeffs[1] == 0:
            return None
        coeffs = coeffs[1:]
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 > 10 ** 5 or an > 10 ** 5:
        return None
    cands = {Fraction(s * p, q) for p in _divisors(a0) for q in _divisors(an) for s in (1, -1)}
    for r in sorted(cands):
        if sum(c * r ** k for k, c in enumerate(coeffs)) == 0:
            roots.append(r)
    return sorted(roots) if len(roots) == deg else None


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0] if n else [1]


def set_key(s) -> tuple:
    return (len(s), sorted(map(str, s)))


def _fmt(s) -> str:
    return "{" + ", ".join(sorted(map(str, s))) + "}"


def finite_space(points, closed, name: str = "") -> FiniteSpace:
    sp = FiniteSpace(points, closed, name)
    problems = sp.topology_problems()
    if problems:
        raise ClosedSetError("not a topology: " + "; ".join(problems))
    return sp


def topology_from_opens(points, opens, name: str = "") -> FiniteSpace:
    pts = frozenset(points)
    return finite_space(pts, [pts - frozenset(o) for o in opens], name)


def all_topologies(n: int, t0_only: bool = True) -> List[FiniteSpace]:
    """Every topology on points ``0..n-1`` by brute force over closed-set families."""
    pts = list(range(n))
    subsets = [frozenset(s) for k in range(n + 1) for s in combinations(pts, k)]
    full = frozenset(pts)
    inner = [s for s in subsets if s and s != full]
    out = []
    for mask in range(1 << len(inner)):
        fam = {frozenset(), full} | {s for i, s in enumerate(inner) if mask >> i & 1}
        if any(a | b not in fam or a & b not in fam for a, b in combinations(fam, 2)):
            continue
        sp = FiniteSpace(pts, fam)
        if t0_only and not is_t0(sp):
            continue
        out.append(sp)
    return out


def is_t0(space: FiniteSpace) -> bool:
    """Distinct points have distinct closures."""
    closures = [space.closure({x}) for x in space.points]
    return len(set(closures)) == len(closures)
