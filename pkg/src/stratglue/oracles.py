"""Brute-force point-level oracles for the ideal-level machinery.

Nothing here uses elimination.  Closed sets are sampled as unions of
parametrised pieces whose rational points we can list, closures of images are
recovered by exact interpolation of vanishing polynomials, and everything is
compared on rational grids.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .commalg import AlgMap, Ideal, PolyRing, contract, eliminate, extend, saturate
from .commalg.poly import Poly
from .topology import EMPTY, WHOLE, ClosedSet, FiniteSpace, VarietySpace

Point = Tuple[Fraction, ...]

SMALL = [Fraction(k) for k in (1, 2, 3, -1, -2, 5)] + [Fraction(1, 2), Fraction(-3, 2), Fraction(2, 3)]


def small_rational(rng: random.Random, nonzero: bool = True) -> Fraction:
    pool = SMALL if nonzero else SMALL + [Fraction(0)]
    return rng.choice(pool)


# -- exact linear algebra -----------------------------------------------------

def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of ``{x : A x = 0}`` by exact reduced row echelon form."""
    A = [list(map(Fraction, r)) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fc]
        basis.append(v)
    return basis


def monomials_upto(nvars: int, degree: int) -> List[Tuple[int, ...]]:
    out = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def vanishing_polys(points: Sequence[Point], nvars: int, degree: int) -> List[Dict[Tuple[int, ...], Fraction]]:
    """All polynomials of degree ``<= degree`` vanishing on ``points`` (a basis)."""
    mons = monomials_upto(nvars, degree)
    rows = []
    for p in set(points):
        row = []
        for e in mons:
            v = Fraction(1)
            for x, k in zip(p, e):
                v *= x ** k
            row.append(v)
        rows.append(row)
    return [{e: c for e, c in zip(mons, v) if c} for v in nullspace(rows, len(mons))]


def eval_raw(poly: Dict[Tuple[int, ...], Fraction], point: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for e, c in poly.items():
        term = c
        for x, k in zip(point, e):
            term *= x ** k
        total += term
    return total


# -- sampled closed sets --------------------------------------------------------

@dataclass
class Piece:
    """An irreducible closed piece with a point sampler and a degree bound."""

    ideal: Ideal
    sample: Callable[[random.Random, int], List[Point]]
    degree: int
    kind: str
    constants: Tuple[Fraction, ...] = ()
    finite: bool = False


@dataclass
class SampledClosedSet:
    closed: ClosedSet
    pieces: List[Piece] = field(default_factory=list)

    @property
    def is_finite(self) -> bool:
        return all(p.finite for p in self.pieces)

    def constants(self) -> List[Fraction]:
        return sorted({c for p in self.pieces for c in p.constants})


def _random_coords(ring: PolyRing, rng: random.Random) -> Dict[str, Fraction]:
    return {v: small_rational(rng, nonzero=v in ring.inverted) for v in ring.variables}


def _point_piece(ring: PolyRing, rng: random.Random) -> Piece:
    pt = _random_coords(ring, rng)
    p = tuple(pt[v] for v in ring.variables)
    return Piece(Ideal.of_point(ring, pt), lambda r, n: [p], 1, "point", p, True)


def _hyperplane_piece(ring: PolyRing, rng: random.Random) -> Piece:
    v = rng.choice(ring.variables)
    c = small_rational(rng, nonzero=v in ring.inverted)

    def sample(r, n):
        out = []
        for _ in range(n):
            pt = {w: _wide(r, w in ring.inverted) for w in ring.variables}
            pt[v] = c
            out.append(tuple(pt[w] for w in ring.variables))
        return out

    return Piece(Ideal(ring, [ring.var(v) - c]), sample, 1, f"{v}={c}", (c,))


def _curve_piece(ring: PolyRing, rng: random.Random) -> Piece:
    v, w = rng.sample(ring.variables, 2)
    ks = [1, 2] + ([-1] if w in ring.inverted else [])
    k = rng.choice(ks)
    c = small_rational(rng)
    need_nonzero_w = k < 0 or v in ring.inverted

    def sample(r, n):
        out = []
        for _ in range(n):
            pt = {x: _wide(r, x in ring.inverted) for x in ring.variables}
            pt[w] = _wide(r, need_nonzero_w or w in ring.inverted)
            pt[v] = c * pt[w] ** k
            out.append(tuple(pt[x] for x in ring.variables))
        return out

    gen = ring.var(v) - ring.const(c) * ring.var(w) ** k
    return Piece(Ideal(ring, [gen]), sample, abs(k) + 1, f"{v}={c}*{w}^{k}", (c,))


def _whole_piece(ring: PolyRing, rng: random.Random) -> Piece:
    def sample(r, n):
        return [tuple(_wide(r, x in ring.inverted) for x in ring.variables) for _ in range(n)]

    return Piece(Ideal.zero(ring), sample, 0, "whole")


def _wide(rng: random.Random, nonzero: bool) -> Fraction:
    while True:
        x = Fraction(rng.randint(-40, 40), rng.randint(1, 7))
        if x or not nonzero:
            return x


def random_closed_set(space: VarietySpace, rng: random.Random, max_pieces: int = 2,
                      kinds: Sequence[str] = ("point", "hyperplane", "curve")) -> SampledClosedSet:
    """A union of up to ``max_pieces`` random pieces, occasionally empty or whole."""
    ring = space.ring
    if not ring.variables:
        return SampledClosedSet(WHOLE if rng.random() < 0.5 else EMPTY)
    roll = rng.random()
    if roll < 0.05:
        return SampledClosedSet(EMPTY)
    if roll < 0.12:
        return SampledClosedSet(WHOLE, [_whole_piece(ring, rng)])
    makers = {"point": _point_piece, "hyperplane": _hyperplane_piece, "curve": _curve_piece}
    allowed = [k for k in kinds if k != "curve" or len(ring.variables) >= 2]
    pieces = [makers[rng.choice(allowed)](ring, rng) for _ in range(rng.randint(1, max_pieces))]
    if all(p.finite for p in pieces):
        closed = ClosedSet.finite_points(p.constants for p in pieces)
    else:
        I = Ideal.unit(ring)
        for p in pieces:
            I = I * p.ideal
        closed = space.normalize(ClosedSet.variety(I))
    return SampledClosedSet(closed, pieces)


def sample_closed_sets(space, n: int, seed: int = 0) -> List[ClosedSet]:
    """``n`` closed sets of ``space`` from a seeded generator."""
    rng = random.Random(seed)
    if isinstance(space, FiniteSpace):
        fam = space.closed_sets()
        out = []
        for _ in range(n):
            k = rng.randint(1, 2)
            Y = space.empty()
            for c in rng.sample(fam, min(k, len(fam))):
                Y = space.union(Y, c)
            out.append(Y)
        return out
    return [random_closed_set(space, rng).closed for _ in range(n)]


# -- point-level f-up-g -------------------------------------------------------------

def _map_degree(m: AlgMap) -> int:
    deg = 1
    for _, p in m.images:
        for e in p.terms:
            deg = max(deg, sum(abs(k) for k in p.exponents(e).values()))
    return deg


def image_closure_test(g: AlgMap, Y: SampledClosedSet, rng: random.Random) -> Callable[[Sequence[Fraction]], bool]:
    """Membership test for ``closure(g°(Y))`` in the common ring, from samples only.

    Finite ``Y`` has finite, hence closed, image.  Otherwise the closure is cut
    out by the interpolated vanishing polynomials of bounded degree.
    """
    W = g.source
    if Y.closed.kind == "empty":
        return lambda w: False
    if Y.is_finite and Y.pieces:
        image = {tuple(g.pull_point(dict(zip(g.target.variables, p))).values()) for pc in Y.pieces
                 for p in pc.sample(rng, 1)}
        return lambda w: tuple(Fraction(x) for x in w) in image
    if not W.variables:
        return lambda w: True
    degree = max(1, sum(pc.degree for pc in Y.pieces)) * _map_degree(g)
    m = len(W.variables)
    count = comb(degree + m, m) + 12
    pts = []
    for pc in Y.pieces:
        for p in pc.sample(rng, 1 if pc.finite else count):
            img = g.pull_point(dict(zip(g.target.variables, p)))
            pts.append(tuple(img[v] for v in W.variables))
    polys = vanishing_polys(pts, m, degree)
    return lambda w: all(eval_raw(q, w) == 0 for q in polys)


def probe_grid(space: VarietySpace, constants: Sequence[Fraction], rng: random.Random, size: int = 6) -> List[Point]:
    """Rational test points built from the constants in play plus a few randoms."""
    ring = space.ring
    if not ring.variables:
        return [()]
    vals = {Fraction(1), Fraction(-1), Fraction(2), Fraction(0)}
    for c in constants:
        vals.update({c, -c, 2 * c})
        if c:
            vals.add(1 / c)
    vals.update(_wide(rng, False) for _ in range(2))
    vals = sorted(vals)
    if len(ring.variables) > 2 and len(vals) > size:
        vals = sorted(set(rng.sample(vals, size)) | set(constants))
    out = []
    for p in product(vals, repeat=len(ring.variables)):
        if any(v in ring.inverted and c == 0 for v, c in zip(ring.variables, p)):
            continue
        out.append(p)
    return out


@dataclass
class OracleResult:
    agree: bool
    tested: int
    hits: int
    mismatches: List[Point]


def compare_ftopg(f: AlgMap, g: AlgMap, Y: SampledClosedSet, computed: ClosedSet,
                  rng: random.Random) -> OracleResult:
    """Compare an ideal-level f-up-g answer with the pointwise oracle on a grid."""
    inside = image_closure_test(g, Y, rng)
    dst = VarietySpace(f.target)
    consts = list(Y.constants())
    consts += [a * b for a in Y.constants() for b in Y.constants()]
    mismatches, hits = [], 0
    grid = probe_grid(dst, consts, rng)
    for q in grid:
        img = f.pull_point(dict(zip(f.target.variables, q)))
        want = inside(tuple(img[v] for v in f.source.variables))
        got = dst.contains_point(computed, q)
        hits += want
        if want != got:
            mismatches.append(q)
    return OracleResult(not mismatches, len(grid), hits, mismatches)


# -- commalg brute-force instances ---------------------------------------------------

def _rand_poly(ring: PolyRing, rng: random.Random, degree: int, terms: int = 3) -> Poly:
    mons = monomials_upto(len(ring.variables), degree)
    p = ring.zero()
    for e in rng.sample(mons, min(terms, len(mons))):
        p = p + ring.monomial(dict(zip(ring.variables, e)), small_rational(rng))
    return p


def _names(prefix: str, n: int) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(n))


def _distinct_points(ring: PolyRing, rng: random.Random, k: int) -> List[Point]:
    pts = set()
    while len(pts) < k:
        pt = _random_coords(ring, rng)
        pts.add(tuple(pt[v] for v in ring.variables))
    return sorted(pts)


def points_ideal(ring: PolyRing, pts: Sequence[Point]) -> Ideal:
    I = Ideal.unit(ring)
    for p in sorted(set(pts)):
        I = I * Ideal.of_point(ring, dict(zip(ring.variables, p)))
    return I


def extension_instance(seed: int) -> Tuple[bool, str]:
    """``V(extend(m, I))`` agrees with ``m°^{-1}(V(I))`` on a rational grid."""
    rng = random.Random(seed)
    ns, nt = rng.randint(1, 2), rng.randint(1, 2)
    src = PolyRing(_names("x", ns), frozenset())
    tgt = PolyRing(_names("y", nt), frozenset(_names("y", nt)[:rng.randint(0, nt)]))
    m = AlgMap(src, tgt, {v: _rand_poly(tgt, rng, rng.randint(1, 2), 2) for v in src.variables})
    I = Ideal(src, [_rand_poly(src, rng, rng.randint(1, 3), 3) for _ in range(rng.randint(1, 2))])
    E = extend(m, I)
    space = VarietySpace(tgt)
    bad = 0
    for q in probe_grid(space, [], rng):
        pt = dict(zip(tgt.variables, q))
        want = all(g.evaluate(m.pull_point(pt)) == 0 for g in I.generators)
        got = all(h.evaluate(pt) == 0 for h in E.generators)
        bad += want != got
    return bad == 0, f"extend {m.describe()} of {I}"


def contraction_instance(seed: int) -> Tuple[bool, str]:
    """``contract(m, I(P)) == I(m°(P))`` exactly, for a finite point set ``P``."""
    rng = random.Random(seed)
    ns, nt = rng.randint(1, 2), rng.randint(1, 2)
    src = PolyRing(_names("x", ns), frozenset())
    tgt = PolyRing(_names("y", nt), frozenset())
    m = AlgMap(src, tgt, {v: _rand_poly(tgt, rng, rng.randint(1, 3), 3) for v in src.variables})
    P = _distinct_points(tgt, rng, rng.randint(1, 3))
    C = contract(m, points_ideal(tgt, P))
    image = [tuple(m.pull_point(dict(zip(tgt.variables, p))).values()) for p in P]
    return C == points_ideal(src, image), f"contract {m.describe()} at {P}"


def elimination_instance(seed: int) -> Tuple[bool, str]:
    """Eliminating the parameter of a graph equals the interpolated image ideal."""
    rng = random.Random(seed)
    family = rng.choice(["conic", "cubic", "cusp", "space"])
    ring = PolyRing(("t", "x", "y", "z") if family == "space" else ("t", "x", "y"), frozenset())
    t = ring.var("t")
    a, b = small_rational(rng), small_rational(rng)
    x_img = a * t + b if family != "cusp" else a * t ** 2
    if family == "conic":
        y_img = _rand_poly(ring, rng, 0) + small_rational(rng) * t ** 2 + small_rational(rng) * t
    elif family == "cubic":
        y_img = small_rational(rng) * t ** 3 + small_rational(rng) * t
    elif family == "cusp":
        y_img = b * t ** 3
    else:
        y_img = small_rational(rng) * t ** 2 + b
    imgs = [x_img, y_img]
    if family == "space":
        imgs.append(small_rational(rng) * t ** 3 + a * t)
    keep = [v for v in ring.variables if v != "t"]
    gens = [ring.var(v) - img for v, img in zip(keep, imgs)]
    E = eliminate(Ideal(ring, gens), keep)
    params = [Fraction(k, 3) for k in range(-12, 13)]
    pts = [tuple(img.evaluate({"t": tv}) for img in imgs) for tv in params]
    sub = E.ring
    interp = [Poly(sub, q) for q in vanishing_polys(pts, len(keep), 3)]
    ok = all(all(g.evaluate(dict(zip(keep, p))) == 0 for p in pts) for g in E.generators)
    ok = ok and Ideal(sub, interp) == E and len(pts) >= 20
    return ok, f"eliminate t from {[str(g) for g in gens]}"


def saturation_instance(seed: int) -> Tuple[bool, str]:
    """Saturation against two brute-force answers.

    Even seeds: ``I(P) * <f^k>`` saturated by ``f`` is ``I`` of the points of
    ``P`` off ``f = 0``.  Odd seeds: ``<x^k g>`` saturated by ``x`` is ``<g>``
    once every factor ``x`` is divided out of ``g``.
    """
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    ring = PolyRing(_names("x", n), frozenset())
    if seed % 2 == 0:
        P = _distinct_points(ring, rng, rng.randint(1, 3))
        f = ring.var(ring.variables[0]) - rng.choice([p[0] for p in P] + [Fraction(7)])
        k = rng.randint(1, 2)
        I = points_ideal(ring, P) * Ideal(ring, [f ** k])
        keep = [p for p in P if f.evaluate(dict(zip(ring.variables, p))) != 0]
        want = points_ideal(ring, keep)
        return saturate(I, f) == want, f"saturate I({P}) * <({f})^{k}> by {f}"
    x = ring.var(ring.variables[0])
    g = _rand_poly(ring, rng, rng.randint(1, 3), 3)
    if g.is_zero():
        g = ring.one()
    k = rng.randint(1, 3)
    I = Ideal(ring, [x ** k * g])
    core = g
    while all(e[0] > 0 for e in core.terms):
        core = _divide_by_var(core, 0)
    return saturate(I, x) == Ideal(ring, [core]), f"saturate <{x}^{k}*({g})> by {x}"


def _divide_by_var(p: Poly, i: int) -> Poly:
    terms = {}
    for e, c in p.terms.items():
        e = list(e)
        e[i] -= 1
        terms[tuple(e)] = c
    return Poly(p.ring, terms)


COMMALG_ORACLES = {
    "elimination": elimination_instance,
    "contraction": contraction_instance,
    "extension": extension_instance,
    "saturation": saturation_instance,
}
