"""Ideals in (Laurent) polynomial rings and ring maps between them.

Every computation runs in the internal presentation of the ring, where each
inverted variable has a companion and the relation ``x * x^-1 - 1`` is part
of every ideal.  That makes every ideal automatically saturated by the
inverted variables, i.e. an honest ideal of the Laurent ring.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .groebner import ORDERS, Raw, block_key, buchberger, grevlex_key, normal_form
from .poly import Poly, PolyRing, Scalar


class RingMismatch(ValueError):
    pass


def _check_ring(ring: PolyRing, other: PolyRing, what: str = "ideal"):
    if ring != other:
        raise RingMismatch(f"{what} lives in {other}, expected {ring}")


class Ideal:
    """Ideal of a PolyRing given by generators.

    Reduced Groebner bases are cached per monomial order.
    """

    def __init__(self, ring: PolyRing, generators: Iterable = ()):
        self.ring = ring
        gens = [ring.poly(g) for g in generators]
        self.generators: Tuple[Poly, ...] = tuple(g for g in gens if not g.is_zero())
        self._gb: Dict[str, List[Raw]] = {}

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [])

    @classmethod
    def of_point(cls, ring: PolyRing, point: Mapping[str, Scalar]) -> "Ideal":
        """Maximal ideal of a rational point."""
        for v in ring.inverted:
            if Fraction(point[v]) == 0:
                raise ValueError(f"coordinate {v}=0 is not allowed: {v} is inverted")
        return cls(ring, [ring.var(v) - Fraction(point[v]) for v in ring.variables])

    def internal(self) -> List[Raw]:
        return [dict(g.terms) for g in self.generators] + self.ring.relations()

    def groebner_raw(self, order: str = "grevlex") -> List[Raw]:
        if order not in self._gb:
            self._gb[order] = buchberger(self.internal(), ORDERS[order])
        return self._gb[order]

    def groebner(self, order: str = "grevlex") -> Tuple[Poly, ...]:
        """Reduced Groebner basis (internal presentation, companions as x^-1)."""
        polys = (_raw_poly(self.ring, g) for g in self.groebner_raw(order))
        # relations x * x^-1 - 1 vanish as Laurent polynomials
        return tuple(p for p in polys if not p.is_zero())

    def reduce(self, f) -> Poly:
        f = self.ring.poly(f)
        r = normal_form(dict(f.terms), self.groebner_raw(), grevlex_key)
        return Poly(self.ring, r)

    def contains(self, f) -> bool:
        return ideal_membership(self.ring.poly(f), self)

    __contains__ = contains

    def is_unit(self) -> bool:
        gb = self.groebner_raw()
        return len(gb) == 1 and set(gb[0]) == {(0,) * self.ring.nvars}

    def is_zero(self) -> bool:
        # generators are canonical Laurent polynomials, so nonzero means nonzero
        return not self.generators

    def __add__(self, other: "Ideal") -> "Ideal":
        _check_ring(self.ring, other.ring)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _check_ring(self.ring, other.ring)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash((self.ring, tuple(tuple(sorted(g.items())) for g in self.groebner_raw())))

    def display_generators(self) -> List[Poly]:
        """Generators of the polynomial part ``I ∩ Q[x]``, which generate I.

        Inverted-variable content is divided out and each generator is monic.
        """
        ring = self.ring
        if self.is_unit():
            return [ring.one()]
        n = len(ring.variables)
        nc = len(ring.companions)
        if nc == 0:
            basis = self.groebner_raw()
        else:
            # companions first so they are eliminated
            perm = list(range(n, n + nc)) + list(range(n))
            gens = [{tuple(e[i] for i in perm): c for e, c in g.items()} for g in self.internal()]
            gb = buchberger(gens, block_key(nc))
            basis = []
            for g in gb:
                if all(not any(e[:nc]) for e in g):
                    basis.append({tuple(e[nc:]) + (0,) * nc: c for e, c in g.items()})
        out = []
        for g in basis:
            p = _strip_content(Poly(ring, g))
            if not p.is_zero() and p not in out:
                out.append(p)
        return out

    def __str__(self):
        gens = self.display_generators()
        if not gens:
            return "<0>"
        return "<" + ", ".join(str(g) for g in gens) + ">"

    def __repr__(self):
        return f"Ideal({str(self)} in {self.ring})"


def _raw_poly(ring: PolyRing, g: Raw) -> Poly:
    return Poly(ring, g)


def _strip_content(p: Poly) -> Poly:
    """Divide out the largest unit monomial factor and normalise the leading coefficient."""
    ring = p.ring
    if p.is_zero():
        return p
    exps = [p.exponents(e) for e in p.terms]
    unit = {}
    for v in ring.inverted:
        unit[v] = min(ex.get(v, 0) for ex in exps)
    q = p * ring.monomial({v: -k for v, k in unit.items() if k})
    (_, lc) = q.sorted_terms()[0]
    return q / lc


# -- operations ----------------------------------------------------------

def groebner(I: Ideal, order: str = "grevlex") -> Tuple[Poly, ...]:
    """Reduced Groebner basis of ``I`` for ``order`` ("grevlex" or "lex")."""
    return I.groebner(order)


def ideal_membership(f: Poly, I: Ideal) -> bool:
    _check_ring(I.ring, f.ring, "polynomial")
    if f.is_zero():
        return True
    return not normal_form(dict(f.terms), I.groebner_raw(), grevlex_key)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Equality of ideals (not of varieties): same reduced grevlex basis."""
    _check_ring(I.ring, J.ring)
    return I.groebner_raw() == J.groebner_raw()


def ideal_subset(I: Ideal, J: Ideal) -> bool:
    _check_ring(I.ring, J.ring)
    return all(ideal_membership(g, J) for g in I.generators)


def _embed(terms: Raw, offset: int, total: int) -> Raw:
    out = {}
    for e, c in terms.items():
        v = [0] * total
        v[offset:offset + len(e)] = e
        out[tuple(v)] = c
    return out


def _eliminate_raw(gens: Sequence[Raw], split: int) -> List[Raw]:
    """Generators of the ideal intersected with the ring of variables ``split:``."""
    gb = buchberger(gens, block_key(split))
    return [{e[split:]: c for e, c in g.items()} for g in gb if all(not any(e[:split]) for e in g)]


def eliminate(I: Ideal, keep: Iterable[str]) -> Ideal:
    """``I ∩ Q[keep]`` as an ideal of the subring on ``keep`` (block order)."""
    ring = I.ring
    keep = set(keep)
    missing = keep - set(ring.variables)
    if missing:
        raise KeyError(f"unknown variables {sorted(missing)}")
    keep = [v for v in ring.variables if v in keep]
    sub = PolyRing(tuple(keep), ring.inverted & set(keep))
    keep_idx = [ring.index(v) for v in keep] + [ring.companion_index(v) for v in sub.companions]
    drop_idx = [i for i in range(ring.nvars) if i not in keep_idx]
    perm = drop_idx + keep_idx
    gens = [{tuple(e[i] for i in perm): c for e, c in g.items()} for g in I.internal()]
    kept = _eliminate_raw(gens, len(drop_idx))
    return Ideal(sub, [Poly(sub, g) for g in kept])


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` via ``(w I + (1 - w) J) ∩ R``."""
    _check_ring(I.ring, J.ring)
    ring = I.ring
    n = ring.nvars
    w = {tuple([1] + [0] * n): Fraction(1)}
    one = {(0,) * (n + 1): Fraction(1)}
    gens = []
    for g in I.internal():
        gens.append(_mul(w, _embed(g, 1, n + 1)))
    for g in J.internal():
        gens.append(_mul(_sub(one, w), _embed(g, 1, n + 1)))
    return Ideal(ring, [Poly(ring, g) for g in _eliminate_raw(gens, 1)])


def saturate(I: Ideal, f) -> Ideal:
    """``I : f^∞`` by adjoining ``w`` with ``w f - 1`` and eliminating ``w``."""
    ring = I.ring
    f = ring.poly(f)
    n = ring.nvars
    w = {tuple([1] + [0] * n): Fraction(1)}
    one = {(0,) * (n + 1): Fraction(1)}
    gens = [_embed(g, 1, n + 1) for g in I.internal()]
    gens.append(_sub(_mul(w, _embed(dict(f.terms), 1, n + 1)), one))
    return Ideal(ring, [Poly(ring, g) for g in _eliminate_raw(gens, 1)])


def radical_contains(I: Ideal, f) -> bool:
    """Whether ``f`` lies in the radical of ``I`` (Rabinowitsch trick)."""
    ring = I.ring
    f = ring.poly(f)
    if f.is_zero():
        return True
    n = ring.nvars
    w = {tuple([1] + [0] * n): Fraction(1)}
    one = {(0,) * (n + 1): Fraction(1)}
    gens = [_embed(g, 1, n + 1) for g in I.internal()]
    gens.append(_sub(one, _mul(w, _embed(dict(f.terms), 1, n + 1))))
    gb = buchberger(gens, grevlex_key)
    return len(gb) == 1 and set(gb[0]) == {(0,) * (n + 1)}


def same_variety(I: Ideal, J: Ideal) -> bool:
    """``V(I) == V(J)`` over an algebraic closure, i.e. equal radicals."""
    _check_ring(I.ring, J.ring)
    return all(radical_contains(J, g) for g in I.generators) and all(
        radical_contains(I, g) for g in J.generators
    )


def variety_subset(I: Ideal, J: Ideal) -> bool:
    """``V(I) ⊆ V(J)``, i.e. ``J ⊆ rad(I)``."""
    _check_ring(I.ring, J.ring)
    return all(radical_contains(I, g) for g in J.generators)


def point_in_variety(I: Ideal, point: Mapping[str, Scalar]) -> bool:
    """Whether every generator of ``I`` vanishes at the rational ``point``."""
    for v in I.ring.inverted:
        if Fraction(point[v]) == 0:
            raise ValueError(f"coordinate {v}=0 is not allowed: {v} is inverted")
    return all(g.evaluate(point) == 0 for g in I.generators)


def _mul(f: Raw, g: Raw) -> Raw:
    out: Raw = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _sub(f: Raw, g: Raw) -> Raw:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, Fraction(0)) - c
    return {e: c for e, c in out.items() if c}


# -- ring maps -------------------------------------------------------------

@dataclass(frozen=True)
class AlgMap:
    """Q-algebra map ``source -> target`` given by the image of each source variable."""

    source: PolyRing
    target: PolyRing
    images: Tuple[Tuple[str, Poly], ...]

    def __init__(self, source: PolyRing, target: PolyRing, images: Mapping[str, object]):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        if set(images) != set(source.variables):
            raise ValueError(
                f"images must be given for exactly {source.variables}, got {sorted(images)}"
            )
        imgs = tuple((v, target.poly(images[v])) for v in source.variables)
        for v, p in imgs:
            if v in source.inverted and not p.is_unit_monomial():
                raise ValueError(f"image {p} of inverted variable {v} is not a unit of {target}")
        object.__setattr__(self, "images", imgs)

    @property
    def image_of(self) -> Dict[str, Poly]:
        return dict(self.images)

    def internal_images(self) -> List[Poly]:
        """Images of every internal source variable, companions included."""
        img = self.image_of
        return [img[v] for v in self.source.variables] + [
            img[v].inverse() for v in self.source.companions
        ]

    def __call__(self, p) -> Poly:
        p = self.source.poly(p)
        imgs = self.internal_images()
        out = self.target.zero()
        for e, c in p.terms.items():
            term = self.target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * imgs[i] ** k
            out = out + term
        return out

    def pull_point(self, point: Mapping[str, Scalar]) -> Dict[str, Fraction]:
        """Comorphism on rational points: target point -> source point."""
        return {v: p.evaluate(point) for v, p in self.images}

    def describe(self) -> Dict[str, str]:
        return {v: str(p) for v, p in self.images}

    @classmethod
    def identity(cls, ring: PolyRing) -> "AlgMap":
        return cls(ring, ring, {v: ring.var(v) for v in ring.variables})


def extend(m: AlgMap, I: Ideal) -> Ideal:
    """Ideal of ``m.target`` generated by the images of the generators of ``I``."""
    _check_ring(m.source, I.ring)
    return Ideal(m.target, [m(g) for g in I.generators])


def _variable_embedding(m: AlgMap) -> Optional[List[int]]:
    """Target indices when ``m`` sends internal source variables to distinct internal target variables."""
    out = []
    for img in m.internal_images():
        if len(img.terms) != 1:
            return None
        (e, c), = img.terms.items()
        if c != 1 or sum(e) != 1 or min(e) < 0:
            return None
        out.append(e.index(1))
    return out if len(set(out)) == len(out) else None


def contract(m: AlgMap, I: Ideal) -> Ideal:
    """Preimage ``m^-1(I)`` via elimination from the graph ideal.

    A map that only renames variables is an inclusion of polynomial rings, so
    the other target variables are eliminated directly.
    """
    _check_ring(m.target, I.ring)
    emb = _variable_embedding(m)
    if emb is not None:
        drop = [i for i in range(m.target.nvars) if i not in emb]
        perm = drop + emb
        gens = [{tuple(e[i] for i in perm): c for e, c in g.items()} for g in I.internal()]
        kept = _eliminate_raw(gens, len(drop))
        return Ideal(m.source, [Poly(m.source, g) for g in kept])
    return _contract_graph(m, I)


def _contract_graph(m: AlgMap, I: Ideal) -> Ideal:
    nt = m.target.nvars
    ns = m.source.nvars
    total = nt + ns
    gens = [_embed(g, 0, total) for g in I.internal()]
    for k, img in enumerate(m.internal_images()):
        y = [0] * total
        y[nt + k] = 1
        gens.append(_sub({tuple(y): Fraction(1)}, _embed(dict(img.terms), 0, total)))
    kept = _eliminate_raw(gens, nt)
    return Ideal(m.source, [Poly(m.source, g) for g in kept])
