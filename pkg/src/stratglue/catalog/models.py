"""Hard-coded stratification models of small quantum algebras.

Stratum coordinates: ``t = b c^-1``, ``s = a d`` and ``D`` for the quantum
determinant.  Each stratum ring is the center of the localized quotient; each
pair ``J < K`` carries a common ring ``Z`` with maps ``f: Z -> Z(K)`` and the
inclusion ``g: Z -> Z(J)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..commalg import AlgMap, PolyRing
from ..poset import Poset
from ..qtorus import QTorus
from ..strat import ComorphismRule, PhiMap, StratificationData
from ..topology import VarietySpace
from . import sl3

Pair = Tuple[str, str]


def ring(names: str, inverted: str = "") -> PolyRing:
    """``ring("t D", "D")`` is Q[t, D^{±1}]."""
    return PolyRing(tuple(names.split()), frozenset(inverted.split()))


@dataclass(frozen=True)
class ZData:
    """A common ring ``Z`` for ``J < K`` with generator images under ``f`` and ``g``."""

    ring: PolyRing
    f: Dict[str, str]
    g: Dict[str, str]
    arrows: Tuple[str, str] = ("", "")


@dataclass(frozen=True)
class TorusData:
    """Quantum torus presenting the localized quotient, and the expected center exponents."""

    torus: QTorus
    expected_center: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class MaxIdealData:
    """Maximal ideals of a stratum ring: the generators as printed, and in stratum coordinates."""

    printed: Tuple[str, ...]
    in_coordinates: Tuple[str, ...]
    parameters: Tuple[str, ...]


@dataclass
class ExampleModel:
    name: str
    poset: Poset
    strata_rings: Dict[str, PolyRing] = field(default_factory=dict)
    zjk: Dict[Pair, ZData] = field(default_factory=dict)
    hprime_generators: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    descriptions: Dict[str, str] = field(default_factory=dict)
    coordinates: Dict[str, Dict[str, str]] = field(default_factory=dict)
    inverted_sets: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    tori: Dict[str, TorusData] = field(default_factory=dict)
    max_ideals: Dict[str, MaxIdealData] = field(default_factory=dict)
    aliases: Dict[str, str] = field(default_factory=dict)

    @property
    def zjk_rings(self) -> Dict[Pair, PolyRing]:
        return {p: z.ring for p, z in self.zjk.items()}

    def f_map(self, pair: Pair) -> AlgMap:
        z = self.zjk[pair]
        return AlgMap(z.ring, self.strata_rings[pair[1]], z.f)

    def g_map(self, pair: Pair) -> AlgMap:
        z = self.zjk[pair]
        return AlgMap(z.ring, self.strata_rings[pair[0]], z.g)

    @property
    def f_maps(self) -> Dict[Pair, AlgMap]:
        return {p: self.f_map(p) for p in self.zjk}

    @property
    def g_maps(self) -> Dict[Pair, AlgMap]:
        return {p: self.g_map(p) for p in self.zjk}

    def label(self, text: str) -> str:
        text = text.strip()
        if text in self.poset.elements:
            return text
        if text in self.aliases:
            return self.aliases[text]
        raise KeyError(f"unknown label {text!r} in {self.name}; known: {', '.join(self.poset.elements)}")

    def space(self, label: str) -> VarietySpace:
        return VarietySpace(self.strata_rings[label], label)

    def to_stratification(self, pairs=None) -> StratificationData:
        if not self.strata_rings:
            raise ValueError(f"{self.name} carries no stratum rings")
        strata = {k: self.space(k) for k in self.poset.elements}
        phis = {}
        for p in pairs if pairs is not None else self.zjk:
            z = self.zjk[p]
            rule = ComorphismRule(self.f_map(p), self.g_map(p), z.arrows)
            phis[p] = PhiMap(p[0], p[1], rule, strata[p[0]], strata[p[1]])
        return StratificationData(self.poset, strata, phis, self.name)


def element_vector(text: str) -> Dict[str, int]:
    """Exponents of a monomial written like ``b*c^-1`` or ``Delta``."""
    out: Dict[str, int] = {}
    for tok in text.replace(" ", "").split("*"):
        name, _, k = tok.partition("^")
        out[name] = out.get(name, 0) + int(k or 1)
    return {k: v for k, v in out.items() if v}


def inclusion_defects(model: ExampleModel, pair: Pair) -> List[str]:
    """Generators of ``Z`` whose ``g``-image is not the same element of the localized quotient."""
    g = model.g_map(pair)
    coords = model.coordinates.get(pair[0], {})
    bad = []
    for v, img in g.images:
        if not img.is_monomial() or img.sorted_terms()[0][1] != 1:
            bad.append(f"{v} -> {img} is not a monomial")
            continue
        exps = img.exponents(img.sorted_terms()[0][0])
        got: Dict[str, int] = {}
        for w, k in exps.items():
            for name, e in element_vector(coords.get(w, w)).items():
                got[name] = got.get(name, 0) + k * e
        got = {k: e for k, e in got.items() if e}
        if got != element_vector(COORDS.get(v, v)):
            bad.append(f"{v} -> {img}")
    return bad


def hprime_height(model: ExampleModel, label: str) -> int:
    """Number of stored generators of the prime indexed by ``label``."""
    return len(model.hprime_generators[model.label(label)])


# -- O_q(k^2): two strata ------------------------------------------------------------

def _oq_k2() -> ExampleModel:
    poset = Poset.from_covers(["J", "K"], [("J", "K")])
    return ExampleModel(
        name="oq_k2",
        poset=poset,
        strata_rings={"J": ring("y", "y"), "K": ring("")},
        zjk={("J", "K"): ZData(ring("y"), {"y": "0"}, {"y": "y"}, ("0", "incl"))},
        hprime_generators={"J": ("x",), "K": ("x", "y")},
        descriptions={"J": "<x>", "K": "<x, y>"},
        coordinates={"J": {"y": "y"}},
        aliases={"x": "J", "<x>": "J", "xy": "K", "<x,y>": "K", "<x, y>": "K"},
    )


# -- shared 2x2 data -------------------------------------------------------------------

COORDS = {"t": "b*c^-1", "s": "a*d", "D": "Delta", "u": "b^-1*c", "w": "a*d"}

B_MATRIX = ((0, 1, 0), (-1, 0, 1), (0, -1, 0))        # a, c, d modulo b (a, b, d modulo c)
DELTA_MATRIX = ((0, 1, 1), (-1, 0, 0), (-1, 0, 0))    # a, b, c modulo the determinant
ZERO_MATRIX = ((0, 1, 1, 0), (-1, 0, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 0))  # a, b, c, D
PLANE = ((0, 1), (-1, 0))


def _low_strata() -> Dict[str, PolyRing]:
    return {"0": ring("t D", "t D"), "b": ring("s", "s"), "c": ring("s", "s"), "bc": ring("a d", "a d")}


def _low_tori() -> Dict[str, TorusData]:
    return {
        "0": TorusData(QTorus(ZERO_MATRIX, ("a", "b", "c", "D")), ((0, 1, -1, 0), (0, 0, 0, 1))),
        "b": TorusData(QTorus(B_MATRIX, ("a", "c", "d")), ((1, 0, 1),)),
        "c": TorusData(QTorus(B_MATRIX, ("a", "b", "d")), ((1, 0, 1),)),
        "bc": TorusData(QTorus(((0, 0), (0, 0)), ("a", "d")), ((1, 0), (0, 1))),
    }


def _low_max_ideals() -> Dict[str, MaxIdealData]:
    return {
        "0": MaxIdealData(("b - lam*c", "Delta - mu"), ("t - lam", "D - mu"), ("lam", "mu")),
        "b": MaxIdealData(("a*d - mu",), ("s - mu",), ("mu",)),
        "c": MaxIdealData(("a*d - mu",), ("s - mu",), ("mu",)),
        "bc": MaxIdealData(("a - alpha", "d - delta"), ("a - alpha", "d - delta"), ("alpha", "delta")),
    }


# -- O_q(GL_2) -------------------------------------------------------------------------

def _oq_gl2() -> ExampleModel:
    poset = Poset.from_covers(["0", "b", "c", "bc"], [("0", "b"), ("0", "c"), ("b", "bc"), ("c", "bc")])
    zjk = {
        ("0", "b"): ZData(ring("t D", "D"), {"t": "0", "D": "s"}, {"t": "t", "D": "D"}, ("(0,-)", "incl")),
        ("0", "c"): ZData(ring("u D", "D"), {"u": "0", "D": "s"}, {"u": "t^-1", "D": "D"}, ("(0,-)", "incl")),
        ("0", "bc"): ZData(ring("D", "D"), {"D": "a*d"}, {"D": "D"}, ("mult", "pr2")),
        ("b", "bc"): ZData(ring("s", "s"), {"s": "a*d"}, {"s": "s"}, ("mult", "id")),
        ("c", "bc"): ZData(ring("s", "s"), {"s": "a*d"}, {"s": "s"}, ("mult", "id")),
    }
    return ExampleModel(
        name="oq_gl2",
        poset=poset,
        strata_rings=_low_strata(),
        zjk=zjk,
        hprime_generators={"0": (), "b": ("b",), "c": ("c",), "bc": ("b", "c")},
        descriptions={"0": "<0>", "b": "<b>", "c": "<c>", "bc": "<b, c>"},
        coordinates={"0": {"t": COORDS["t"], "D": "Delta"}, "b": {"s": "a*d"}, "c": {"s": "a*d"},
                     "bc": {"a": "a", "d": "d"}},
        inverted_sets={"0": ("b", "c", "Delta"), "b": ("c", "Delta"), "c": ("b", "Delta"), "bc": ("Delta",)},
        tori=_low_tori(),
        max_ideals=_low_max_ideals(),
        aliases={"<0>": "0", "<b>": "b", "<c>": "c", "<b,c>": "bc"},
    )


# -- O_q(M_2) --------------------------------------------------------------------------

M2_LABELS = ("0", "b", "Δ", "c", "ab", "bd", "bc", "ac", "cd", "abd", "abc", "bcd", "acd", "abcd")
M2_COVERS = (
    ("abd", "abcd"), ("abc", "abcd"), ("bcd", "abcd"), ("acd", "abcd"),
    ("ab", "abd"), ("ab", "abc"),
    ("bd", "abd"), ("bd", "bcd"),
    ("bc", "abc"), ("bc", "bcd"),
    ("ac", "abc"), ("ac", "acd"),
    ("cd", "bcd"), ("cd", "acd"),
    ("b", "ab"), ("b", "bd"), ("b", "bc"),
    ("Δ", "ab"), ("Δ", "bd"), ("Δ", "ac"), ("Δ", "cd"),
    ("c", "bc"), ("c", "ac"), ("c", "cd"),
    ("0", "b"), ("0", "Δ"), ("0", "c"),
)
# variable of the one-dimensional stratum just below the top
TOP_VAR = {"abd": "c", "abc": "d", "bcd": "a", "acd": "b"}
# inverted elements of the localized quotients, as in the multiplicative sets
M2_INVERTED = {
    "abcd": (), "abd": ("c",), "abc": ("d",), "bcd": ("a",), "acd": ("b",),
    "ab": ("c", "d"), "bd": ("a", "c"), "bc": ("a", "d"), "ac": ("b", "d"), "cd": ("a", "b"),
    "b": ("a", "c", "d"), "Δ": ("a", "b", "c", "d"), "c": ("a", "b", "d"), "0": ("b", "c", "Delta"),
}


def _m2_strata() -> Dict[str, PolyRing]:
    out = _low_strata()
    out["Δ"] = ring("t", "t")
    for lab, v in TOP_VAR.items():
        out[lab] = ring(v, v)
    for lab in ("ab", "bd", "ac", "cd", "abcd"):
        out[lab] = ring("")
    return out


def _m2_zjk() -> Dict[Pair, ZData]:
    zjk: Dict[Pair, ZData] = {}
    point = ring("")
    for lab, v in TOP_VAR.items():
        zjk[(lab, "abcd")] = ZData(ring(v), {v: "0"}, {v: v}, ("0", "incl"))
    for lab in ("ab", "bd", "ac", "cd"):
        for K in ("abd", "abc", "bcd", "acd"):
            if (lab, K) in M2_COVERS:
                zjk[(lab, K)] = ZData(point, {}, {}, ("pt", "pt"))
    zjk[("bc", "abc")] = ZData(ring("a d", "d"), {"a": "0", "d": "d"}, {"a": "a", "d": "d"}, ("(0,-)", "incl"))
    zjk[("bc", "bcd")] = ZData(ring("a d", "a"), {"a": "a", "d": "0"}, {"a": "a", "d": "d"}, ("(-,0)", "incl"))
    for J, zeros in (("b", ("ab", "bd")), ("c", ("ac", "cd"))):
        for K in zeros:
            zjk[(J, K)] = ZData(ring("w"), {"w": "0"}, {"w": "s"}, ("0", "incl"))
        zjk[(J, "bc")] = ZData(ring("s", "s"), {"s": "a*d"}, {"s": "s"}, ("mult", "id"))
    for K in ("ab", "bd"):
        zjk[("Δ", K)] = ZData(ring("t"), {"t": "0"}, {"t": "t"}, ("0", "incl"))
    for K in ("ac", "cd"):
        zjk[("Δ", K)] = ZData(ring("u"), {"u": "0"}, {"u": "t^-1"}, ("0", "incl"))
    zjk[("0", "b")] = ZData(ring("t D", "D"), {"t": "0", "D": "s"}, {"t": "t", "D": "D"}, ("(0,-)", "incl"))
    zjk[("0", "c")] = ZData(ring("u D", "D"), {"u": "0", "D": "s"}, {"u": "t^-1", "D": "D"}, ("(0,-)", "incl"))
    zjk[("0", "Δ")] = ZData(ring("t D", "t"), {"t": "t", "D": "0"}, {"t": "t", "D": "D"}, ("(-,0)", "incl"))
    return zjk


def _m2_tori() -> Dict[str, TorusData]:
    out = _low_tori()
    out["Δ"] = TorusData(QTorus(DELTA_MATRIX, ("a", "b", "c")), ((0, 1, -1),))
    for lab in ("ab", "bd", "ac", "cd"):
        names = M2_INVERTED[lab]
        out[lab] = TorusData(QTorus(PLANE, names), ())
    for lab, v in TOP_VAR.items():
        out[lab] = TorusData(QTorus(((0,),), (v,)), ((1,),))
    out["abcd"] = TorusData(QTorus((), ()), ())
    return out


def _m2_max_ideals() -> Dict[str, MaxIdealData]:
    out = _low_max_ideals()
    out["Δ"] = MaxIdealData(("b - lam*c",), ("t - lam",), ("lam",))
    params = {"a": "alpha", "b": "beta", "c": "gamma", "d": "delta"}
    for lab, v in TOP_VAR.items():
        out[lab] = MaxIdealData((f"{v} - {params[v]}",), (f"{v} - {params[v]}",), (params[v],))
    for lab in ("ab", "bd", "ac", "cd", "abcd"):
        out[lab] = MaxIdealData(("0",), (), ())
    return out


def _oq_m2() -> ExampleModel:
    poset = Poset.from_covers(M2_LABELS, M2_COVERS)
    gens = {lab: (() if lab == "0" else ("Δ",) if lab == "Δ" else tuple(lab)) for lab in M2_LABELS}
    strata = _m2_strata()
    coords = {lab: {v: COORDS.get(v, v) for v in strata[lab].variables} for lab in M2_LABELS}
    return ExampleModel(
        name="oq_m2",
        poset=poset,
        strata_rings=strata,
        zjk=_m2_zjk(),
        hprime_generators=gens,
        descriptions={lab: "<" + ", ".join(g) + ">" if g else "<0>" for lab, g in gens.items()},
        coordinates=coords,
        inverted_sets=dict(M2_INVERTED),
        tori=_m2_tori(),
        max_ideals=_m2_max_ideals(),
        aliases={"D": "Δ", "Delta": "Δ", "<Delta>": "Δ"},
    )


# -- quantum SL_3 poset ----------------------------------------------------------------

def _oq_sl3() -> ExampleModel:
    poset = sl3.containment_order()
    gens = {lab: tuple(str(m) for m in sl3.generators(*sl3.split_label(lab))) for lab in poset.elements}
    aliases = {}
    for lab in poset.elements:
        wp, wm = sl3.split_label(lab)
        aliases[f"Q_{{{wp},{wm}}}"] = lab
        aliases[f"({wp},{wm})"] = lab
    return ExampleModel(
        name="oq_sl3_poset",
        poset=poset,
        hprime_generators=gens,
        descriptions={lab: "Q_{" + lab + "}" for lab in poset.elements},
        aliases=aliases,
    )


BUILDERS = {"oq_k2": _oq_k2, "oq_gl2": _oq_gl2, "oq_m2": _oq_m2, "oq_sl3_poset": _oq_sl3}
_CACHE: Dict[str, ExampleModel] = {}


def example(name: str) -> ExampleModel:
    """A catalog model by name: oq_k2, oq_gl2, oq_m2 or oq_sl3_poset."""
    if name not in BUILDERS:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(sorted(BUILDERS))}")
    if name not in _CACHE:
        _CACHE[name] = BUILDERS[name]()
    return _CACHE[name]


def catalog_names() -> List[str]:
    return sorted(BUILDERS)
