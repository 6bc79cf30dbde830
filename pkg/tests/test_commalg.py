import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from stratglue.catalog import example
from stratglue.oracles import random_closed_set
from stratglue.commalg import (
    AlgMap,
    Ideal,
    PolyParseError,
    PolyRing,
    RingMismatch,
    contract,
    eliminate,
    extend,
    groebner,
    ideal_equal,
    ideal_membership,
    ideal_subset,
    intersect,
    parse_poly,
    point_in_variety,
    same_variety,
    saturate,
)

QX = PolyRing(("x",))
QXY = PolyRing(("x", "y"))
QXYZ = PolyRing(("x", "y", "z"))
Z0 = PolyRing(("t", "D"), {"t", "D"})          # k[t^{±1}, D^{±1}]
Z0B = PolyRing(("t", "D"), {"D"})              # k[t, D^{±1}]
ZB = PolyRing(("s",), {"s"})                   # k[s^{±1}]


# -- parsing and arithmetic ---------------------------------------------------------

def test_parse_and_print():
    p = parse_poly(Z0, "D - 3/2*t^2")
    assert str(p) == "-3/2*t^2 + D"
    assert p.evaluate({"t": 2, "D": 1}) == Fraction(-5)


def test_negative_exponent_needs_inverted_variable():
    assert parse_poly(ZB, "s^-1") * parse_poly(ZB, "s") == ZB.one()
    with pytest.raises(PolyParseError):
        parse_poly(QX, "x^-1")


@pytest.mark.parametrize("bad", ["x +", "y", "x^(1/2)", "import os"])
def test_parse_errors(bad):
    with pytest.raises(PolyParseError):
        parse_poly(QX, bad)


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        Ideal(QX, ["x"]) + Ideal(QXY, ["x"])


# -- groebner ----------------------------------------------------------------------

def test_groebner_principal():
    assert [str(g) for g in groebner(Ideal(QX, ["x - 1"]))] == ["x - 1"]


def test_groebner_membership_x4_minus_x():
    I = Ideal(QXY, ["x^2 - y", "y^2 - x"])
    assert ideal_membership(parse_poly(QXY, "x^4 - x"), I)
    assert not ideal_membership(parse_poly(QXY, "x^3 - 1"), I)


def test_groebner_unit():
    I = Ideal(QX, ["x", "x - 1"])
    assert I.is_unit()
    assert groebner(I) == (QX.one(),)


def test_membership_basics():
    I = Ideal(QXY, ["x*y - 1"])
    assert I.contains("x*y - 1")
    assert not I.contains("1")


def test_laurent_membership():
    assert Ideal(Z0B, ["D - t"]).contains("D - t")
    # D is invertible, so <t*D> = <t>
    assert Ideal(Z0B, ["t*D"]).contains("t")


def _to_sympy(p):
    return sympy.expand(sympy.sympify(str(p).replace("^", "**")))


def _sympy_basis(gens, syms):
    G = sympy.groebner([sympy.sympify(g.replace("^", "**")) for g in gens], *syms, order="grevlex")
    if list(G.exprs) == [0]:
        return []
    return sorted(str(sympy.expand(g / sympy.Poly(g, *syms).LC(order="grevlex"))) for g in G.exprs)


small_coeff = st.integers(-3, 3)
term = st.tuples(small_coeff, st.integers(0, 2), st.integers(0, 2), st.integers(0, 1))
poly_text = st.lists(term, min_size=1, max_size=3).map(
    lambda ts: " + ".join(f"({c})*x^{a}*y^{b}*z^{d}" for c, a, b, d in ts))
gen_lists = st.lists(poly_text, min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(gen_lists)
def test_groebner_matches_sympy(gens):
    ours = sorted(str(_to_sympy(p)) for p in groebner(Ideal(QXYZ, gens)))
    assert ours == _sympy_basis(gens, sympy.symbols("x y z"))


@settings(max_examples=30, deadline=None)
@given(gen_lists, st.randoms(use_true_random=False))
def test_groebner_idempotent_and_order_free(gens, rnd):
    I = Ideal(QXYZ, gens)
    G = groebner(I)
    assert groebner(Ideal(QXYZ, list(G))) == G
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert groebner(Ideal(QXYZ, shuffled)) == G


# -- elimination, contraction, extension ---------------------------------------------------

def test_eliminate_graph_of_parabola_is_dense():
    assert eliminate(Ideal(QXY, ["y - x^2"]), ["y"]).is_zero()


def test_eliminate_diagonal():
    R = PolyRing(("t", "u", "v"))
    J = eliminate(Ideal(R, ["u - t", "v - t"]), ["u", "v"])
    assert ideal_equal(J, Ideal(J.ring, ["u - v"]))


def test_contract_along_inclusion_gl2():
    incl = AlgMap(Z0B, Z0, {"t": "t", "D": "D"})
    mu = Fraction(7, 3)
    C = contract(incl, Ideal(Z0, [f"D - {mu}"]))
    assert ideal_equal(C, Ideal(Z0B, [f"D - {mu}"]))
    assert ideal_equal(contract(incl, Ideal(Z0, ["D - t"])), Ideal(Z0B, ["D - t"]))
    assert contract(incl, Ideal.zero(Z0)).is_zero()
    assert contract(AlgMap.identity(Z0), Ideal.unit(Z0)).is_unit()


def test_extend_along_f0b():
    f = AlgMap(Z0B, ZB, {"t": "0", "D": "s"})
    assert ideal_equal(extend(f, Ideal(Z0B, ["D - 5"])), Ideal(ZB, ["s - 5"]))
    assert extend(f, Ideal(Z0B, ["t - 4"])).is_unit()


def test_identity_extension():
    I = Ideal(QXY, ["x^2 - y"])
    assert ideal_equal(extend(AlgMap.identity(QXY), I), I)


def test_saturation_examples():
    assert ideal_equal(saturate(Ideal(QXY, ["x*y"]), "x"), Ideal(QXY, ["y"]))
    assert saturate(Ideal(QXY, ["x"]), "x").is_unit()
    R = PolyRing(("x", "D"), {"D"})
    assert ideal_equal(saturate(Ideal(R, ["x^2*(D - 3)"]), "x"), Ideal(R, ["D - 3"]))


def test_point_in_variety():
    mu = Fraction(2)
    assert point_in_variety(Ideal(Z0B, [f"D - {mu}"]), {"t": 3, "D": mu})
    assert not point_in_variety(Ideal(Z0B, ["t - 4"]), {"t": 5, "D": 1})
    assert not point_in_variety(Ideal.unit(Z0B), {"t": 1, "D": 1})


def test_ideal_equality_is_not_variety_equality():
    assert ideal_equal(Ideal(QXY, ["x - 1", "y"]), Ideal(QXY, ["y", "x - 1"]))
    assert not ideal_equal(Ideal(QX, ["x"]), Ideal(QX, ["x^2"]))
    assert same_variety(Ideal(QX, ["x"]), Ideal(QX, ["x^2"]))


def test_laurent_two_presentations():
    assert ideal_equal(Ideal(Z0B, ["D - 3"]), Ideal(Z0B, ["D^2 - 3*D"]))


def test_intersect():
    I = intersect(Ideal(QX, ["x - 1"]), Ideal(QX, ["x - 2"]))
    assert ideal_equal(I, Ideal(QX, ["x^2 - 3*x + 2"]))


# -- invariants over the catalog maps -----------------------------------------------------

def _catalog_pairs():
    out = []
    for name in ("oq_gl2", "oq_m2"):
        m = example(name)
        out += [(m, p) for p in sorted(m.zjk)]
    return out


@pytest.mark.parametrize("model,pair", _catalog_pairs(), ids=lambda x: getattr(x, "name", str(x)))
def test_contract_then_extend_is_inside(model, pair):
    g = model.g_map(pair)
    space = model.space(pair[0])
    rng = random.Random(f"{model.name}:{pair}")
    for _ in range(4):
        I = space.ideal_of(random_closed_set(space, rng).closed)
        assert ideal_subset(extend(g, contract(g, I)), I)


@settings(max_examples=25, deadline=None)
@given(gen_lists, st.sampled_from([["x"], ["y"], ["x", "z"], ["y", "z"]]))
def test_eliminate_is_subideal(gens, keep):
    I = Ideal(QXYZ, gens)
    J = eliminate(I, keep)
    embed = AlgMap(J.ring, QXYZ, {v: v for v in J.ring.variables})
    assert ideal_subset(extend(embed, J), I)


@settings(max_examples=25, deadline=None)
@given(gen_lists, st.sampled_from(["x", "y", "x*y", "x + 1"]))
def test_saturation_contains_and_idempotent(gens, f):
    I = Ideal(QXYZ, gens)
    S = saturate(I, f)
    assert ideal_subset(I, S)
    assert saturate(S, f) == S


@pytest.mark.parametrize("name", ["oq_gl2", "oq_m2"])
def test_renaming_shortcut_matches_graph_contraction(name):
    from stratglue.commalg.ideal import _contract_graph, _variable_embedding

    m = example(name)
    for pair in sorted(m.zjk):
        g = m.g_map(pair)
        assert _variable_embedding(g) is not None
        space = m.space(pair[0])
        rng = random.Random(f"graph:{name}:{pair}")
        for _ in range(3):
            Y = random_closed_set(space, rng).closed
            I = space.ideal_of(Y) if Y.kind != "empty" else Ideal.unit(space.ring)
            if Y.kind == "whole":
                I = Ideal.zero(space.ring)
            assert ideal_equal(contract(g, I), _contract_graph(g, I))
