from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stratglue.commalg import Ideal, PolyRing
from stratglue.topology import (
    ClosedSet,
    ClosedSetError,
    FiniteSpace,
    VarietySpace,
    all_topologies,
    is_t0,
    rational_points,
)

LINE_MINUS_0 = VarietySpace(PolyRing(("y",), {"y"}), "J")
GL2_ZERO = VarietySpace(PolyRing(("t", "D"), {"t", "D"}), "0")
POINT = VarietySpace(PolyRing((), ()), "K")
SIERPINSKI = FiniteSpace(["x", "y"], [[], ["y"], ["x", "y"]])


def test_finite_space_basics():
    assert SIERPINSKI.topology_problems() == []
    assert SIERPINSKI.closure({"x"}) == frozenset({"x", "y"})
    assert SIERPINSKI.specialization_leq("x", "y")
    assert not SIERPINSKI.specialization_leq("y", "x")
    assert SIERPINSKI.render(SIERPINSKI.empty()) == "∅"


def test_not_a_topology():
    bad = FiniteSpace([1, 2, 3], [[], [1], [2], [1, 2, 3]])
    assert any("union" in p for p in bad.topology_problems())


def test_unknown_point_rejected():
    with pytest.raises(ClosedSetError):
        FiniteSpace([1], [[], [1, 2]])


@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 19), (4, 219)])
def test_t0_topology_counts(n, count):
    # labelled T0 topologies correspond to labelled partial orders
    tops = all_topologies(n)
    assert len(tops) == count
    assert all(is_t0(t) and not t.topology_problems() for t in tops)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 29)])
def test_all_topology_counts(n, count):
    assert len(all_topologies(n, t0_only=False)) == count


def test_normalize_finite_points():
    Y = LINE_MINUS_0.normalize(ClosedSet.variety(Ideal(LINE_MINUS_0.ring, ["(y - 2)*(y + 3)"])))
    assert Y.kind == "points"
    assert set(Y.points) == {(Fraction(2),), (Fraction(-3),)}


def test_normalize_extremes():
    R = LINE_MINUS_0.ring
    assert LINE_MINUS_0.normalize(ClosedSet.variety(Ideal.unit(R))).kind == "empty"
    assert LINE_MINUS_0.normalize(ClosedSet.variety(Ideal.zero(R))).kind == "whole"
    # y is a unit, so V(y) is empty
    assert LINE_MINUS_0.normalize(ClosedSet.variety(Ideal(R, ["y"]))).kind == "empty"


def test_zero_dimensional_stratum():
    assert POINT.normalize(ClosedSet.finite_points([()])).kind == "whole"
    assert POINT.render(POINT.whole(), "K") == "{K}"
    assert POINT.render(POINT.empty(), "K") == "∅"


def test_point_on_inverted_axis_rejected():
    with pytest.raises(ClosedSetError):
        LINE_MINUS_0.check_point((0,))


def test_render_forms():
    pt = GL2_ZERO.normalize(ClosedSet.finite_points([(1, 5)]))
    assert GL2_ZERO.render(pt) == "point t=1, D=5"
    curve = GL2_ZERO.normalize(ClosedSet.variety(Ideal(GL2_ZERO.ring, ["D - t^2"])))
    assert curve.kind == "variety"
    assert GL2_ZERO.render(curve).startswith("V<")
    assert GL2_ZERO.render(GL2_ZERO.whole(), "0") == "whole 0"


def test_rational_points_linear_and_univariate():
    R = GL2_ZERO.ring
    assert rational_points(Ideal(R, ["t - 1", "D - 2"])) == [(Fraction(1), Fraction(2))]
    # irrational roots and positive-dimensional loci stay as ideals
    assert rational_points(Ideal(LINE_MINUS_0.ring, ["y^2 - 2"])) is None
    assert rational_points(Ideal(R, ["D - t^2"])) is None
    assert rational_points(Ideal(LINE_MINUS_0.ring, ["y^2 - 4"])) == [(Fraction(-2),), (Fraction(2),)]


def test_variety_subset_uses_zero_loci():
    R = GL2_ZERO.ring
    A = ClosedSet.variety(Ideal(R, ["(D - t)^2"]))
    B = ClosedSet.variety(Ideal(R, ["D - t"]))
    assert GL2_ZERO.equal(A, B)
    assert GL2_ZERO.subset(GL2_ZERO.normalize(ClosedSet.finite_points([(2, 2)])), B)


nonzero = st.integers(-6, 6).filter(bool).map(Fraction)
point_sets = st.lists(nonzero, max_size=4).map(lambda xs: [(x,) for x in xs])


@settings(max_examples=60, deadline=None)
@given(point_sets, point_sets)
def test_point_set_algebra(a, b):
    sp = LINE_MINUS_0
    A = sp.normalize(ClosedSet.finite_points(a))
    B = sp.normalize(ClosedSet.finite_points(b))
    U, N = sp.union(A, B), sp.intersection(A, B)
    want_u, want_n = set(a) | set(b), set(a) & set(b)
    assert set(U.points) == want_u
    assert set(N.points) == want_n
    assert sp.subset(N, A) and sp.subset(A, U)
    # the same sets presented by ideals agree
    assert sp.equal(ClosedSet.variety(sp.ideal_of(U)), U)


@settings(max_examples=30, deadline=None)
@given(point_sets, point_sets)
def test_union_via_ideal_product(a, b):
    sp = GL2_ZERO
    A = sp.normalize(ClosedSet.finite_points([(x, x + 1 or 1) for (x,) in a]))
    B = sp.normalize(ClosedSet.variety(Ideal(sp.ring, [f"D - {b[0][0] if b else 1}*t"])))
    U = sp.union(A, B)
    assert sp.subset(A, U) and sp.subset(B, U)
    assert sp.equal(sp.intersection(U, B), B)
