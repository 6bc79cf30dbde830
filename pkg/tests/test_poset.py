import pytest
from hypothesis import given, settings, strategies as st

from stratglue.catalog import example
from stratglue.poset import (
    Poset,
    PosetError,
    covers,
    heights,
    product_order,
    to_dot,
    validate_poset,
)

DIAMOND = Poset.from_covers(["0", "b", "c", "bc"], [("0", "b"), ("0", "c"), ("b", "bc"), ("c", "bc")])


def test_chain_valid():
    assert validate_poset(Poset.chain(3)) == []
    assert covers(Poset.chain(3)) == [(0, 1), (1, 2)]


def test_antisymmetry_violation():
    p = Poset(["a", "b"], [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")])
    problems = validate_poset(p)
    assert any(msg.startswith("antisymmetry") for msg in problems)
    with pytest.raises(PosetError):
        covers(p)


def test_missing_reflexive_and_transitive_pairs():
    p = Poset([1, 2, 3], [(1, 1), (2, 2), (3, 3), (1, 2), (2, 3)])
    assert any(m.startswith("transitivity") for m in validate_poset(p))
    q = Poset([1, 2], [(1, 2), (2, 2)])
    assert any(m.startswith("reflexivity") for m in validate_poset(q))


def test_unknown_element_rejected():
    with pytest.raises(PosetError):
        Poset([1], [(1, 2)])


def test_diamond_covers():
    assert validate_poset(DIAMOND) == []
    assert set(covers(DIAMOND)) == {("0", "b"), ("0", "c"), ("b", "bc"), ("c", "bc")}


def test_m2_cover_examples():
    p = example("oq_m2").poset
    cov = set(covers(p))
    assert len(cov) == 27
    assert ("Δ", "ab") in cov and ("bc", "abc") in cov


def test_linear_extension_respects_order():
    ext = DIAMOND.linear_extension()
    pos = {x: i for i, x in enumerate(ext)}
    assert all(pos[a] <= pos[b] for a, b in DIAMOND.leq)


def test_heights_and_extremes():
    h = heights(DIAMOND)
    assert h == {"0": 0, "b": 1, "c": 1, "bc": 2}
    assert DIAMOND.minimal() == ["0"] and DIAMOND.maximal() == ["bc"]


def test_json_round_trip():
    assert Poset.from_json(DIAMOND.to_json()) == DIAMOND
    doc = {"elements": ["0", "b", "c", "bc"], "covers": [["0", "b"], ["0", "c"], ["b", "bc"], ["c", "bc"]]}
    assert Poset.from_json(doc) == DIAMOND


def test_dot_chain_has_two_edges():
    dot = to_dot(Poset.chain(3), "chain")
    assert dot.count("->") == 2
    assert dot.startswith('digraph "chain"')


def test_dot_is_deterministic():
    assert to_dot(DIAMOND, "d") == to_dot(Poset.from_json(DIAMOND.to_json()), "d")


def test_product_order_size():
    p = product_order(Poset.chain(2), Poset.chain(3))
    assert len(p.elements) == 6 and len(covers(p)) == 7


@st.composite
def random_dag_posets(draw):
    n = draw(st.integers(1, 7))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
    return Poset.from_covers(range(n), [(a, b) for a, b in edges if a < b])


@settings(max_examples=60, deadline=None)
@given(random_dag_posets())
def test_closure_of_dag_is_partial_order(p):
    assert validate_poset(p) == []
    # the order is recovered from its covers
    assert Poset.from_covers(p.elements, covers(p)) == p
    for a, b in covers(p):
        assert not any(p.lt(a, c) and p.lt(c, b) for c in p.elements)
