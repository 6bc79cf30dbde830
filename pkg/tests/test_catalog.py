import random
from collections import Counter
from dataclasses import replace

import pytest

from stratglue.catalog import (
    LISTED_IDENTITIES,
    MinorLabel,
    SymmetryIdentity,
    catalog_names,
    example,
    hprime_height,
    minor_symmetry,
    symmetry_instance_check,
)
from stratglue.catalog.models import inclusion_defects
from stratglue.catalog.sl3 import (
    bruhat_leq,
    containment_order,
    length,
    reverse_bruhat_product,
    split_label,
)
from stratglue.checks import check_model, max_ideal_check, passed
from stratglue.poset import covers, validate_poset


def test_catalog_names():
    assert catalog_names() == ["oq_gl2", "oq_k2", "oq_m2", "oq_sl3_poset"]
    with pytest.raises(KeyError):
        example("oq_sl4")


def test_gl2_rings():
    m = example("oq_gl2")
    show = {k: (r.variables, sorted(r.inverted)) for k, r in m.strata_rings.items()}
    assert show == {
        "0": (("t", "D"), ["D", "t"]),
        "b": (("s",), ["s"]),
        "c": (("s",), ["s"]),
        "bc": (("a", "d"), ["a", "d"]),
    }
    z = {p: (r.variables, sorted(r.inverted)) for p, r in m.zjk_rings.items()}
    assert z[("0", "b")] == (("t", "D"), ["D"])
    assert z[("0", "bc")] == (("D",), ["D"])
    assert z[("b", "bc")] == (("s",), ["s"])


def test_gl2_poset_is_diamond():
    p = example("oq_gl2").poset
    assert validate_poset(p) == []
    assert set(covers(p)) == {("0", "b"), ("0", "c"), ("b", "bc"), ("c", "bc")}


def test_k2_model():
    m = example("oq_k2")
    assert m.label("<x>") == "J" and m.label("<x, y>") == "K"
    f = m.f_map(("J", "K"))
    assert f.describe() == {"y": "0"}
    assert m.g_map(("J", "K")).describe() == {"y": "y"}


def test_m2_poset_and_aliases():
    m = example("oq_m2")
    assert len(m.poset.elements) == 14
    assert len(covers(m.poset)) == 27
    assert m.label("D") == m.label("Delta") == "Δ"
    assert hprime_height(m, "abcd") == 4
    assert hprime_height(m, "Δ") == 1
    assert hprime_height(example("oq_gl2"), "0") == 0


def test_m2_rank_function():
    # every cover raises the number of generators by exactly one
    m = example("oq_m2")
    for a, b in covers(m.poset):
        assert hprime_height(m, b) == hprime_height(m, a) + 1


@pytest.mark.parametrize("name", ["oq_gl2", "oq_m2"])
def test_g_maps_are_inclusions(name):
    m = example(name)
    for pair in m.zjk:
        assert inclusion_defects(m, pair) == []


def test_inclusion_check_catches_wrong_map():
    m = example("oq_gl2")
    z = m.zjk[("0", "b")]
    bad = replace(m, zjk={**m.zjk, ("0", "b"): replace(z, g={"t": "t^-1", "D": "D"})})
    assert inclusion_defects(bad, ("0", "b"))


@pytest.mark.parametrize("name", ["oq_k2", "oq_gl2", "oq_m2", "oq_sl3_poset"])
def test_check_model_passes(name):
    lines = check_model(example(name), samples=4, seed=3)
    assert passed(lines), [str(l) for l in lines if not l.ok]


def test_max_ideal_points():
    m = example("oq_m2")
    rng = random.Random(4)
    for label in m.max_ideals:
        ok, detail = max_ideal_check(m, label, rng)
        assert ok, detail


# -- SL3 ------------------------------------------------------------------------------

def test_minor_labels():
    assert str(MinorLabel.parse("X13")) == "X13"
    assert MinorLabel.parse("[12|23]") == MinorLabel({1, 2}, {2, 3})
    with pytest.raises(ValueError):
        MinorLabel({1, 2}, {3})
    with pytest.raises(ValueError):
        MinorLabel.parse("Y12")


@pytest.mark.parametrize("sym,src,dst", [
    ("tau", "[13|23]", "[23|13]"),
    ("S", "X12", "[13|23]"),
    ("rho", "[12|13]", "[13|23]"),
])
def test_minor_symmetries(sym, src, dst):
    assert minor_symmetry(sym, MinorLabel.parse(src)) == MinorLabel.parse(dst)


@pytest.mark.parametrize("sym", ["tau", "S", "rho"])
def test_symmetries_are_involutions(sym):
    # proper minors only: S sends the full determinant to the empty minor
    for m in [MinorLabel.parse(x) for x in ("X11", "X23", "[12|13]", "[13|23]")]:
        assert minor_symmetry(sym, minor_symmetry(sym, m)) == m


def test_sl3_poset():
    m = example("oq_sl3_poset")
    assert len(m.poset.elements) == 36
    assert validate_poset(m.poset) == []
    assert m.poset == reverse_bruhat_product()
    assert len(covers(containment_order())) == 96


def test_sl3_heights_follow_lengths():
    m = example("oq_sl3_poset")
    for lab in m.poset.elements:
        wp, wm = split_label(lab)
        assert hprime_height(m, lab) == 6 - length(wp) - length(wm)
    assert hprime_height(m, "123,123") == 6
    counts = Counter(hprime_height(m, lab) for lab in m.poset.elements)
    assert counts == {0: 1, 1: 4, 2: 8, 3: 10, 4: 8, 5: 4, 6: 1}


def test_bruhat():
    assert bruhat_leq("123", "321") and not bruhat_leq("321", "123")
    assert not bruhat_leq("231", "312") and not bruhat_leq("312", "231")


@pytest.mark.parametrize("ident", LISTED_IDENTITIES, ids=lambda i: i.key)
def test_listed_identities(ident):
    assert symmetry_instance_check(ident)


def test_identity_lookup_by_key():
    assert symmetry_instance_check("S(321,231)=321,312")
    assert symmetry_instance_check("tau(231,231)=312,312")
    assert symmetry_instance_check("rho(231,132)=231,213")


def test_unlisted_identity_rejected():
    with pytest.raises(KeyError):
        symmetry_instance_check("tau(123,123)=123,123")
    with pytest.raises(KeyError):
        symmetry_instance_check(SymmetryIdentity("rho", "321,321", "321,321"))

