import random
from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from stratglue.catalog import example
from stratglue.commalg import AlgMap
from stratglue.oracles import (
    COMMALG_ORACLES,
    compare_ftopg,
    eval_raw,
    nullspace,
    random_closed_set,
    sample_closed_sets,
    vanishing_polys,
)
from stratglue.strat import ftopg

matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_nullspace_matches_sympy(rows):
    ncols = len(rows[0])
    ours = nullspace(rows, ncols)
    assert len(ours) == len(sympy.Matrix(rows).nullspace())
    for v in ours:
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)


def test_vanishing_polys_of_a_parabola():
    pts = [(Fraction(k), Fraction(k * k)) for k in range(-4, 5)]
    polys = vanishing_polys(pts, 2, 2)
    assert len(polys) == 1
    (p,) = polys
    assert eval_raw(p, (Fraction(7), Fraction(49))) == 0
    assert eval_raw(p, (Fraction(7), Fraction(48))) != 0


def test_sampled_pieces_lie_in_their_closed_sets():
    space = example("oq_gl2").space("0")
    rng = random.Random(5)
    for _ in range(20):
        Y = random_closed_set(space, rng)
        for pc in Y.pieces:
            for p in pc.sample(rng, 3):
                assert space.contains_point(Y.closed, p)


def test_sample_closed_sets_is_seeded():
    space = example("oq_gl2").space("bc")
    assert sample_closed_sets(space, 6, seed=9) == sample_closed_sets(space, 6, seed=9)


def test_oracle_detects_a_corrupted_f_map():
    m = example("oq_gl2")
    pair = ("0", "b")
    g = m.g_map(pair)
    f_bad = AlgMap(g.source, m.strata_rings["b"], {"t": "0", "D": "2*s"})
    rng = random.Random(1)
    space = m.space("0")
    caught = 0
    for _ in range(30):
        Y = random_closed_set(space, rng)
        res = compare_ftopg(m.f_map(pair), g, Y, ftopg(f_bad, g, Y.closed), rng)
        caught += not res.agree
    assert caught > 0


def test_oracle_agrees_with_the_true_map():
    m = example("oq_gl2")
    pair = ("b", "bc")
    rng = random.Random(2)
    space = m.space("b")
    f, g = m.f_map(pair), m.g_map(pair)
    for _ in range(10):
        Y = random_closed_set(space, rng)
        assert compare_ftopg(f, g, Y, ftopg(f, g, Y.closed), rng).agree


def test_commalg_oracle_registry():
    assert sorted(COMMALG_ORACLES) == ["contraction", "elimination", "extension", "saturation"]
    for name, inst in COMMALG_ORACLES.items():
        ok, detail = inst(100)
        assert ok, f"{name}: {detail}"
