import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grid_chroma.coloring import (
    Method, build_palette, color_ncc1, color_ncc2, color_pair_ncc1, color_window, decompose_ncc2,
    ncc2_components, num_colors,
)
from grid_chroma.geometry import GeneratorBasis

coord = st.integers(-9, 9)
basis_st = st.tuples(coord, coord, coord, coord).filter(
    lambda t: t[0] * t[3] - t[1] * t[2] != 0).map(lambda t: GeneratorBasis.from_coords(*t))
node = st.tuples(st.integers(-60, 60), st.integers(-60, 60))

EXAMPLE = GeneratorBasis.from_coords(6, 2, -3, 6)


def test_worked_example_ncc1():
    assert color_pair_ncc1((8, 9), EXAMPLE) == (33, 38)
    assert color_ncc1((8, 9), build_palette(EXAMPLE)) == 35


def test_worked_example_ncc2():
    dec = decompose_ncc2(EXAMPLE)
    assert (dec.g1, tuple(dec.v1), dec.g2, tuple(dec.v2)) == (2, (3, 1), 3, (-1, 2))
    assert ncc2_components((8, 9), dec) == (4, 1, 2)
    assert color_ncc2((8, 9), dec) == 39
    assert num_colors(EXAMPLE) == dec.d == 42


def test_greedy_method_rejected():
    with pytest.raises(ValueError):
        color_window((0, 0), 3, 3, EXAMPLE, Method.GREEDY)


@settings(max_examples=60)
@given(basis_st)
def test_palette_size(basis):
    pal = build_palette(basis)
    assert len(pal.table) == basis.d
    assert list(pal.table) == sorted(pal.table)


@settings(max_examples=60)
@given(basis_st)
def test_ncc2_surjective(basis):
    dec = decompose_ncc2(basis)
    u1, u2 = basis.u1, basis.u2
    xs = [0, u1.x, u2.x, u1.x + u2.x]
    ys = [0, u1.y, u2.y, u1.y + u2.y]
    seen = {color_ncc2((x, y), dec) for x in range(min(xs), max(xs) + 1) for y in range(min(ys), max(ys) + 1)}
    assert seen == set(range(basis.d))


@given(basis_st, node, st.integers(-4, 4), st.integers(-4, 4))
def test_repetition(basis, w, a, b):
    p = basis.point(a, b)
    shifted = (w[0] + p.x, w[1] + p.y)
    dec = decompose_ncc2(basis)
    assert color_ncc2(shifted, dec) == color_ncc2(w, dec)
    assert color_pair_ncc1(shifted, basis) == color_pair_ncc1(w, basis)


@given(basis_st, node, node)
def test_pair_linear(basis, w, v):
    d = basis.d
    a, b = color_pair_ncc1(w, basis), color_pair_ncc1(v, basis)
    s = color_pair_ncc1((w[0] + v[0], w[1] + v[1]), basis)
    assert s == ((a[0] + b[0]) % d, (a[1] + b[1]) % d)


@given(basis_st, node, node)
def test_same_color_iff_lattice_difference(basis, w, v):
    dec = decompose_ncc2(basis)
    same = color_ncc2(w, dec) == color_ncc2(v, dec)
    assert same == basis.contains((w[0] - v[0], w[1] - v[1]))


@settings(max_examples=30)
@given(basis_st, node)
def test_window_matches_pointwise(basis, origin):
    pal = build_palette(basis)
    dec = decompose_ncc2(basis)
    w1 = color_window(origin, 7, 5, basis, Method.NCC1)
    w2 = color_window(origin, 7, 5, basis, Method.NCC2)
    for n in w1.nodes():
        assert w1.color_at(n) == color_ncc1(n, pal)
        assert w2.color_at(n) == color_ncc2(n, dec)
    assert w1.colors.shape == (5, 7)


def test_window_distinct():
    w = color_window((0, 0), 42, 42, EXAMPLE)
    assert w.distinct_colors() == 42 == w.num_colors
    assert np.all((w.colors >= 0) & (w.colors < 42))
