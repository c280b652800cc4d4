import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grid_chroma.hops import (
    RadioParams, are_neighbors, as_fraction, build_hop_field, hops_between, lemma_bounds_check,
    neighbor_offsets, within_range_sq,
)

from conftest import oracle_hops, oracle_neighbors

RANGES = ["1", "1.5", "2", "2.5", "3", "3.5", "4.2"]
params_st = st.builds(RadioParams, st.sampled_from(RANGES), st.integers(1, 3))


def test_params_validation():
    with pytest.raises(ValueError):
        RadioParams("0.5", 1)
    with pytest.raises(ValueError):
        RadioParams("2", 0)
    p = RadioParams(1.5, 2)
    assert p.range == Fraction(3, 2)
    assert p.reach == 3
    assert not RadioParams("1.4", 1).above_sqrt2
    assert RadioParams("1.5", 1).above_sqrt2


def test_as_fraction():
    assert as_fraction(0.1) == Fraction(1, 10)
    assert as_fraction("2.5") == Fraction(5, 2)


def test_exact_neighbor_boundary():
    # (3,4) lies exactly at distance 5
    assert within_range_sq(25, Fraction(5))
    assert not within_range_sq(26, Fraction(5))
    assert are_neighbors((0, 0), (3, 4), RadioParams("5", 1))
    assert not are_neighbors((0, 0), (0, 0), RadioParams("5", 1))


@pytest.mark.parametrize("r,count", [("1", 4), ("1.5", 8), ("2", 12), ("2.5", 20), ("3", 28)])
def test_neighbor_counts(r, count):
    assert len(neighbor_offsets(Fraction(r))) == count


def test_field_matches_oracle(radio):
    field = build_hop_field(radio)
    b = field.radius_box
    ref = oracle_hops(radio.range, radio.hops, b)
    for y in range(-b, b + 1):
        for x in range(-b, b + 1):
            assert field.hops((x, y)) == ref.get((x, y)), (x, y)


def test_reachable_sorted():
    field = build_hop_field(RadioParams("1", 2))
    entries = field.reachable()
    assert entries[0] == ((1, 0), 1)
    assert len(entries) == 12
    assert [h for _, h in entries] == sorted(h for _, h in entries)


def test_hops_outside():
    field = build_hop_field(RadioParams("1", 2))
    assert field.hops((3, 0)) is None
    assert field.hops((100, 100)) is None
    assert field.hop_of((3, 0)) == math.inf
    assert hops_between((5, 5), (6, 6), field) == 2


@given(params_st, st.integers(-12, 12), st.integers(-12, 12))
def test_symmetry(params, x, y):
    field = build_hop_field(params)
    assert field.hops((x, y)) == field.hops((-x, -y)) == field.hops((y, x)) == field.hops((-y, x))


@given(params_st, st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8))
def test_triangle(params, ax, ay, bx, by):
    field = build_hop_field(params)
    ab = field.hop_of((ax, ay))
    bc = field.hop_of((bx, by))
    ac = field.hop_of((ax + bx, ay + by))
    # only meaningful when the sum is within the tracked range
    if ab + bc <= params.hops:
        assert ac <= ab + bc


@given(st.integers(1, 3), st.integers(-10, 10), st.integers(-10, 10))
def test_monotone_in_range(h, x, y):
    prev = math.inf
    for r in RANGES:
        cur = build_hop_field(RadioParams(r, h)).hop_of((x, y))
        assert cur <= prev
        prev = cur


@settings(max_examples=300)
@given(params_st, st.integers(-15, 15), st.integers(-15, 15))
def test_lemma_bounds(params, x, y):
    assert lemma_bounds_check((x, y), params, build_hop_field(params))


def test_oracle_neighbors_agree():
    for r in RANGES:
        assert sorted(map(tuple, neighbor_offsets(Fraction(r)))) == sorted(oracle_neighbors(Fraction(r)))
