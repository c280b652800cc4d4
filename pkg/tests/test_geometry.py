import pytest
from hypothesis import given, strategies as st

from grid_chroma.geometry import (
    GeneratorBasis, IntVec2, SingularBasisError, det, euclid_mod, gauss_reduce, gcd_nonneg, is_reduced,
)

from conftest import oracle_shortest_norm2

coord = st.integers(-30, 30)


def bases():
    return st.tuples(coord, coord, coord, coord).filter(lambda t: t[0] * t[3] - t[1] * t[2] != 0)


def test_vector_ops():
    a, b = IntVec2(3, -2), IntVec2(1, 4)
    assert a + b == (4, 2)
    assert a - b == (2, -6)
    assert -a == (-3, 2)
    assert 3 * a == (9, -6) and a * 3 == (9, -6)
    assert a.dot(b) == -5
    assert a.norm2() == 13
    assert det(a, b) == 14


def test_euclid_mod_negative():
    assert euclid_mod(-7, 5) == 3
    assert euclid_mod(-7, -5) == 3
    assert euclid_mod(10, 5) == 0
    with pytest.raises(ValueError):
        euclid_mod(3, 0)


def test_gcd():
    assert gcd_nonneg(-6, 4) == 2
    assert gcd_nonneg(0, -5) == 5
    with pytest.raises(ValueError):
        gcd_nonneg(0, 0)


def test_sign_normalization():
    b = GeneratorBasis.from_coords(-3, 6, 6, 2)
    assert b.d == 42
    assert b.u1 == (3, -6) and b.u2 == (6, 2)


def test_singular():
    with pytest.raises(SingularBasisError):
        GeneratorBasis.from_coords(2, 4, 1, 2)
    with pytest.raises(SingularBasisError):
        GeneratorBasis.from_coords(0, 0, 1, 2)


def test_contains():
    b = GeneratorBasis.from_coords(6, 2, -3, 6)
    assert b.contains(b.point(3, -2))
    assert not b.contains((1, 0))


def test_reduce_known():
    r = gauss_reduce(GeneratorBasis.from_coords(1, 0, 1000, 1))
    assert {tuple(r.u1), tuple(-r.u1)} >= {(1, 0)}
    assert r.u2.norm2() == 1
    assert is_reduced(GeneratorBasis.from_coords(2, 1, -1, 2))
    assert not is_reduced(GeneratorBasis.from_coords(2, 0, 2, 1))


@given(bases())
def test_reduce_invariants(t):
    b = GeneratorBasis.from_coords(*t)
    r = gauss_reduce(b)
    assert is_reduced(r)
    assert r.d == b.d
    # same lattice both ways
    assert b.contains(r.u1) and b.contains(r.u2)
    assert r.contains(b.u1) and r.contains(b.u2)
    assert gauss_reduce(r) == r


@given(bases())
def test_reduce_shortest(t):
    b = GeneratorBasis.from_coords(*t)
    r = gauss_reduce(b)
    assert r.u1.norm2() == oracle_shortest_norm2(b.u1, b.u2, span=70)


@given(st.integers(-10**6, 10**6), st.integers(1, 500).flatmap(lambda m: st.sampled_from([m, -m])))
def test_euclid_mod_congruence(x, m):
    r = euclid_mod(x, m)
    assert 0 <= r < abs(m)
    assert (x - r) % abs(m) == 0
