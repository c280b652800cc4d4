import pytest

from grid_chroma.bounds import (
    asymptotic_ratio, color_bounds, lower_bound, near_hexagonal_basis, near_square_basis, small_range_bound,
    upper_bound,
)
from grid_chroma.hops import RadioParams
from grid_chroma.published import RANGES
from grid_chroma.validity import check_vc1

# DERIVED: evaluated by hand-written float arithmetic, independent of the package
LOWER = {("2", 3): 2.6745564342624806, ("7", 3): 243.18780654171712}
UPPER = {("7", 3): 456.4441150035186, ("1", 3): 20.865296445925424,
         ("2", 2): 30.34168783478959, ("2", 3): 54.49062303522455}


@pytest.mark.parametrize("key", LOWER)
def test_lower_frozen(key):
    assert lower_bound(RadioParams(*key)) == pytest.approx(LOWER[key], rel=1e-12)


def test_lower_irrational_range():
    import math
    from fractions import Fraction
    r = Fraction(repr(2 + math.sqrt(2)))
    assert lower_bound(RadioParams(r, 1)) == pytest.approx(3.4641016151377535, rel=1e-9)


@pytest.mark.parametrize("key", UPPER)
def test_upper_frozen(key):
    assert upper_bound(RadioParams(*key)) == pytest.approx(UPPER[key], rel=1e-12)


def test_small_range():
    p = RadioParams("1", 3)
    assert small_range_bound(p) == 16
    b = color_bounds(p)
    assert b.lower is None and b.s_s == 16
    with pytest.raises(ValueError):
        lower_bound(p)


@pytest.mark.parametrize("key,vectors,det", [
    (("2", 3), ((8, 0), (4, 6)), 48),
    (("7", 3), ((22, 0), (11, 19)), 418),
    (("2", 1), ((4, 0), (2, 2)), 8),
])
def test_near_hex_frozen(key, vectors, det):
    b = near_hexagonal_basis(RadioParams(*key))
    assert (tuple(b.u1), tuple(b.u2)) == vectors
    assert b.d == det


def test_near_square():
    b = near_square_basis(RadioParams("2", 1))
    assert b.d == 9 and tuple(b.u1) == (3, 0)


@pytest.mark.parametrize("r", RANGES)
@pytest.mark.parametrize("h", [1, 2, 3])
def test_constructions_valid(r, h):
    p = RadioParams(r, h)
    assert check_vc1(near_square_basis(p), p)
    assert check_vc1(near_hexagonal_basis(p), p)


def test_ratio_frozen():
    assert asymptotic_ratio(RadioParams("7", 3), 352) == pytest.approx(0.9216657358491986, rel=1e-12)
    assert asymptotic_ratio(RadioParams("1", 2), 5) == pytest.approx(1.4433756729740645, rel=1e-12)
    with pytest.raises(ValueError):
        asymptotic_ratio(RadioParams("1", 2), 0)
